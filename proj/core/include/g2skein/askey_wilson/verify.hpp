#pragma once

#include <optional>
#include <vector>

#include "g2skein/askey_wilson/action.hpp"
#include "g2skein/check/check.hpp"

namespace g2skein::askey_wilson {

using check::CheckRecord;
using check::Comparator;

/// A(k3) P_n = -ch(q^(-n-1/2) x0 x1) P_n. `perturb` uses q^(-n+1/2) instead.
CheckRecord verify_eigen(int n, Comparator& cmp, bool perturb = false);

/// aw_star(n) against the 4phi3 definition at the t_star parameters.
CheckRecord verify_star_vs_general(int n, Comparator& cmp);
/// ch(x) P_n = P_(n+1) + beta_n P_n + gamma_n P_(n-1); n = 0 drops the last term.
CheckRecord verify_three_term(int n, Comparator& cmp);
/// P_n(q^(1/2) x0) = P_n + lambda_n(x0, x1) P_(n-1) and the x0 <-> x1 version.
std::vector<CheckRecord> verify_connection(int n, Comparator& cmp);

/// beta_n + ch(x0^2 q^(1/2)) = lambda_(n+1) + gamma_n / lambda_n and its
/// transpose; formal index when n is empty.
std::vector<CheckRecord> verify_beta_lambda_gamma(std::optional<int> n, Comparator& cmp);

/// The three parameter-shift actions on aw_general with symbolic a, b, c, d.
std::vector<CheckRecord> verify_kalnins_actions(int n, Comparator& cmp);

/// d_{a,b} acting on the parameter-shifted P_n, all four sign pairs.
std::vector<CheckRecord> verify_dhat_on_aw(int n, Comparator& cmp);

/// Formal-index agreement of the prop-mode and corollary-mode term lists.
CheckRecord verify_prop_vs_corollary(int curve, Comparator& cmp);
/// A(k) Pbar_n recomputed from the operator: apply each shift-labelled part
/// to P_n, re-expand in P_(n-1), P_n, P_(n+1) by x-degree, attach nu ratios,
/// and compare with both term lists at this n.
CheckRecord verify_prop_action(int curve, int n, Comparator& cmp);

/// nu ratio loop: shifting out and back composes to 1.
CheckRecord verify_nu_telescoping(int e0, int e1, int dn, Comparator& cmp);

}  // namespace g2skein::askey_wilson
