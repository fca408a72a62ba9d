#include "g2skein/askey_wilson/verify.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

#include "g2skein/qops/library.hpp"

namespace g2skein::askey_wilson {

using exact::Var;

namespace {

const RationalExpr kOne(1);
RationalExpr qq(int k) { return RationalExpr::q_quarter(k); }
RationalExpr X() { return RationalExpr::var(Var::x); }
RationalExpr X0() { return RationalExpr::var(Var::x0); }
RationalExpr X1() { return RationalExpr::var(Var::x1); }
std::string str(int v) { return std::to_string(v); }

const RationalExpr& P(int n) { return aw_star(n).poly; }

// P_n(x; q^(e0/2) x0, q^(e1/2) x1)
RationalExpr shifted_star(int n, int e0, int e1) {
  exact::Assignment a;
  if (e0 != 0) a.emplace(Var::x0, qq(2 * e0) * X0());
  if (e1 != 0) a.emplace(Var::x1, qq(2 * e1) * X1());
  return a.empty() ? P(n) : P(n).substitute(a);
}

CheckRecord compare(std::string suite, std::string id, std::vector<std::pair<std::string, std::string>> params,
                    const RationalExpr& lhs, const RationalExpr& rhs, Comparator& cmp) {
  const bool ok = cmp.equal(lhs, rhs);
  return check::make_record(std::move(suite), std::move(id), std::move(params), ok, &lhs, &rhs);
}

}  // namespace

CheckRecord verify_eigen(int n, Comparator& cmp, bool perturb) {
  const RationalExpr lhs = qops::build_curve(3).apply(P(n));
  const RationalExpr ev = -exact::ch(qq(-4 * n + (perturb ? 2 : -2)) * X0() * X1());
  return compare("eigen", perturb ? "eigen-perturbed-n" + str(n) : "eigen-n" + str(n), {{"n", str(n)}}, lhs, ev * P(n),
                 cmp);
}

CheckRecord verify_star_vs_general(int n, Comparator& cmp) {
  return compare("recurrence", "star-vs-4phi3-n" + str(n), {{"n", str(n)}}, P(n),
                 aw_general(n, AWParams::star()).poly, cmp);
}

CheckRecord verify_three_term(int n, Comparator& cmp) {
  const NIndex N = NIndex::at(n);
  RationalExpr rhs = P(n + 1) + beta(N, X0(), X1()) * P(n);
  if (n >= 1) rhs += gamma(N, X0(), X1()) * P(n - 1);
  return compare("recurrence", "three-term-n" + str(n), {{"n", str(n)}}, exact::ch(X()) * P(n), rhs, cmp);
}

std::vector<CheckRecord> verify_connection(int n, Comparator& cmp) {
  const NIndex N = NIndex::at(n);
  std::vector<CheckRecord> out;
  for (int b : {0, 1}) {
    const RationalExpr lhs = shifted_star(n, b == 0 ? 1 : 0, b == 1 ? 1 : 0);
    RationalExpr rhs = P(n);
    if (n >= 1) rhs += (b == 0 ? lambda(N, X0(), X1()) : lambda(N, X1(), X0())) * P(n - 1);
    out.push_back(compare("connection", (b == 0 ? "connection-x0-n" : "connection-x1-n") + str(n),
                          {{"n", str(n)}, {"shifted", b == 0 ? "x0" : "x1"}}, lhs, rhs, cmp));
  }
  return out;
}

std::vector<CheckRecord> verify_beta_lambda_gamma(std::optional<int> n, Comparator& cmp) {
  const NIndex N = n ? NIndex::at(*n) : NIndex::formal();
  const std::string tag = n ? "n" + str(*n) : "formal";
  std::vector<CheckRecord> out;
  for (int b : {0, 1}) {
    const RationalExpr xa = b == 0 ? X0() : X1();
    const RationalExpr xo = b == 0 ? X1() : X0();
    const RationalExpr lhs = beta(N, xa, xo) + exact::ch(xa * xa * qq(2));
    const RationalExpr rhs = lambda(N.shifted(1), xa, xo) + gamma(N, xa, xo) / lambda(N, xa, xo);
    out.push_back(compare("blg", (b == 0 ? "identity-" : "transposed-") + tag,
                          {{"n", n ? str(*n) : "formal"}, {"orientation", b == 0 ? "x0" : "x1"}}, lhs, rhs, cmp));
  }
  return out;
}

std::vector<CheckRecord> verify_kalnins_actions(int n, Comparator& cmp) {
  const AWParams p = AWParams::symbolic();
  const RationalExpr& Pn = aw_general(n, p).poly;
  std::vector<CheckRecord> out;
  const std::vector<std::pair<std::string, std::string>> params{{"n", str(n)}, {"parameters", "a,b,c,d symbolic"}};
  {
    const RationalExpr lhs = qops::build_kalnins(qops::Kalnins::m, {p.a, p.b, p.c, p.d}).apply(Pn);
    const RationalExpr rhs = qq(-2 * n) * (kOne - p.a * p.b * qq(4 * (n - 1))) *
                             aw_general(n, p.scaled(-2, -2, 2, 2)).poly;
    out.push_back(compare("kalnins", "m-n" + str(n), params, lhs, rhs, cmp));
  }
  {
    const RationalExpr lhs = qops::build_kalnins(qops::Kalnins::l, {p.a, p.b, p.c, p.d}).apply(Pn);
    const RationalExpr rhs = n == 0 ? RationalExpr()
                                    : -qq(-2 * n) * (kOne - qq(4 * n)) * aw_general(n - 1, p.scaled(2, 2, 2, 2)).poly;
    out.push_back(compare("kalnins", "l-n" + str(n), params, lhs, rhs, cmp));
  }
  {
    const AWParams up = p.scaled(2, 2, 2, 2);
    const RationalExpr lhs = qops::build_kalnins(qops::Kalnins::lstar, {up.a, up.b, up.c, up.d})
                                 .apply(aw_general(n, up).poly);
    const RationalExpr rhs = -qq(-2 * (n + 1)) * (kOne - p.a * p.b * p.c * p.d * qq(4 * n)) *
                             aw_general(n + 1, p).poly;
    out.push_back(compare("kalnins", "lstar-n" + str(n), params, lhs, rhs, cmp));
  }
  return out;
}

std::vector<CheckRecord> verify_dhat_on_aw(int n, Comparator& cmp) {
  std::vector<CheckRecord> out;
  const RationalExpr x02 = X0() * X0();
  const RationalExpr x12 = X1() * X1();
  const RationalExpr qn = qq(4 * n);
  for (int a : {1, -1}) {
    for (int b : {1, -1}) {
      const RationalExpr lhs = qops::build_dhat(a, b).apply(shifted_star(n, a, b));
      RationalExpr rhs;
      if (a == 1 && b == 1) {
        if (n >= 1) rhs = qq(-4 * n - 2) * (kOne - qn).pow(2) * P(n - 1);
      } else if (a == 1) {
        rhs = qq(-4 * n - 6) * (x12 - qn * qq(4)).pow(2) * P(n);
      } else if (b == 1) {
        rhs = qq(-4 * n - 6) * (x02 - qn * qq(4)).pow(2) * P(n);
      } else {
        rhs = qq(-4 * n - 10) * (x02 * x12 - qn * qq(8)).pow(2) * P(n + 1);
      }
      out.push_back(compare("dhat", "dhat(" + str(a) + "," + str(b) + ")-n" + str(n),
                            {{"n", str(n)}, {"a", str(a)}, {"b", str(b)}}, lhs, rhs, cmp));
    }
  }
  return out;
}

namespace {

using Key = std::tuple<int, int, int>;

std::map<Key, RationalExpr> as_map(const ActionTermList& list) {
  std::map<Key, RationalExpr> m;
  for (const auto& e : list.entries) m[{e.dn, e.e0, e.e1}] += e.coeff;
  return m;
}

// Same coefficients on the union of keys, absent meaning zero.
bool same_lists(const std::map<Key, RationalExpr>& a, const std::map<Key, RationalExpr>& b, Comparator& cmp,
                std::string& detail) {
  std::map<Key, std::pair<RationalExpr, RationalExpr>> all;
  for (const auto& [k, v] : a) all[k].first = v;
  for (const auto& [k, v] : b) all[k].second = v;
  for (const auto& [k, v] : all) {
    if (!cmp.equal(v.first, v.second)) {
      detail = "entry (" + str(std::get<0>(k)) + ", " + str(std::get<1>(k)) + ", " + str(std::get<2>(k)) +
               ") differs";
      return false;
    }
  }
  return true;
}

}  // namespace

CheckRecord verify_prop_vs_corollary(int curve, Comparator& cmp) {
  const NIndex F = NIndex::formal();
  std::string detail;
  const bool ok = same_lists(as_map(pbar_action(curve, ActionMode::prop, F)),
                             as_map(pbar_action(curve, ActionMode::corollary, F)), cmp, detail);
  CheckRecord r = check::make_record("prop", "prop-vs-corollary-k" + str(curve) + "-formal",
                                     {{"curve", str(curve)}, {"n", "formal"}}, ok);
  r.detail = detail;
  return r;
}

CheckRecord verify_prop_action(int curve, int n, Comparator& cmp) {
  const qops::Operator A = qops::build_curve(curve);
  const NIndex N = NIndex::at(n);
  std::map<Key, RationalExpr> derived;
  std::string detail;
  std::map<std::pair<int, int>, bool> labels;
  for (const auto& [w, c] : A.terms()) labels[{w.e0, w.e1}] = true;
  for (const auto& [label, unused] : labels) {
    const auto [e0, e1] = label;
    RationalExpr rest = A.part(e0, e1).apply(P(n));
    // Triangular re-expansion: P_m is monic of degree m in x.
    for (int m = n + 1; m >= std::max(n - 1, 0); --m) {
      for (const auto& d : rest.den_factors()) {
        if (d.poly.depends_on(Var::x)) {
          detail = "image of label (" + str(e0) + ", " + str(e1) + ") keeps a pole in x";
          break;
        }
      }
      if (!detail.empty()) break;
      const RationalExpr c = rest.coefficient(Var::x, m);
      if (c.is_zero()) continue;
      rest -= c * P(m);
      derived[{m - n, e0, e1}] += c * nu_ratio(e0, e1, m - n, N);
    }
    if (detail.empty() && !cmp.is_zero(rest)) detail = "nonzero residual for label (" + str(e0) + ", " + str(e1) + ")";
    if (!detail.empty()) break;
  }
  bool ok = detail.empty();
  if (ok) ok = same_lists(derived, as_map(pbar_action(curve, ActionMode::prop, N)), cmp, detail);
  if (ok) {
    ok = same_lists(derived, as_map(pbar_action(curve, ActionMode::corollary, N)), cmp, detail);
    if (!ok) detail = "corollary: " + detail;
  } else if (!detail.empty() && detail.rfind("entry", 0) == 0) {
    detail = "prop: " + detail;
  }
  CheckRecord r = check::make_record("prop", "prop-action-k" + str(curve) + "-n" + str(n),
                                     {{"curve", str(curve)}, {"n", str(n)}}, ok);
  r.detail = detail;
  return r;
}

CheckRecord verify_nu_telescoping(int e0, int e1, int dn, Comparator& cmp) {
  // nu_n(x')/nu_m(x) * nu_m(x)/nu_n(x') with the second read at shifted x.
  const NIndex F = NIndex::formal();
  const RationalExpr there = nu_ratio(e0, e1, dn, F);
  // Back: index m = n + dn at arguments x' to index n at x', i.e. the
  // reverse shift from x' evaluated with x -> x'.
  exact::Assignment to_shifted{{Var::x0, qq(2 * e0) * X0()}, {Var::x1, qq(2 * e1) * X1()},
                               {Var::u, RationalExpr::var(Var::u) * qq(4 * dn)}};
  const RationalExpr back = nu_ratio(-e0, -e1, -dn, F).substitute(to_shifted);
  const RationalExpr lhs = there * back;
  return compare("prop", "nu-loop-(" + str(e0) + "," + str(e1) + "," + str(dn) + ")",
                 {{"e0", str(e0)}, {"e1", str(e1)}, {"dn", str(dn)}}, lhs, kOne, cmp);
}

}  // namespace g2skein::askey_wilson
