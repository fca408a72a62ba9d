#include "g2skein/askey_wilson/action.hpp"

#include <stdexcept>

namespace g2skein::askey_wilson {

using exact::Var;

namespace {

const RationalExpr kOne(1);
RationalExpr qq(int k) { return RationalExpr::q_quarter(k); }

// Entries of the prop-mode k2 display, written for slot b (0 -> k2, 1 -> k4).
std::vector<ActionEntry> prop_k2(int b) {
  const NIndex F = NIndex::formal();
  const RationalExpr xb = RationalExpr::var(b == 0 ? Var::x0 : Var::x1);
  const RationalExpr xo = RationalExpr::var(b == 0 ? Var::x1 : Var::x0);
  const RationalExpr xb2 = xb * xb;
  const RationalExpr pre = RationalExpr::i() * qq(-1) / (kOne - xb2);
  auto lab = [b](int e) { return b == 0 ? std::pair{e, 0} : std::pair{0, e}; };
  auto nu = [&](int e, int dn) { return nu_ratio(lab(e).first, lab(e).second, dn, F); };
  const RationalExpr lowered = qq(-2) * xb;
  // gamma is symmetric in its two slots; lambda puts the shifted one first.
  const RationalExpr g_over_l = gamma(F, lowered, xo) / lambda(F, lowered, xo);
  return {
      {1, lab(-1).first, lab(-1).second, pre * xb2 * nu(-1, 1)},
      {-1, lab(1).first, lab(1).second, -pre * lambda(F, xb, xo) * nu(1, -1)},
      {0, lab(-1).first, lab(-1).second, pre * xb2 * g_over_l * nu(-1, 0)},
      {0, lab(1).first, lab(1).second, -pre * nu(1, 0)},
  };
}

std::vector<ActionEntry> prop_k6() {
  const NIndex F = NIndex::formal();
  const RationalExpr x0 = RationalExpr::var(Var::x0);
  const RationalExpr x1 = RationalExpr::var(Var::x1);
  const RationalExpr u = RationalExpr::var(Var::u);
  const RationalExpr pre = kOne / ((kOne - x0 * x0) * (kOne - x1 * x1));
  return {
      {1, -1, -1, pre * nu_ratio(-1, -1, 1, F) * qq(-10) / u * (x0 * x0 * x1 * x1 - u * qq(8)).pow(2)},
      {0, 1, -1, -pre * qq(-6) / u * nu_ratio(1, -1, 0, F) * (x1 * x1 - u * qq(4)).pow(2)},
      {0, -1, 1, -pre * qq(-6) / u * nu_ratio(-1, 1, 0, F) * (x0 * x0 - u * qq(4)).pow(2)},
      {-1, 1, 1, pre * nu_ratio(1, 1, -1, F) * qq(-2) / u * (kOne - u).pow(2)},
  };
}

std::vector<ActionEntry> corollary_k2(int b) {
  const RationalExpr xb = RationalExpr::var(b == 0 ? Var::x0 : Var::x1);
  const RationalExpr xo = RationalExpr::var(b == 0 ? Var::x1 : Var::x0);
  const RationalExpr u = RationalExpr::var(Var::u);
  const RationalExpr xb2 = xb * xb;
  const RationalExpr X = xb2 * xo * xo;
  auto lab = [b](int e) { return b == 0 ? std::pair{e, 0} : std::pair{0, e}; };
  const RationalExpr up = -qq(-6) / u * xb2 * (kOne - xo * xo / (u * qq(4))).pow(2) /
                          ((kOne - X / (u * u * qq(12))) * (kOne - X / (u * u * qq(8))));
  const RationalExpr down = -qq(2) / u * (kOne - u).pow(2) * xb2 / ((kOne - xb2) * (kOne - qq(4) * xb2));
  const RationalExpr split = (kOne - xb2 / u).pow(2) * (kOne - X / u).pow(2) /
                             ((kOne - xb2) * (kOne - qq(4) * xb2) * (kOne - X / (u * u * qq(4))) * (kOne - X / (u * u)));
  return {
      {1, lab(-1).first, lab(-1).second, up},
      {-1, lab(1).first, lab(1).second, down},
      {0, lab(-1).first, lab(-1).second, kOne},
      {0, lab(1).first, lab(1).second, split},
  };
}

std::vector<ActionEntry> corollary_k6() {
  const RationalExpr x0 = RationalExpr::var(Var::x0);
  const RationalExpr x1 = RationalExpr::var(Var::x1);
  const RationalExpr u = RationalExpr::var(Var::u);
  const RationalExpr x02 = x0 * x0;
  const RationalExpr x12 = x1 * x1;
  const RationalExpr down = (kOne - u).pow(2) * (kOne - x02 * x12 * qq(4) / u).pow(2) /
                            ((kOne - x02) * (kOne - qq(4) * x02) * (kOne - x12) * (kOne - qq(4) * x12));
  auto diag = [&](const RationalExpr& xb2) {
    return -u * qq(2) * (kOne - xb2 / u).pow(2) / ((kOne - xb2) * (kOne - qq(4) * xb2));
  };
  return {
      {1, -1, -1, kOne},
      {0, 1, -1, diag(x02)},
      {0, -1, 1, diag(x12)},
      {-1, 1, 1, down},
  };
}

}  // namespace

RationalExpr ActionTermList::coefficient(int dn, int e0, int e1) const {
  RationalExpr sum;
  for (const auto& e : entries) {
    if (e.dn == dn && e.e0 == e0 && e.e1 == e1) sum += e.coeff;
  }
  return sum;
}

std::string ActionTermList::to_string() const {
  std::string out;
  for (const auto& e : entries) {
    out += "(" + n.label(e.dn) + ", " + std::to_string(e.e0) + ", " + std::to_string(e.e1) + ") : " +
           e.coeff.to_string() + "\n";
  }
  return out;
}

ActionTermList pbar_action(int curve, ActionMode mode, const NIndex& N) {
  const RationalExpr x0 = RationalExpr::var(Var::x0);
  const RationalExpr x1 = RationalExpr::var(Var::x1);
  std::vector<ActionEntry> raw;
  switch (curve) {
    case 1: raw = {{0, 0, 0, exact::ch(x0)}}; break;
    case 5: raw = {{0, 0, 0, exact::ch(x1)}}; break;
    case 3: raw = {{0, 0, 0, -exact::ch(qq(-2) * x0 * x1 / RationalExpr::var(Var::u))}}; break;
    case 2: raw = mode == ActionMode::prop ? prop_k2(0) : corollary_k2(0); break;
    case 4: raw = mode == ActionMode::prop ? prop_k2(1) : corollary_k2(1); break;
    case 6: raw = mode == ActionMode::prop ? prop_k6() : corollary_k6(); break;
    default: throw std::invalid_argument("pbar_action: curve index must be 1..6");
  }
  ActionTermList out{N, {}};
  for (auto& e : raw) {
    if (!N.is_formal() && N.value() + e.dn < 0) continue;
    e.coeff = N.specialize(e.coeff);
    out.entries.push_back(std::move(e));
  }
  return out;
}

}  // namespace g2skein::askey_wilson
