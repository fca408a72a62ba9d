#include "g2skein/qops/verify.hpp"

#include <stdexcept>
#include <string>

namespace g2skein::qops {

using exact::Var;

namespace {

RationalExpr X() { return RationalExpr::var(Var::x); }
RationalExpr X0() { return RationalExpr::var(Var::x0); }
RationalExpr X1() { return RationalExpr::var(Var::x1); }
RationalExpr qq(int k) { return RationalExpr::q_quarter(k); }
const RationalExpr kOne(1);

Operator mult(const RationalExpr& c) { return Operator::multiplication(c); }

const char* hecke_name(Hecke h) {
  switch (h) {
    case Hecke::T0: return "T0";
    case Hecke::T1: return "T1";
    case Hecke::U0: return "U0";
    case Hecke::U1: return "U1";
  }
  return "?";
}

CheckRecord operator_record(std::string suite, std::string id, const Operator& lhs, const Operator& rhs,
                            Comparator& cmp, std::vector<std::pair<std::string, std::string>> params = {}) {
  const bool ok = equal(lhs, rhs, cmp);
  CheckRecord r = check::make_record(std::move(suite), std::move(id), std::move(params), ok);
  if (!ok) {
    r.lhs = check::clip(lhs.to_string());
    r.rhs = check::clip(rhs.to_string());
  }
  return r;
}

Operator m_hat(const RationalExpr& a, const RationalExpr& b, const RationalExpr& c, const RationalExpr& d) {
  return build_kalnins(Kalnins::m, {a, b, c, d});
}

// The DAHA element whose ch() the curve operator restricts to.
Operator paired_element(int a) {
  const RationalExpr I = RationalExpr::i();
  switch (a) {
    case 1: return I * build_hecke(Hecke::T0);
    case 3: return build_hecke(Hecke::T1) * build_hecke(Hecke::T0);
    case 5: return (I * qq(-2)) * build_hecke(Hecke::T1);
    case 2: return I * build_hecke(Hecke::U0);
    case 4: return (I * qq(-2)) * build_hecke(Hecke::U1);
    case 6: return build_hecke(Hecke::U1) * build_hecke(Hecke::U0);
    default: throw std::invalid_argument("curve index must be 1..6");
  }
}

bool is_symmetric(const RationalExpr& f, Comparator& cmp) {
  return cmp.equal(f.substitute({{Var::x, X().inverse()}}), f);
}

bool pole_free_in_x(const RationalExpr& f) {
  exact::LaurentPolynomial dx(1);
  bool any = false;
  for (const auto& d : f.den_factors()) {
    if (!d.poly.depends_on(Var::x)) continue;
    any = true;
    dx = dx * d.poly.pow(static_cast<unsigned>(d.mult));
  }
  return !any || f.num().divide_exact(dx).has_value();
}

}  // namespace

bool equal(const Operator& a, const Operator& b, Comparator& cmp) {
  const Operator diff = a - b;
  for (const auto& [w, c] : diff.terms()) {
    if (!cmp.is_zero(c)) return false;
  }
  return true;
}

Operator hecke_relation(Hecke which, bool perturb) {
  const RationalExpr I = RationalExpr::i();
  const RationalExpr x = X();
  const RationalExpr x0 = X0();
  const RationalExpr x1 = X1();
  Operator op = build_hecke(which);
  if (perturb) {
    Operator scaled;
    for (const auto& [w, c] : op.terms()) scaled += Operator::word(w, w.reflect ? qq(4) * c : c);
    op = scaled;
  }
  switch (which) {
    case Hecke::T0: return (op + mult(I * x0)) * (op + mult(I / x0));
    case Hecke::T1: return (op + mult(I * qq(-2) * x1)) * (op + mult(I * qq(2) / x1));
    case Hecke::U0: {
      const Operator G = build_KG(KGKind::G, 0, 0);
      const Operator f1 = (qq(-1) * x / (qq(2) - x)) * (G - build_KG(KGKind::K, 0, 0, x.inverse()));
      const Operator f2 = (qq(-1) / (qq(2) - x)) * (x * G - qq(2) * build_KG(KGKind::K, 0, 0, x / qq(4)));
      return (op + f1) * (op + f2);
    }
    case Hecke::U1: {
      const Operator e1 = (-qq(1) / (kOne - qq(2) * x)) *
                          (build_KG(KGKind::G, 0, 1) - (qq(2) * x) * build_KG(KGKind::K, 0, 1));
      const Operator e2 = (-qq(3) / (qq(6) - x)) *
                          (build_KG(KGKind::G, 0, 1, x / qq(4)) - build_KG(KGKind::K, 0, 1, qq(4) / x));
      return (op + e1) * (op + e2);
    }
  }
  throw std::invalid_argument("unknown Hecke operator");
}

std::vector<CheckRecord> verify_hecke_relations(Comparator& cmp) {
  std::vector<CheckRecord> out;
  for (Hecke h : {Hecke::T0, Hecke::T1, Hecke::U0, Hecke::U1}) {
    out.push_back(operator_record("hecke", std::string("relation-") + hecke_name(h), hecke_relation(h), Operator(), cmp,
                                  {{"operator", hecke_name(h)}}));
  }
  return out;
}

CheckRecord hecke_negative_control(Comparator& cmp) {
  return operator_record("hecke", "relation-T0-perturbed", hecke_relation(Hecke::T0, true), Operator(), cmp,
                         {{"operator", "T0"}, {"perturbation", "reflection part scaled by q"}});
}

namespace {

Operator dhat_rhs_11(const RationalExpr& c, const RationalExpr& d) {
  return -qq(-2) * (build_kalnins(Kalnins::l, {kOne, kOne, c, d}) * m_hat(-qq(2), -qq(2), c, d));
}

Operator dhat_rhs_mixed(const RationalExpr& xb, bool swapped) {
  const RationalExpr xb2 = xb * xb;
  const RationalExpr x0m2 = X0().pow(-2);
  const Operator first = m_hat(-qq(4), -qq(4) / xb2, -x0m2, RationalExpr(-1));
  const Operator second = m_hat(-qq(2), -qq(6) / xb2, -qq(-2) * x0m2, -qq(2));
  return (qq(-6) * xb2 * xb2) * (swapped ? second * first : first * second);
}

Operator dhat_rhs_mm() {
  const RationalExpr x02 = X0() * X0();
  const RationalExpr x12 = X1() * X1();
  const Operator ls = build_kalnins(Kalnins::lstar, {-qq(4) / x02, -qq(4) / x12, -qq(4), -qq(4)});
  const Operator m = m_hat(-qq(6) / x02, -qq(6) / x12, -qq(2), -qq(2));
  return (-qq(-8) * x02 * x02 * x12 * x12) * (ls * m);
}

}  // namespace

std::vector<CheckRecord> verify_dhat_factorizations(Comparator& cmp) {
  std::vector<CheckRecord> out;
  const Operator d11 = build_dhat(1, 1);
  out.push_back(operator_record("factorize", "dhat(1,1)-symbolic-cd", d11,
                                dhat_rhs_11(RationalExpr::var(Var::c), RationalExpr::var(Var::d)), cmp,
                                {{"c", "c"}, {"d", "d"}}));
  out.push_back(operator_record("factorize", "dhat(1,1)-fixed-cd", d11,
                                dhat_rhs_11(-X0().pow(-2), RationalExpr(exact::Scalar(mpq_class(3), mpq_class(2)))), cmp,
                                {{"c", "-x0^-2"}, {"d", "3+2*I"}}));
  out.push_back(operator_record("factorize", "dhat(1,-1)", build_dhat(1, -1), dhat_rhs_mixed(X1(), false), cmp));
  out.push_back(operator_record("factorize", "dhat(-1,1)", build_dhat(-1, 1), dhat_rhs_mixed(X0(), false), cmp));
  out.push_back(operator_record("factorize", "dhat(-1,-1)", build_dhat(-1, -1), dhat_rhs_mm(), cmp));
  return out;
}

CheckRecord dhat_negative_control(Comparator& cmp) {
  return operator_record("factorize", "dhat(1,-1)-swapped-order", build_dhat(1, -1), dhat_rhs_mixed(X1(), true), cmp);
}

CheckRecord verify_k6_reconstruction(Comparator& cmp) {
  Operator sum;
  for (int a : {1, -1}) {
    for (int b : {1, -1}) {
      const int sign = ((a + b) / 2 + 1) % 2 == 0 ? 1 : -1;
      sum += RationalExpr(sign) * (build_dhat(a, b) * Operator::word({false, 0, a, b}));
    }
  }
  const RationalExpr pre = kOne / ((kOne - X0() * X0()) * (kOne - X1() * X1()));
  return operator_record("factorize", "k6-from-dhat", build_curve(6), pre * sum, cmp);
}

std::vector<RationalExpr> default_test_functions() {
  const RationalExpr c = exact::ch(X());
  return {RationalExpr(1), c, c * c, X0() * c};
}

std::vector<CheckRecord> verify_mult_compatibility(int a, const std::vector<RationalExpr>& testfns, Comparator& cmp) {
  const Operator Xop = paired_element(a);
  const Operator A = build_curve(a);
  std::vector<CheckRecord> out;
  for (std::size_t idx = 0; idx < testfns.size(); ++idx) {
    const RationalExpr& f = testfns[idx];
    if (!is_symmetric(f, cmp)) throw std::invalid_argument("test function is not symmetric in x");
    const RationalExpr lhs = Xop.apply(A.apply(f));
    const RationalExpr rhs = Xop.apply(Xop.apply(f)) + f;
    const bool ok = cmp.equal(lhs, rhs);
    out.push_back(check::make_record("sym", "compat-k" + std::to_string(a) + "-f" + std::to_string(idx),
                                     {{"curve", std::to_string(a)}, {"f", check::clip(f.to_string(), 80)}}, ok, &lhs,
                                     &rhs));
  }
  return out;
}

std::vector<CheckRecord> verify_symmetric_preservation(int a, int max_deg, Comparator& cmp) {
  const Operator A = build_curve(a);
  std::vector<CheckRecord> out;
  for (int m = 0; m <= max_deg; ++m) {
    const RationalExpr g = A.apply(exact::ch(X().pow(m)));
    const bool sym = is_symmetric(g, cmp);
    const bool poles = pole_free_in_x(g);
    CheckRecord r = check::make_record("sym", "preserve-k" + std::to_string(a) + "-m" + std::to_string(m),
                                       {{"curve", std::to_string(a)}, {"m", std::to_string(m)}}, sym && poles, &g);
    if (!sym) r.detail = "image not symmetric under x -> 1/x";
    if (!poles) r.detail += (r.detail.empty() ? "" : "; ") + std::string("image has poles in x");
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace g2skein::qops
