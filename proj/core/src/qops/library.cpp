#include "g2skein/qops/library.hpp"

#include <stdexcept>

namespace g2skein::qops {

using exact::Var;

namespace {

RationalExpr X() { return RationalExpr::var(Var::x); }
RationalExpr xb_var(int b) { return RationalExpr::var(b == 0 ? Var::x0 : Var::x1); }
// q^(k/4)
RationalExpr qq(int k) { return RationalExpr::q_quarter(k); }
const RationalExpr kOne(1);

Operator word(const ShiftWord& w, const RationalExpr& c = kOne) { return Operator::word(w, c); }
Operator mult(const RationalExpr& c) { return Operator::multiplication(c); }

}  // namespace

RationalExpr omega(const RationalExpr& y) {
  return y * (kOne + qq(2) * y) / (qq(2) * (kOne - y * y) * (kOne - qq(2) * y));
}

Operator build_KG(KGKind kind, int n, int b, const RationalExpr& y) {
  if (b != 0 && b != 1) throw std::invalid_argument("build_KG: b must be 0 or 1");
  const RationalExpr xb = xb_var(b);
  const RationalExpr xb2 = xb * xb;
  const RationalExpr up = -xb.pow(-n) / (kOne - xb2);
  RationalExpr down;
  if (kind == KGKind::K) {
    down = xb.pow(n) * (qq(2) * y + xb2) * (qq(6) * y + xb2) / (qq(4) * y * (kOne - xb2));
  } else {
    down = xb.pow(n) * (qq(2) * y + xb2) * (qq(2) + y * xb2) / (qq(2) * y * (kOne - xb2));
  }
  const ShiftWord w_up = b == 0 ? ShiftWord::shift0(1) : ShiftWord::shift1(1);
  const ShiftWord w_down = b == 0 ? ShiftWord::shift0(-1) : ShiftWord::shift1(-1);
  return word(w_up, up) + word(w_down, down);
}

Operator build_KG(KGKind kind, int n, int b) { return build_KG(kind, n, b, X()); }

Operator build_hecke(Hecke which) {
  const RationalExpr x = X();
  const RationalExpr x0 = RationalExpr::var(Var::x0);
  const RationalExpr x1 = RationalExpr::var(Var::x1);
  const RationalExpr I = RationalExpr::i();
  const ShiftWord s = ShiftWord::reflection();
  switch (which) {
    case Hecke::T0: {
      const RationalExpr pre = I * x / (qq(2) - x);
      return pre * (word(s * ShiftWord::shift(2), -(qq(2) + x * x0 * x0) / (x * x0)) + mult(exact::ch(x0)));
    }
    case Hecke::T1: {
      const RationalExpr c = I * (kOne + qq(2) * x) * (qq(2) * x + x1 * x1) / (qq(2) * (kOne - x * x) * x1);
      return word(s, c) + mult(-c - I * qq(2) / x1);
    }
    case Hecke::U0: {
      const RationalExpr pre = qq(-1) * x / (qq(2) - x);
      return pre * (build_KG(KGKind::K, 0, 0, x.inverse()) * word(s * ShiftWord::shift(2)) -
                    build_KG(KGKind::G, 0, 0));
    }
    case Hecke::U1: {
      const Operator K = build_KG(KGKind::K, 0, 1);
      const RationalExpr pre_a = -x * (kOne + qq(2) * x) / (qq(1) * (kOne - x * x));
      const RationalExpr pre_b = qq(1) / (kOne - qq(2) * x);
      return pre_a * (K * (word(s) - Operator::identity())) +
             pre_b * (build_KG(KGKind::G, 0, 1) - (qq(2) * x) * K);
    }
  }
  throw std::invalid_argument("build_hecke: unknown operator");
}

Operator build_curve(int a) {
  const RationalExpr x = X();
  const RationalExpr x0 = RationalExpr::var(Var::x0);
  const RationalExpr x1 = RationalExpr::var(Var::x1);
  const RationalExpr iq = RationalExpr::i() * qq(-1);
  switch (a) {
    case 1: return mult(exact::ch(x0));
    case 5: return mult(exact::ch(x1));
    case 2: return iq * build_KG(KGKind::G, 0, 0);
    case 4: return iq * build_KG(KGKind::G, 0, 1);
    case 3: {
      Operator op;
      for (int eps : {1, -1}) {
        const RationalExpr xe = x.pow(eps);
        const RationalExpr w = omega(xe);
        op += word(ShiftWord::shift(2 * eps),
                   -w * x.pow(-eps) * (x0 + qq(2) * xe / x0) * (x1 + qq(2) * xe / x1));
        op += mult(w * qq(2) * exact::ch(x0) * exact::ch(x1));
      }
      return op;
    }
    case 6: {
      Operator op;
      const Operator GG = build_KG(KGKind::G, 0, 0) * build_KG(KGKind::G, 0, 1);
      for (int eps : {1, -1}) {
        const RationalExpr xe = x.pow(eps);
        const RationalExpr w = omega(xe);
        op += w * (build_KG(KGKind::K, 0, 0, xe) * build_KG(KGKind::K, 0, 1, xe) * word(ShiftWord::shift(2 * eps)));
        op -= w * GG;
      }
      return op;
    }
    default: throw std::invalid_argument("build_curve: curve index must be 1..6");
  }
}

Operator build_separating_curve() { return mult(exact::ch(X())); }

Operator build_kalnins(Kalnins kind, const KalninsParams& p) {
  const RationalExpr x = X();
  const RationalExpr xi = x.inverse();
  const RationalExpr pre = kOne / (x - xi);
  const ShiftWord up = ShiftWord::shift(1);
  const ShiftWord down = ShiftWord::shift(-1);
  switch (kind) {
    case Kalnins::m: {
      const RationalExpr a = p.a * qq(-2);
      const RationalExpr b = p.b * qq(-2);
      return word(up, -pre * xi * (kOne - a * x) * (kOne - b * x)) +
             word(down, pre * x * (kOne - a * xi) * (kOne - b * xi));
    }
    case Kalnins::l: return word(up, pre) + word(down, -pre);
    case Kalnins::lstar: {
      RationalExpr plus(1);
      RationalExpr minus(1);
      for (const RationalExpr* t : {&p.a, &p.b, &p.c, &p.d}) {
        const RationalExpr shifted = *t * qq(-2);
        plus *= kOne - shifted * x;
        minus *= kOne - shifted * xi;
      }
      return word(up, qq(-2) * pre * plus / (x * x)) + word(down, -qq(-2) * pre * x * x * minus);
    }
  }
  throw std::invalid_argument("build_kalnins: unknown operator");
}

RationalExpr dhat_b(const RationalExpr& xb, const RationalExpr& y) {
  const RationalExpr xb2 = xb * xb;
  return (qq(2) * y + xb2) * (qq(6) * y + xb2) / (qq(4) * y);
}

RationalExpr dhat_c(const RationalExpr& xb, const RationalExpr& y) {
  const RationalExpr xb2 = xb * xb;
  return (qq(2) * y + xb2) * (qq(2) + y * xb2) / (qq(2) * y);
}

Operator build_dhat(int a, int b) {
  if ((a != 1 && a != -1) || (b != 1 && b != -1)) throw std::invalid_argument("build_dhat: a, b must be +-1");
  const RationalExpr x = X();
  const RationalExpr x0 = RationalExpr::var(Var::x0);
  const RationalExpr x1 = RationalExpr::var(Var::x1);
  RationalExpr c(1);
  if (a == -1) c *= dhat_c(x0, x);
  if (b == -1) c *= dhat_c(x1, x);
  Operator op;
  for (int eps : {1, -1}) {
    const RationalExpr xe = x.pow(eps);
    const RationalExpr w = omega(xe);
    RationalExpr bw(1);
    if (a == -1) bw *= dhat_b(x0, xe);
    if (b == -1) bw *= dhat_b(x1, xe);
    op += word(ShiftWord::shift(2 * eps), w * bw);
    op += mult(-w * c);
  }
  return op;
}

}  // namespace g2skein::qops
