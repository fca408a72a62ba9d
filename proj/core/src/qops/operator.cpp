#include "g2skein/qops/operator.hpp"

namespace g2skein::qops {

using exact::Var;

ShiftWord ShiftWord::operator*(const ShiftWord& o) const {
  // (s^r D^e)(s^r' D^e') = s^(r+r') D^(+-e + e'): moving D^e past s flips it.
  return {reflect != o.reflect, (o.reflect ? -e : e) + o.e, e0 + o.e0, e1 + o.e1};
}

exact::Assignment ShiftWord::assignment() const {
  exact::Assignment a;
  if (reflect || e != 0) {
    a.emplace(Var::x, RationalExpr::q_quarter(2 * e) * RationalExpr::var(Var::x, reflect ? -1 : 1));
  }
  if (e0 != 0) a.emplace(Var::x0, RationalExpr::q_quarter(2 * e0) * RationalExpr::var(Var::x0));
  if (e1 != 0) a.emplace(Var::x1, RationalExpr::q_quarter(2 * e1) * RationalExpr::var(Var::x1));
  return a;
}

std::string ShiftWord::to_string() const {
  return "s^" + std::to_string(reflect ? 1 : 0) + " * D^" + std::to_string(e) + " * D0^" + std::to_string(e0) +
         " * D1^" + std::to_string(e1);
}

Operator Operator::identity() { return word(ShiftWord{}); }

Operator Operator::multiplication(const RationalExpr& c) { return word(ShiftWord{}, c); }

Operator Operator::word(const ShiftWord& w, const RationalExpr& c) {
  Operator op;
  op.add_term(w, c);
  return op;
}

void Operator::add_term(const ShiftWord& w, const RationalExpr& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Operator& Operator::operator+=(const Operator& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

Operator& Operator::operator-=(const Operator& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

Operator Operator::operator-() const {
  Operator r;
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

Operator operator*(const Operator& a, const Operator& b) {
  Operator r;
  for (const auto& [wa, ca] : a.terms_) {
    const exact::Assignment shift = wa.assignment();
    for (const auto& [wb, cb] : b.terms_) {
      RationalExpr moved = shift.empty() ? cb : cb.substitute(shift);
      r.add_term(wa * wb, ca * moved);
    }
  }
  return r;
}

Operator operator*(const RationalExpr& c, const Operator& a) {
  Operator r;
  if (c.is_zero()) return r;
  for (const auto& [w, t] : a.terms_) r.add_term(w, c * t);
  return r;
}

RationalExpr Operator::apply(const RationalExpr& f) const {
  RationalExpr out;
  for (const auto& [w, c] : terms_) {
    const exact::Assignment shift = w.assignment();
    out += c * (shift.empty() ? f : f.substitute(shift));
  }
  return out;
}

Operator Operator::part(int e0, int e1) const {
  Operator r;
  for (const auto& [w, c] : terms_) {
    if (w.e0 == e0 && w.e1 == e1) r.terms_.emplace(w, c);
  }
  return r;
}

std::string Operator::to_string() const {
  if (terms_.empty()) return "0\n";
  std::string out;
  for (const auto& [w, c] : terms_) out += "(" + c.to_string() + ") * " + w.to_string() + "\n";
  return out;
}

}  // namespace g2skein::qops
