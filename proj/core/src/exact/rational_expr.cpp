#include "g2skein/exact/rational_expr.hpp"

#include <algorithm>
#include <array>

#include "g2skein/exact/errors.hpp"
#include "g2skein/exact/modular.hpp"

namespace g2skein::exact {

namespace {

struct Normalized {
  Scalar c;
  Monomial m;
  LaurentPolynomial factor;  // constant 1 when p was a single term
};

// p = c * m * factor with factor monic and content-free.
Normalized normalize(const LaurentPolynomial& p) {
  if (p.is_zero()) throw DivisionByZero();
  Monomial m = p.min_exponents();
  if (p.is_single_term()) return {p.leading().c, p.leading().m, LaurentPolynomial(Scalar(1))};
  LaurentPolynomial shifted = p.mul_term(Scalar(1), m.inverse());
  Scalar c = shifted.leading().c;
  return {c, m, shifted.mul_term(c.inverse(), Monomial{})};
}

bool may_divide(const LaurentPolynomial& divisor, const LaurentPolynomial& f) {
  // Degree in each variable of the content-free parts must not decrease.
  Monomial span = f.max_exponents() / f.min_exponents();
  return span.divisible_by(divisor.max_exponents());
}

// Factor lists of several expressions expressed over one shared basis.
// When a basis element turns out to divide (or be divided by) an incoming
// factor, it is split so that both sides can be compared factor-wise.
class FactorBasis {
 public:
  explicit FactorBasis(std::size_t sides) : sides_(sides) {}

  void add(std::size_t side, LaurentPolynomial p, int k) {
    std::vector<Pending> work;
    work.push_back({side, std::move(p), k});
    while (!work.empty()) {
      Pending item = std::move(work.back());
      work.pop_back();
      if (item.mult == 0 || item.poly.is_constant()) continue;
      place(std::move(item), work);
    }
  }

  std::size_t size() const { return basis_.size(); }
  const LaurentPolynomial& poly(std::size_t idx) const { return basis_[idx]; }
  int count(std::size_t idx, std::size_t side) const { return counts_[idx][side]; }

 private:
  struct Pending {
    std::size_t side;
    LaurentPolynomial poly;
    int mult;
  };

  void place(Pending item, std::vector<Pending>& work) {
    for (std::size_t idx = 0; idx < basis_.size(); ++idx) {
      const LaurentPolynomial& e = basis_[idx];
      if (e == item.poly) {
        counts_[idx][item.side] += item.mult;
        return;
      }
      if (may_divide(e, item.poly)) {
        if (auto q = item.poly.divide_exact(e)) {
          counts_[idx][item.side] += item.mult;
          work.push_back({item.side, std::move(*q), item.mult});
          return;
        }
      } else if (may_divide(item.poly, e)) {
        if (auto q = e.divide_exact(item.poly)) {
          // e = poly * q: the slot becomes poly and every holder of e also
          // picks up q.
          for (std::size_t s = 0; s < sides_; ++s) {
            if (counts_[idx][s] != 0) work.push_back({s, *q, counts_[idx][s]});
          }
          basis_[idx] = std::move(item.poly);
          counts_[idx][item.side] += item.mult;
          return;
        }
      }
    }
    basis_.push_back(std::move(item.poly));
    counts_.emplace_back(sides_, 0);
    counts_.back()[item.side] = item.mult;
  }

  std::size_t sides_;
  std::vector<LaurentPolynomial> basis_;
  std::vector<std::vector<int>> counts_;
};

std::vector<DenFactor> sorted_factors(std::vector<DenFactor> f) {
  std::erase_if(f, [](const DenFactor& d) { return d.mult == 0; });
  std::sort(f.begin(), f.end(), [](const DenFactor& a, const DenFactor& b) {
    return LaurentPolynomial::compare(a.poly, b.poly) > 0;
  });
  return f;
}

LaurentPolynomial expand(const LaurentPolynomial& base, int k) {
  return k == 0 ? LaurentPolynomial(Scalar(1)) : base.pow(static_cast<unsigned>(k));
}

}  // namespace

RationalExpr RationalExpr::var(Var v, int e) { return RationalExpr(LaurentPolynomial::var(v, e)); }

RationalExpr RationalExpr::q_quarter(int k) { return var(Var::s, k); }

RationalExpr RationalExpr::fraction(const LaurentPolynomial& num, const LaurentPolynomial& den) {
  return RationalExpr(num) / RationalExpr(den);
}

LaurentPolynomial RationalExpr::den() const {
  LaurentPolynomial out(Scalar(1));
  for (const auto& f : den_) out = out * expand(f.poly, f.mult);
  return out;
}

bool RationalExpr::depends_on(Var v) const {
  if (num_.depends_on(v)) return true;
  return std::any_of(den_.begin(), den_.end(), [v](const DenFactor& f) { return f.poly.depends_on(v); });
}

RationalExpr RationalExpr::operator-() const {
  RationalExpr r = *this;
  r.num_ = -num_;
  return r;
}

void RationalExpr::reduce() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto& f : den_) {
    while (f.mult > 0 && may_divide(f.poly, num_)) {
      auto q = num_.divide_exact(f.poly);
      if (!q) break;
      num_ = std::move(*q);
      --f.mult;
    }
  }
  den_ = sorted_factors(std::move(den_));
}

RationalExpr& RationalExpr::operator+=(const RationalExpr& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.empty() && o.den_.empty()) {
    num_ += o.num_;
    return *this;
  }
  FactorBasis basis(2);
  for (const auto& f : den_) basis.add(0, f.poly, f.mult);
  for (const auto& f : o.den_) basis.add(1, f.poly, f.mult);
  LaurentPolynomial cof_a(Scalar(1));
  LaurentPolynomial cof_b(Scalar(1));
  std::vector<DenFactor> lcm;
  for (std::size_t idx = 0; idx < basis.size(); ++idx) {
    const int ca = basis.count(idx, 0);
    const int cb = basis.count(idx, 1);
    const int top = std::max(ca, cb);
    if (top == 0) continue;
    lcm.push_back({basis.poly(idx), top});
    if (top > ca) cof_a = cof_a * expand(basis.poly(idx), top - ca);
    if (top > cb) cof_b = cof_b * expand(basis.poly(idx), top - cb);
  }
  num_ = num_ * cof_a + o.num_ * cof_b;
  den_ = std::move(lcm);
  reduce();
  return *this;
}

RationalExpr& RationalExpr::operator-=(const RationalExpr& o) { return *this += -o; }

RationalExpr& RationalExpr::operator*=(const RationalExpr& o) {
  if (is_zero() || o.is_zero()) return *this = RationalExpr();
  LaurentPolynomial a = num_;
  LaurentPolynomial b = o.num_;
  std::vector<DenFactor> da = den_;
  std::vector<DenFactor> db = o.den_;
  // Cancel each numerator against the other operand's denominator first.
  auto cancel = [](LaurentPolynomial& n, std::vector<DenFactor>& d) {
    for (auto& f : d) {
      while (f.mult > 0 && may_divide(f.poly, n)) {
        auto q = n.divide_exact(f.poly);
        if (!q) break;
        n = std::move(*q);
        --f.mult;
      }
    }
  };
  cancel(a, db);
  cancel(b, da);
  FactorBasis basis(1);
  for (const auto& f : da) basis.add(0, f.poly, f.mult);
  for (const auto& f : db) basis.add(0, f.poly, f.mult);
  std::vector<DenFactor> merged;
  for (std::size_t idx = 0; idx < basis.size(); ++idx) {
    if (basis.count(idx, 0) > 0) merged.push_back({basis.poly(idx), basis.count(idx, 0)});
  }
  num_ = a * b;
  den_ = sorted_factors(std::move(merged));
  return *this;
}

RationalExpr RationalExpr::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Normalized n = normalize(num_);
  RationalExpr r;
  LaurentPolynomial num = LaurentPolynomial::term(n.c.inverse(), n.m.inverse());
  for (const auto& f : den_) num = num * expand(f.poly, f.mult);
  r.num_ = std::move(num);
  if (!n.factor.is_constant()) r.den_.push_back({std::move(n.factor), 1});
  return r;
}

RationalExpr& RationalExpr::operator/=(const RationalExpr& o) {
  if (o.is_zero()) throw DivisionByZero();
  if (is_zero()) return *this;
  // Denominator factors shared by both operands cancel without expansion.
  RationalExpr numer = *this;
  RationalExpr other = o;
  for (auto& fo : other.den_) {
    for (auto& fs : numer.den_) {
      if (fo.mult > 0 && fs.mult > 0 && fo.poly == fs.poly) {
        const int k = std::min(fo.mult, fs.mult);
        fo.mult -= k;
        fs.mult -= k;
      }
    }
  }
  numer.den_ = sorted_factors(std::move(numer.den_));
  other.den_ = sorted_factors(std::move(other.den_));
  numer *= other.inverse();
  numer.reduce();
  return *this = std::move(numer);
}

RationalExpr RationalExpr::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  if (k == 0) return RationalExpr(1);
  RationalExpr r;
  r.num_ = num_.pow(static_cast<unsigned>(k));
  r.den_ = den_;
  for (auto& f : r.den_) f.mult *= k;
  return r;
}

namespace {

std::optional<MonomialMap> as_monomial_map(const Assignment& assignment) {
  MonomialMap map;
  for (const auto& [v, value] : assignment) {
    if (!value.is_polynomial() || !value.num().is_single_term()) return std::nullopt;
    map[index(v)] = std::make_pair(value.num().leading().c, value.num().leading().m);
  }
  return map;
}

// General substitution into a polynomial with rational images.
RationalExpr substitute_general(const LaurentPolynomial& p, const Assignment& assignment) {
  std::array<std::map<int, RationalExpr>, kNumVars> cache;
  RationalExpr total;
  for (const auto& t : p.terms()) {
    RationalExpr term(t.c);
    Monomial rest;
    for (std::size_t k = 0; k < kNumVars; ++k) {
      const int e = t.m[k];
      if (e == 0) continue;
      auto it = assignment.find(static_cast<Var>(k));
      if (it == assignment.end()) {
        rest = rest * Monomial::of(static_cast<Var>(k), e);
        continue;
      }
      auto c = cache[k].find(e);
      if (c == cache[k].end()) c = cache[k].emplace(e, it->second.pow(e)).first;
      term *= c->second;
    }
    term *= RationalExpr(LaurentPolynomial::term(Scalar(1), rest));
    total += term;
  }
  return total;
}

}  // namespace

RationalExpr RationalExpr::substitute(const Assignment& assignment) const {
  if (auto map = as_monomial_map(assignment)) {
    RationalExpr r(num_.substitute(*map));
    FactorBasis basis(1);
    for (const auto& f : den_) {
      LaurentPolynomial image = f.poly.substitute(*map);
      if (image.is_zero()) throw DegenerateSubstitution(f.poly.to_string());
      Normalized n = normalize(image);
      r.num_ = r.num_.mul_term(n.c.pow(-f.mult), n.m.pow(-f.mult));
      basis.add(0, std::move(n.factor), f.mult);
    }
      for (std::size_t idx = 0; idx < basis.size(); ++idx) {
      if (basis.count(idx, 0) > 0) r.den_.push_back({basis.poly(idx), basis.count(idx, 0)});
    }
    r.reduce();
    return r;
  }
  RationalExpr result = substitute_general(num_, assignment);
  for (const auto& f : den_) {
    RationalExpr image = substitute_general(f.poly, assignment);
    if (image.is_zero()) throw DegenerateSubstitution(f.poly.to_string());
    result /= image.pow(f.mult);
  }
  return result;
}

std::pair<LaurentPolynomial, LaurentPolynomial> RationalExpr::substitute_parts(
    const Assignment& assignment) const {
  auto map = as_monomial_map(assignment);
  if (!map) {
    RationalExpr top = substitute_general(num_, assignment);
    RationalExpr bottom = substitute_general(den(), assignment);
    // Only monomial images keep the parts polynomial; fall back to cross form.
    return {top.num() * bottom.den(), bottom.num() * top.den()};
  }
  return {num_.substitute(*map), den().substitute(*map)};
}

RationalExpr RationalExpr::coefficient(Var v, int e) const {
  for (const auto& f : den_) {
    if (f.poly.depends_on(v)) {
      throw ArithmeticError("coefficient extraction: denominator depends on " + std::string(var_name(v)));
    }
  }
  RationalExpr r(num_.coefficient(v, e));
  if (r.is_zero()) return r;
  r.den_ = den_;
  r.reduce();
  return r;
}

std::pair<int, int> RationalExpr::degree_range(Var v) const {
  if (num_.is_zero()) return {0, 0};
  return {num_.min_exponents()[v], num_.max_exponents()[v]};
}

std::optional<std::uint64_t> RationalExpr::eval_mod(const ModPoint& pt) const {
  auto n = num_.eval_mod(pt);
  if (!n) return std::nullopt;
  std::uint64_t d = 1 % pt.p;
  for (const auto& f : den_) {
    auto v = f.poly.eval_mod(pt);
    if (!v || *v == 0) return std::nullopt;
    d = modular::mul(d, modular::pow(*v, static_cast<std::uint64_t>(f.mult), pt.p), pt.p);
  }
  return modular::mul(*n, modular::inv(d, pt.p), pt.p);
}

namespace {

std::string wrap(const LaurentPolynomial& p) {
  std::string s = p.to_string();
  return p.size() > 1 ? "(" + s + ")" : s;
}

}  // namespace

std::string RationalExpr::to_string() const {
  if (den_.empty()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den().to_string() + ")";
}

std::string RationalExpr::to_factored_string() const {
  if (den_.empty()) return num_.to_string();
  std::string d;
  for (const auto& f : den_) {
    if (!d.empty()) d += "*";
    d += wrap(f.poly);
    if (f.mult != 1) d += "^" + std::to_string(f.mult);
  }
  return wrap(num_) + "/(" + d + ")";
}

bool equal(const RationalExpr& f, const RationalExpr& g) {
  if (f.is_polynomial() && g.is_polynomial()) return f.num() == g.num();
  FactorBasis basis(2);
  for (const auto& d : f.den_factors()) basis.add(0, d.poly, d.mult);
  for (const auto& d : g.den_factors()) basis.add(1, d.poly, d.mult);
  LaurentPolynomial cof_f(Scalar(1));
  LaurentPolynomial cof_g(Scalar(1));
  for (std::size_t idx = 0; idx < basis.size(); ++idx) {
    const int cf = basis.count(idx, 0);
    const int cg = basis.count(idx, 1);
    if (cg > cf) cof_f = cof_f * expand(basis.poly(idx), cg - cf);
    if (cf > cg) cof_g = cof_g * expand(basis.poly(idx), cf - cg);
  }
  return f.num() * cof_f == g.num() * cof_g;
}

RationalExpr ch(const RationalExpr& f) {
  if (f.is_zero()) throw DivisionByZero("ch of the zero expression");
  return f + f.inverse();
}

RationalExpr sh(const RationalExpr& f) {
  if (f.is_zero()) throw DivisionByZero("sh of the zero expression");
  return f - f.inverse();
}

RationalExpr q_pochhammer(const RationalExpr& z, int k) {
  if (k < 0) throw ArithmeticError("q_pochhammer: negative length");
  RationalExpr result(1);
  for (int i = 0; i < k; ++i) result *= RationalExpr(1) - z * RationalExpr::q_quarter(4 * i);
  return result;
}

Assignment scale_var(Var v, const RationalExpr& factor) {
  return Assignment{{v, factor * RationalExpr::var(v)}};
}

}  // namespace g2skein::exact
