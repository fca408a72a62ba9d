#include "g2skein/exact/laurent_polynomial.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "g2skein/exact/errors.hpp"
#include "g2skein/exact/modular.hpp"

namespace g2skein::exact {

namespace {

bool greater(const Term& a, const Term& b) { return a.m > b.m; }

// Merge two descending term lists, b scaled by `sign`.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    auto cmp = a[i].m <=> b[j].m;
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(negate_b ? Term{b[j].m, -b[j].c} : b[j]);
      ++j;
    } else {
      Scalar c = negate_b ? a[i].c - b[j].c : a[i].c + b[j].c;
      if (!c.is_zero()) out.push_back(Term{a[i].m, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(negate_b ? Term{b[j].m, -b[j].c} : b[j]);
  return out;
}

std::uint64_t splitmix(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31U);
}

// Dense image of a polynomial (nonnegative exponents) in F_p[t] with every
// variable except `v` fixed at a pseudo-random residue.
std::optional<std::vector<std::uint64_t>> univariate_image(const LaurentPolynomial& f, Var v,
                                                           const ModPoint& pt) {
  const std::uint64_t p = pt.p;
  std::vector<std::uint64_t> img(static_cast<std::size_t>(f.max_exponents()[v]) + 1, 0);
  for (const auto& t : f.terms()) {
    auto c = t.c.mod(p, pt.sqrt_minus_one);
    if (!c) return std::nullopt;
    std::uint64_t val = *c;
    for (std::size_t k = 0; k < kNumVars; ++k) {
      if (k == index(v) || t.m[k] == 0) continue;
      val = modular::mul(val, modular::pow(pt.values[k], static_cast<std::uint64_t>(t.m[k]), p), p);
    }
    auto& slot = img[static_cast<std::size_t>(t.m[v])];
    slot = modular::add(slot, val, p);
  }
  while (!img.empty() && img.back() == 0) img.pop_back();
  return img;
}

// True when the images prove that g does not divide f.
bool images_rule_out_division(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  Var best = Var::s;
  int best_deg = -1;
  Monomial gmax = g.max_exponents();
  for (std::size_t k = 0; k < kNumVars; ++k) {
    if (gmax[k] > best_deg) {
      best_deg = gmax[k];
      best = static_cast<Var>(k);
    }
  }
  if (best_deg <= 0) return false;
  if (f.max_exponents()[best] < best_deg) return true;

  static const ModPoint base = [] {
    ModPoint pt;
    pt.p = modular::default_prime();
    pt.sqrt_minus_one = *modular::sqrt_minus_one(pt.p);
    std::uint64_t state = 0x5eed5eedULL;
    for (auto& v : pt.values) v = 2 + splitmix(state) % (pt.p - 3);
    return pt;
  }();
  auto fi = univariate_image(f, best, base);
  auto gi = univariate_image(g, best, base);
  if (!fi || !gi || gi->empty()) return false;
  if (fi->size() < gi->size()) return !fi->empty();
  const std::uint64_t p = base.p;
  std::vector<std::uint64_t> r = *fi;
  const std::size_t dg = gi->size() - 1;
  const std::uint64_t lead_inv = modular::inv(gi->back(), p);
  for (std::size_t d = r.size(); d-- > dg;) {
    if (r[d] == 0) continue;
    std::uint64_t factor = modular::mul(r[d], lead_inv, p);
    for (std::size_t k = 0; k <= dg; ++k) {
      r[d - dg + k] = modular::sub(r[d - dg + k], modular::mul(factor, (*gi)[k], p), p);
    }
  }
  for (std::size_t d = 0; d < dg; ++d) {
    if (r[d] != 0) return true;
  }
  return false;
}

}  // namespace

LaurentPolynomial::LaurentPolynomial(Scalar c) {
  if (!c.is_zero()) terms_.push_back(Term{Monomial{}, std::move(c)});
}

LaurentPolynomial LaurentPolynomial::term(Scalar c, Monomial m) {
  if (c.is_zero()) return {};
  return LaurentPolynomial(std::vector<Term>{Term{m, std::move(c)}});
}

LaurentPolynomial LaurentPolynomial::var(Var v, int e) { return term(Scalar(1), Monomial::of(v, e)); }

LaurentPolynomial LaurentPolynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), greater);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().m == t.m) {
      out.back().c += t.c;
    } else {
      if (!out.empty() && out.back().c.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().c.is_zero()) out.pop_back();
  return LaurentPolynomial(std::move(out));
}

bool LaurentPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().m.is_one());
}

Monomial LaurentPolynomial::min_exponents() const {
  if (terms_.empty()) return {};
  Monomial r = terms_.front().m;
  for (const auto& t : terms_) r = Monomial::gcd(r, t.m);
  return r;
}

Monomial LaurentPolynomial::max_exponents() const {
  if (terms_.empty()) return {};
  Monomial r = terms_.front().m;
  for (const auto& t : terms_) r = Monomial::lcm(r, t.m);
  return r;
}

bool LaurentPolynomial::depends_on(Var v) const {
  return std::any_of(terms_.begin(), terms_.end(), [v](const Term& t) { return t.m[v] != 0; });
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.c = -t.c;
  return LaurentPolynomial(std::move(out));
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  return LaurentPolynomial(merge(a.terms_, b.terms_, false));
}

LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  return LaurentPolynomial(merge(a.terms_, b.terms_, true));
}

LaurentPolynomial LaurentPolynomial::mul_term(const Scalar& c, const Monomial& m) const {
  if (c.is_zero()) return {};
  std::vector<Term> out;
  out.reserve(terms_.size());
  // Multiplying by a monomial preserves the graded-lex order.
  for (const auto& t : terms_) out.push_back(Term{t.m * m, t.c * c});
  return LaurentPolynomial(std::move(out));
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const LaurentPolynomial& small = a.size() <= b.size() ? a : b;
  const LaurentPolynomial& big = a.size() <= b.size() ? b : a;
  if (small.size() == 1) return big.mul_term(small.terms_[0].c, small.terms_[0].m);
  if (small.size() <= 4) {
    LaurentPolynomial acc = big.mul_term(small.terms_[0].c, small.terms_[0].m);
    for (std::size_t k = 1; k < small.size(); ++k) {
      acc += big.mul_term(small.terms_[k].c, small.terms_[k].m);
    }
    return acc;
  }
  std::unordered_map<Monomial, Scalar, MonomialHash> acc;
  acc.reserve(std::min<std::size_t>(a.size() * b.size(), 1U << 22U));
  for (const auto& ta : small.terms_) {
    for (const auto& tb : big.terms_) acc[ta.m * tb.m].add_product(ta.c, tb.c);
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) out.push_back(Term{m, std::move(c)});
  }
  std::sort(out.begin(), out.end(), greater);
  return LaurentPolynomial(std::move(out));
}

bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    if (a.terms_[k].m != b.terms_[k].m || !(a.terms_[k].c == b.terms_[k].c)) return false;
  }
  return true;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned k) const {
  LaurentPolynomial result(Scalar(1));
  LaurentPolynomial base = *this;
  while (k != 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k != 0) base = base * base;
  }
  return result;
}

std::optional<LaurentPolynomial> LaurentPolynomial::divide_exact(const LaurentPolynomial& g) const {
  if (g.is_zero()) throw DivisionByZero();
  if (is_zero()) return LaurentPolynomial{};
  if (g.is_single_term()) return mul_term(g.leading().c.inverse(), g.leading().m.inverse());

  // Move both operands into the ordinary polynomial ring without monomial
  // content; a Laurent quotient then is an ordinary polynomial quotient.
  const Monomial fshift = min_exponents();
  const Monomial gshift = g.min_exponents();
  LaurentPolynomial f = mul_term(Scalar(1), fshift.inverse());
  LaurentPolynomial h = g.mul_term(Scalar(1), gshift.inverse());
  if (images_rule_out_division(f, h)) return std::nullopt;

  const Term& lead = h.leading();
  const Scalar lead_inv = lead.c.inverse();
  std::map<Monomial, Scalar, std::greater<>> rem;
  for (const auto& t : f.terms_) rem.emplace(t.m, t.c);
  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto top = rem.begin();
    if (!top->first.divisible_by(lead.m)) return std::nullopt;
    Monomial qm = top->first / lead.m;
    Scalar qc = top->second * lead_inv;
    rem.erase(top);
    for (std::size_t k = 1; k < h.terms_.size(); ++k) {
      Monomial m = h.terms_[k].m * qm;
      Scalar c = h.terms_[k].c * qc;
      auto [it, inserted] = rem.try_emplace(m, -c);
      if (!inserted) {
        it->second -= c;
        if (it->second.is_zero()) rem.erase(it);
      }
    }
    quotient.push_back(Term{qm, std::move(qc)});
  }
  // Quotient terms come out in decreasing order already.
  LaurentPolynomial q(std::move(quotient));
  return q.mul_term(Scalar(1), fshift / gshift);
}

LaurentPolynomial LaurentPolynomial::substitute(const MonomialMap& map) const {
  std::array<std::map<int, Scalar>, kNumVars> power_cache;
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Scalar c = t.c;
    Monomial m;
    for (std::size_t k = 0; k < kNumVars; ++k) {
      const int e = t.m[k];
      if (e == 0) continue;
      if (!map[k]) {
        m = m * Monomial::of(static_cast<Var>(k), e);
        continue;
      }
      const auto& [vc, vm] = *map[k];
      if (!vc.is_one()) {
        auto it = power_cache[k].find(e);
        if (it == power_cache[k].end()) it = power_cache[k].emplace(e, vc.pow(e)).first;
        c *= it->second;
      }
      m = m * vm.pow(e);
    }
    out.push_back(Term{m, std::move(c)});
  }
  return from_terms(std::move(out));
}

LaurentPolynomial LaurentPolynomial::coefficient(Var v, int e) const {
  std::vector<Term> out;
  const Monomial strip = Monomial::of(v, -e);
  for (const auto& t : terms_) {
    if (t.m[v] == e) out.push_back(Term{t.m * strip, t.c});
  }
  return from_terms(std::move(out));
}

std::optional<std::uint64_t> LaurentPolynomial::eval_mod(const ModPoint& pt) const {
  const std::uint64_t p = pt.p;
  std::array<std::uint64_t, kNumVars> inverses{};
  for (std::size_t k = 0; k < kNumVars; ++k) {
    if (pt.values[k] % p == 0) return std::nullopt;
    inverses[k] = modular::inv(pt.values[k], p);
  }
  std::array<std::map<int, std::uint64_t>, kNumVars> cache;
  std::uint64_t total = 0;
  for (const auto& t : terms_) {
    auto c = t.c.mod(p, pt.sqrt_minus_one);
    if (!c) return std::nullopt;
    std::uint64_t val = *c;
    for (std::size_t k = 0; k < kNumVars; ++k) {
      const int e = t.m[k];
      if (e == 0) continue;
      auto it = cache[k].find(e);
      if (it == cache[k].end()) {
        std::uint64_t base = e > 0 ? pt.values[k] : inverses[k];
        it = cache[k].emplace(e, modular::pow(base, static_cast<std::uint64_t>(e > 0 ? e : -e), p)).first;
      }
      val = modular::mul(val, it->second, p);
    }
    total = modular::add(total, val, p);
  }
  return total;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    std::string mono = t.m.to_string();
    std::string coeff;
    bool negative = false;
    if (t.c.is_real()) {
      negative = sgn(t.c.re()) < 0;
      mpq_class mag = abs(t.c.re());
      if (!(mag == 1) || mono.empty()) coeff = mag.get_str();
    } else if (sgn(t.c.re()) == 0) {
      negative = sgn(t.c.im()) < 0;
      mpq_class mag = abs(t.c.im());
      coeff = mag == 1 ? "I" : mag.get_str() + "*I";
    } else {
      coeff = t.c.to_string();
    }
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += coeff;
    if (!coeff.empty() && !mono.empty()) out += "*";
    out += mono;
    first = false;
  }
  return out;
}

int LaurentPolynomial::compare(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (auto c = a.terms_[k].m <=> b.terms_[k].m; c != 0) return c > 0 ? 1 : -1;
    const Scalar& x = a.terms_[k].c;
    const Scalar& y = b.terms_[k].c;
    if (int c = cmp(x.re(), y.re()); c != 0) return c > 0 ? 1 : -1;
    if (int c = cmp(x.im(), y.im()); c != 0) return c > 0 ? 1 : -1;
  }
  if (a.terms_.size() == b.terms_.size()) return 0;
  return a.terms_.size() > b.terms_.size() ? 1 : -1;
}

}  // namespace g2skein::exact
