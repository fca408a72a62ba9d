#include "g2skein/check/check.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "g2skein/exact/modular.hpp"

namespace g2skein::check {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31U);
}

// FNV-1a, stable across platforms (std::hash is not).
std::uint64_t text_hash(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

// Sum over variables of the exponent spread; bounds the degree of the
// polynomial obtained after clearing monomial denominators.
long degree_bound(const exact::LaurentPolynomial& p) {
  if (p.is_zero()) return 0;
  const auto lo = p.min_exponents();
  const auto hi = p.max_exponents();
  long d = 0;
  for (std::size_t v = 0; v < exact::kNumVars; ++v) d += hi[v] - lo[v];
  return d;
}

}  // namespace

std::string_view status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skip: return "skip";
  }
  return "?";
}

Comparator Comparator::exact() { return Comparator{}; }

Comparator Comparator::random(std::uint64_t prime, std::uint64_t seed) {
  auto r = exact::modular::sqrt_minus_one(prime);
  if (!r || !exact::modular::is_prime(prime)) {
    throw std::invalid_argument("random mode needs a prime congruent to 1 mod 4");
  }
  Comparator c;
  c.random_ = true;
  c.prime_ = prime;
  c.sqrt_m1_ = *r;
  c.seed_ = seed;
  c.rng_.seed(splitmix(seed));
  return c;
}

Comparator Comparator::fork(std::string_view task_id) const {
  Comparator c = *this;
  c.seed_ = splitmix(seed_ ^ text_hash(task_id));
  c.rng_.seed(c.seed_);
  return c;
}

bool Comparator::equal(const exact::RationalExpr& f, const exact::RationalExpr& g) {
  if (!random_) {
    last_reps_ = 0;
    return exact::equal(f, g);
  }
  // f - g = (nf dg - ng df) / (df dg); its numerator degree bounds the error.
  const long deg = std::max(degree_bound(f.num()) + degree_bound(g.den()),
                            degree_bound(g.num()) + degree_bound(f.den()));
  const double per_point = std::log2(static_cast<double>(prime_)) - std::log2(static_cast<double>(deg + 1));
  const int reps = std::max(2, static_cast<int>(std::ceil(64.0 / std::max(per_point, 1.0))));
  last_reps_ = reps;
  std::uniform_int_distribution<std::uint64_t> pick(2, prime_ - 1);
  int done = 0;
  for (int attempt = 0; done < reps; ++attempt) {
    if (attempt > 64 * reps) throw std::runtime_error("random comparison: could not avoid poles");
    exact::ModPoint pt{prime_, sqrt_m1_, {}};
    for (auto& v : pt.values) v = pick(rng_);
    auto a = f.eval_mod(pt);
    auto b = g.eval_mod(pt);
    if (!a || !b) continue;  // pole: resample
    if (*a != *b) return false;
    ++done;
  }
  return true;
}

std::string clip(const std::string& text, std::size_t limit) {
  if (text.size() <= limit) return text;
  return text.substr(0, limit) + " ... [" + std::to_string(text.size() - limit) + " more chars]";
}

CheckRecord make_record(std::string suite, std::string case_id,
                        std::vector<std::pair<std::string, std::string>> params, bool ok,
                        const exact::RationalExpr* lhs, const exact::RationalExpr* rhs) {
  CheckRecord r;
  r.suite = std::move(suite);
  r.case_id = std::move(case_id);
  r.params = std::move(params);
  r.status = ok ? Status::pass : Status::fail;
  if (!ok) {
    if (lhs) r.lhs = clip(lhs->to_string());
    if (rhs) r.rhs = clip(rhs->to_string());
  }
  return r;
}

}  // namespace g2skein::check
