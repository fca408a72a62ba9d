#include "g2skein/exact/monomial.hpp"

#include <algorithm>
#include <limits>

#include "g2skein/exact/errors.hpp"

namespace g2skein::exact {

namespace {

constexpr std::array<std::string_view, kNumVars> kNames{"s", "x", "x0", "x1", "u", "a", "b", "c", "d"};

Monomial::Exponent checked(long v) {
  if (v > std::numeric_limits<Monomial::Exponent>::max() ||
      v < std::numeric_limits<Monomial::Exponent>::min()) {
    throw ExponentOverflow();
  }
  return static_cast<Monomial::Exponent>(v);
}

}  // namespace

std::string_view var_name(Var v) { return kNames[index(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (kNames[i] == name) return static_cast<Var>(i);
  }
  return std::nullopt;
}

Monomial Monomial::of(Var v, int e) {
  Monomial m;
  m.set(v, e);
  return m;
}

void Monomial::set(Var v, int e) { e_[index(v)] = checked(e); }

int Monomial::total_degree() const {
  int d = 0;
  for (auto e : e_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(e_.begin(), e_.end(), [](Exponent e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kNumVars; ++i) r.e_[i] = checked(long{e_[i]} + o.e_[i]);
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kNumVars; ++i) r.e_[i] = checked(long{e_[i]} - o.e_[i]);
  return r;
}

Monomial Monomial::pow(int k) const {
  Monomial r;
  for (std::size_t i = 0; i < kNumVars; ++i) r.e_[i] = checked(long{e_[i]} * k);
  return r;
}

Monomial Monomial::inverse() const { return pow(-1); }

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kNumVars; ++i) r.e_[i] = std::min(a.e_[i], b.e_[i]);
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kNumVars; ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
  return r;
}

bool Monomial::divisible_by(const Monomial& o) const {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (e_[i] < o.e_[i]) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (auto c = a.e_[i] <=> b.e_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto e : e_) {
    h ^= static_cast<std::uint16_t>(e);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29U));
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (e_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += kNames[i];
    if (e_[i] != 1) out += "^" + std::to_string(e_[i]);
  }
  return out;
}

}  // namespace g2skein::exact
