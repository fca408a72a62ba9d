#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace g2skein::exact {

// s is the quarter power of q (q = s^4); u stands for q^n in all-n formulas;
// a, b, c, d are free Askey-Wilson parameters.
enum class Var : std::uint8_t { s, x, x0, x1, u, a, b, c, d };

inline constexpr std::size_t kNumVars = 9;

std::string_view var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

inline constexpr std::size_t index(Var v) { return static_cast<std::size_t>(v); }

/// Exponent vector in Z^9. Ordered graded-lexicographically: total degree
/// first, then lexicographic in the order s, x, x0, x1, u, a, b, c, d.
class Monomial {
 public:
  using Exponent = std::int16_t;

  Monomial() = default;
  static Monomial of(Var v, int e = 1);

  int operator[](Var v) const { return e_[index(v)]; }
  int operator[](std::size_t i) const { return e_[i]; }
  void set(Var v, int e);

  int total_degree() const;
  bool is_one() const;

  /// Throws ExponentOverflow when a component leaves the int16 range.
  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;
  Monomial pow(int k) const;
  Monomial inverse() const;

  // Componentwise min/max.
  static Monomial gcd(const Monomial& a, const Monomial& b);
  static Monomial lcm(const Monomial& a, const Monomial& b);

  /// Every exponent of *this is >= the matching exponent of o.
  bool divisible_by(const Monomial& o) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  std::size_t hash() const;

  /// `s^2*x^-1`, or empty for the unit monomial.
  std::string to_string() const;

 private:
  std::array<Exponent, kNumVars> e_{};
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace g2skein::exact
