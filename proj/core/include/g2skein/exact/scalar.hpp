#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace g2skein::exact {

/// Gaussian rational re + im*I with I^2 = -1.
///
/// Both parts are GMP rationals, kept canonical (lowest terms, positive
/// denominator) by mpq_class after every operation.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar rational(long num, long den);
  static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const noexcept { return sgn(im_) == 0 && re_ == 1; }
  bool is_real() const noexcept { return sgn(im_) == 0; }

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar conj() const { return Scalar(re_, -im_); }
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  // acc += a * b without temporaries for the real part.
  void add_product(const Scalar& a, const Scalar& b);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  Scalar pow(long e) const;

  /// Image in Z/p with I mapped to `sqrt_minus_one`; nullopt when a
  /// denominator is divisible by p.
  std::optional<std::uint64_t> mod(std::uint64_t p, std::uint64_t sqrt_minus_one) const;

  /// `a`, `a*I`, or `(a+b*I)`; bare form never carries parentheses.
  std::string to_string() const;

 private:
  mpq_class re_;
  mpq_class im_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace g2skein::exact
