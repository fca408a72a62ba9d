#include "g2skein/exact/scalar.hpp"

#include <ostream>

#include "g2skein/exact/errors.hpp"
#include "g2skein/exact/modular.hpp"

namespace g2skein::exact {

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_real()) return Scalar(mpq_class(1) / re_);
  mpq_class norm = re_ * re_ + im_ * im_;
  return Scalar(re_ / norm, -im_ / norm);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DivisionByZero();
  if (o.is_real()) {
    re_ /= o.re_;
    if (sgn(im_) != 0) im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  if (a.is_real() && b.is_real()) {
    mpq_class t = a.re_ * b.re_;
    re_ += t;
    return;
  }
  *this += a * b;
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result(1);
  Scalar base = *this;
  while (e != 0) {
    if (e & 1L) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

namespace {

std::optional<std::uint64_t> rational_mod(const mpq_class& q, std::uint64_t p) {
  mpz_class pz;
  mpz_set_ui(pz.get_mpz_t(), static_cast<unsigned long>(p));
  mpz_class num = q.get_num() % pz;
  if (num < 0) num += pz;
  mpz_class den = q.get_den() % pz;
  if (den == 0) return std::nullopt;
  std::uint64_t n = mpz_get_ui(num.get_mpz_t());
  std::uint64_t d = mpz_get_ui(den.get_mpz_t());
  return modular::mul(n, modular::inv(d, p), p);
}

}  // namespace

std::optional<std::uint64_t> Scalar::mod(std::uint64_t p, std::uint64_t sqrt_minus_one) const {
  auto re = rational_mod(re_, p);
  if (!re) return std::nullopt;
  if (is_real()) return re;
  auto im = rational_mod(im_, p);
  if (!im) return std::nullopt;
  return modular::add(*re, modular::mul(*im, sqrt_minus_one, p), p);
}

std::string Scalar::to_string() const {
  if (is_real()) return re_.get_str();
  std::string im;
  if (im_ == 1) {
    im = "I";
  } else if (im_ == -1) {
    im = "-I";
  } else {
    im = im_.get_str() + "*I";
  }
  if (sgn(re_) == 0) return im;
  std::string out = "(" + re_.get_str();
  if (sgn(im_) > 0) out += "+";
  return out + im + ")";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace g2skein::exact
