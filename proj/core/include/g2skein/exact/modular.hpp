#pragma once

#include <cstdint>
#include <optional>

namespace g2skein::exact::modular {

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t r = a + b;
  return (r >= p || r < a) ? r - p : r;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + (p - b);
}

std::uint64_t pow(std::uint64_t base, std::uint64_t e, std::uint64_t p);

// p must be prime.
inline std::uint64_t inv(std::uint64_t a, std::uint64_t p) { return pow(a, p - 2, p); }

bool is_prime(std::uint64_t n);

/// A square root of -1 modulo a prime p = 1 (mod 4); nullopt otherwise.
std::optional<std::uint64_t> sqrt_minus_one(std::uint64_t p);

/// Default prime for randomized identity testing: the largest prime below
/// 2^62 that is 1 mod 4.
std::uint64_t default_prime();

}  // namespace g2skein::exact::modular
