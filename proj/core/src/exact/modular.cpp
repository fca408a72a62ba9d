#include "g2skein/exact/modular.hpp"

#include <array>

namespace g2skein::exact::modular {

std::uint64_t pow(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (e != 0) {
    if (e & 1U) result = mul(result, base, p);
    base = mul(base, base, p);
    e >>= 1U;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++r;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  constexpr std::array<std::uint64_t, 12> kWitnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t a : kWitnesses) {
    std::uint64_t x = pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mul(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::optional<std::uint64_t> sqrt_minus_one(std::uint64_t p) {
  if (p % 4 != 1 || !is_prime(p)) return std::nullopt;
  // c^((p-1)/4) squares to -1 for any quadratic non-residue c.
  for (std::uint64_t c = 2; c < p; ++c) {
    if (pow(c, (p - 1) / 2, p) == p - 1) return pow(c, (p - 1) / 4, p);
  }
  return std::nullopt;
}

std::uint64_t default_prime() {
  static const std::uint64_t prime = [] {
    std::uint64_t n = (1ULL << 62) - 1;
    n -= (n % 4 + 3) % 4;  // n = 1 (mod 4)
    while (!is_prime(n)) n -= 4;
    return n;
  }();
  return prime;
}

}  // namespace g2skein::exact::modular
