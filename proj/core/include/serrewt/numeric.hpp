#pragma once

#include <cstdint>
#include <vector>

namespace serrewt {

// Representative of a mod n in [0, n).
constexpr std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

constexpr std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// base^exp mod n, exp >= 0.
constexpr std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t n) {
  std::int64_t r = 1 % n;
  std::int64_t b = mod(base, n);
  while (exp > 0) {
    if (exp & 1) r = static_cast<std::int64_t>((static_cast<__int128>(r) * b) % n);
    b = static_cast<std::int64_t>((static_cast<__int128>(b) * b) % n);
    exp >>= 1;
  }
  return r;
}

constexpr bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Distinct prime divisors in increasing order.
std::vector<std::int64_t> prime_divisors(std::int64_t n);

// Index i taken cyclically modulo f.
constexpr int cyc(int i, int f) { return static_cast<int>(mod(i, f)); }

}  // namespace serrewt
