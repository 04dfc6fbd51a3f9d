#include "mollint/arith.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "mollint/error.hpp"

namespace mollint {

FactorSieve::FactorSieve(std::uint64_t limit, std::uint64_t max_limit) : limit_(limit) {
  if (limit < 2) throw SizingError("sieve limit must be at least 2, got " + std::to_string(limit));
  if (limit > max_limit)
    throw SizingError("sieve limit " + std::to_string(limit) + " exceeds budget " +
                      std::to_string(max_limit));
  if (limit > 0xffffffffULL) throw SizingError("sieve limit exceeds 32-bit table entries");
  spf_.assign(limit + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      primes_.push_back(static_cast<std::uint32_t>(i));
    }
    const std::uint32_t si = spf_[i];
    for (std::uint32_t p : primes_) {
      if (p > si || static_cast<std::uint64_t>(p) * i > limit) break;
      spf_[static_cast<std::uint64_t>(p) * i] = p;
    }
  }
}

void FactorSieve::check_range(std::uint64_t n) const {
  if (n == 0 || n > limit_)
    throw DomainError("argument " + std::to_string(n) + " outside sieve range [1, " +
                      std::to_string(limit_) + "]");
}

std::uint32_t FactorSieve::spf(std::uint64_t n) const {
  check_range(n);
  if (n < 2) throw DomainError("spf is undefined for n = 1");
  return spf_[n];
}

bool FactorSieve::is_prime(std::uint64_t n) const {
  check_range(n);
  return n >= 2 && spf_[n] == n;
}

std::vector<std::pair<std::uint32_t, int>> FactorSieve::factorize(std::uint64_t n) const {
  check_range(n);
  std::vector<std::pair<std::uint32_t, int>> out;
  while (n > 1) {
    const std::uint32_t p = spf_[n];
    int k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    out.emplace_back(p, k);
  }
  return out;
}

int FactorSieve::mobius(std::uint64_t n) const {
  check_range(n);
  int sign = 1;
  while (n > 1) {
    const std::uint32_t p = spf_[n];
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  return sign;
}

std::uint64_t FactorSieve::euler_phi(std::uint64_t n) const {
  check_range(n);
  std::uint64_t phi = n;
  while (n > 1) {
    const std::uint32_t p = spf_[n];
    phi = phi / p * (p - 1);
    while (n % p == 0) n /= p;
  }
  return phi;
}

double FactorSieve::von_mangoldt(std::uint64_t n) const {
  check_range(n);
  if (n < 2) return 0.0;
  const std::uint32_t p = spf_[n];
  while (n % p == 0) n /= p;
  return n == 1 ? std::log(static_cast<double>(p)) : 0.0;
}

GcdLcm gcd_lcm(std::uint64_t d, std::uint64_t e) {
  if (d == 0 || e == 0) throw DomainError("gcd_lcm needs positive arguments");
  const std::uint64_t g = std::gcd(d, e);
  std::uint64_t l = 0;
  if (__builtin_mul_overflow(d / g, e, &l))
    throw OverflowError("lcm(" + std::to_string(d) + ", " + std::to_string(e) + ") overflows 64 bits");
  return {g, l};
}

}  // namespace mollint
