#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace mollint {

// Smallest-prime-factor table for 2..limit, built with the linear sieve.
// Immutable after construction; all queries are const and thread-safe.
class FactorSieve {
 public:
  // Default ceiling on `limit` (4 bytes per entry).
  static constexpr std::uint64_t kDefaultMaxLimit = 200'000'000;

  explicit FactorSieve(std::uint64_t limit, std::uint64_t max_limit = kDefaultMaxLimit);

  std::uint64_t limit() const noexcept { return limit_; }
  const std::vector<std::uint32_t>& primes() const noexcept { return primes_; }

  std::uint32_t spf(std::uint64_t n) const;
  bool is_prime(std::uint64_t n) const;

  // Prime factorization as (p, exponent) pairs, ascending p. factorize(1) is empty.
  std::vector<std::pair<std::uint32_t, int>> factorize(std::uint64_t n) const;

  int mobius(std::uint64_t n) const;
  std::uint64_t euler_phi(std::uint64_t n) const;
  // log p when n = p^k, k >= 1; 0 otherwise.
  double von_mangoldt(std::uint64_t n) const;

 private:
  void check_range(std::uint64_t n) const;

  std::uint64_t limit_;
  std::vector<std::uint32_t> spf_;  // spf_[n] for n <= limit_, entries 0 and 1 unused
  std::vector<std::uint32_t> primes_;
};

struct GcdLcm {
  std::uint64_t gcd;
  std::uint64_t lcm;
};

// (d, e) and [d, e]; the lcm is formed as (d / gcd) * e and throws
// OverflowError if that product leaves 64 bits.
GcdLcm gcd_lcm(std::uint64_t d, std::uint64_t e);

}  // namespace mollint
