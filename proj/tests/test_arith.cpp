#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "mollint/arith.hpp"
#include "mollint/error.hpp"
#include "oracles.hpp"

using namespace mollint;

TEST_CASE("sieve smallest prime factors") {
  FactorSieve s10(10);
  CHECK(s10.spf(10) == 2);
  CHECK(s10.spf(9) == 3);
  CHECK(s10.spf(7) == 7);
  CHECK(FactorSieve(2).spf(2) == 2);
  CHECK(FactorSieve(30).spf(25) == 5);

  FactorSieve s(20000);
  for (std::uint64_t n = 2; n <= 20000; ++n) {
    REQUIRE(s.spf(n) == oracle::smallest_factor(n));
    REQUIRE(s.is_prime(n) == (oracle::smallest_factor(n) == n));
  }
}

TEST_CASE("sieve sizing errors") {
  CHECK_THROWS_AS(FactorSieve(1), SizingError);
  CHECK_THROWS_AS(FactorSieve(0), SizingError);
  CHECK_THROWS_AS(FactorSieve(1000, 100), SizingError);
  FactorSieve s(50);
  CHECK_THROWS_AS(s.mobius(51), DomainError);
  CHECK_THROWS_AS(s.euler_phi(51), DomainError);
  CHECK_THROWS_AS(s.von_mangoldt(51), DomainError);
}

TEST_CASE("mobius, phi and von Mangoldt examples") {
  FactorSieve s(100);
  CHECK(s.mobius(1) == 1);
  CHECK(s.mobius(12) == 0);
  CHECK(s.mobius(30) == -1);
  CHECK(s.euler_phi(1) == 1);
  CHECK(s.euler_phi(10) == 4);
  CHECK(s.euler_phi(97) == 96);
  CHECK(s.von_mangoldt(8) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(s.von_mangoldt(1) == 0.0);
  CHECK(s.von_mangoldt(6) == 0.0);
}

TEST_CASE("agreement with trial division") {
  FactorSieve s(3000);
  for (std::uint64_t n = 1; n <= 3000; ++n) {
    REQUIRE(s.mobius(n) == oracle::mobius(n));
    REQUIRE(s.euler_phi(n) == oracle::phi(n));
  }
}

TEST_CASE("divisor-sum identities up to 1e4") {
  const std::uint64_t L = 10000;
  FactorSieve s(L);
  std::vector<std::uint64_t> phi_sum(L + 1, 0);
  std::vector<std::int64_t> mu_sum(L + 1, 0);
  std::vector<double> lambda_sum(L + 1, 0.0);
  for (std::uint64_t d = 1; d <= L; ++d)
    for (std::uint64_t n = d; n <= L; n += d) {
      phi_sum[n] += s.euler_phi(d);
      mu_sum[n] += s.mobius(d);
      lambda_sum[n] += s.von_mangoldt(d);
    }
  for (std::uint64_t n = 1; n <= L; ++n) {
    REQUIRE(phi_sum[n] == n);
    REQUIRE(mu_sum[n] == (n == 1 ? 1 : 0));
    const double logn = std::log(static_cast<double>(n));
    REQUIRE(std::fabs(lambda_sum[n] - logn) <= 1e-12 * std::max(1.0, logn));
  }
}

TEST_CASE("multiplicativity on random coprime pairs") {
  FactorSieve s(1'000'000);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> U(1, 1000);
  int checked = 0;
  while (checked < 500) {
    const auto m = U(rng), n = U(rng);
    if (std::gcd(m, n) != 1) continue;
    ++checked;
    REQUIRE(s.mobius(m * n) == s.mobius(m) * s.mobius(n));
    REQUIRE(s.euler_phi(m * n) == s.euler_phi(m) * s.euler_phi(n));
  }
}

TEST_CASE("factorization") {
  FactorSieve s(1000);
  const auto f = s.factorize(360);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::pair<std::uint32_t, int>{2, 3});
  CHECK(f[1] == std::pair<std::uint32_t, int>{3, 2});
  CHECK(f[2] == std::pair<std::uint32_t, int>{5, 1});
  CHECK(s.factorize(1).empty());
}

TEST_CASE("gcd_lcm") {
  CHECK(gcd_lcm(4, 6).gcd == 2);
  CHECK(gcd_lcm(4, 6).lcm == 12);
  CHECK(gcd_lcm(1, 97).gcd == 1);
  CHECK(gcd_lcm(1, 97).lcm == 97);
  CHECK(gcd_lcm(12, 18).gcd == 6);
  CHECK(gcd_lcm(12, 18).lcm == 36);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint64_t> U(1, 1'000'000'000);
  for (int i = 0; i < 1000; ++i) {
    const auto d = U(rng), e = U(rng);
    const auto r = gcd_lcm(d, e);
    REQUIRE(r.gcd * r.lcm == d * e);
  }
  CHECK_THROWS_AS(gcd_lcm(0, 5), DomainError);
  CHECK_THROWS_AS(gcd_lcm((1ULL << 62) + 1, (1ULL << 62) + 3), OverflowError);
}
