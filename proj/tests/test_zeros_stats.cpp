#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "mollint/error.hpp"
#include "mollint/zeros_stats.hpp"

using namespace mollint;

namespace {
constexpr double kPi = std::numbers::pi;

const ZeroTable& zeros_1000() {
  static const ZeroTable z = find_zeros(990.0, 2010.0);
  return z;
}

// Largest delta-spaced subsequence by O(n^2) dynamic programming.
std::size_t max_spaced(const std::vector<double>& g, double delta) {
  std::vector<std::size_t> best(g.size(), 1);
  std::size_t top = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (g[i] - g[j] >= delta) best[i] = std::max(best[i], best[j] + 1);
    top = std::max(top, best[i]);
  }
  return top;
}
}  // namespace

TEST_CASE("well-spaced subsets") {
  const auto z = find_zeros(10.0, 100.0);
  CHECK(wellspaced_subset(z, 0.01).size() == z.size());
  CHECK(wellspaced_subset(z, 1000.0).size() == 1);
  const double delta = 2.0 * kPi / std::log(100.0);
  const auto S = wellspaced_subset(z, delta);
  CHECK(S.size() == max_spaced(z.ordinates(), delta));
  CHECK(S.parent_count == 29);
  for (std::size_t i = 1; i < S.size(); ++i) CHECK(S.ordinates[i] - S.ordinates[i - 1] >= delta);
  CHECK_THROWS_AS(wellspaced_subset(z, 0.0), DomainError);
}

TEST_CASE("pair correlation at T = 1000") {
  const auto& Z = zeros_1000();
  REQUIRE(Z.claimed_complete());
  const double T = 1000.0;
  const double alphas[] = {0.0, 0.3, 0.5, 0.7, 0.9, -0.5};
  const auto F = pair_correlation(Z, T, alphas);
  const double norm = 2.0 * kPi / (T * std::log(T));
  CHECK(F.values[0] >= norm * static_cast<double>(F.zero_count));
  for (int i = 1; i <= 4; ++i) CHECK(std::fabs(F.values[i] - alphas[i]) <= 0.25);
  CHECK(std::fabs(F.values[2] - 0.5) <= 0.2);
  CHECK(std::fabs(F.values[5] - F.values[2]) <= 1e-12);
  CHECK(F.max_imag <= 1e-10);
  CHECK(F.tail_estimate > 0.0);
  CHECK(F.zero_count == 1517 - 649);
}

TEST_CASE("pair correlation coverage") {
  const auto z = find_zeros(100.0, 300.0);
  CHECK_THROWS_AS(pair_correlation(z, 200.0, 0.5), CoverageError);
  ZeroTable partial(z.window(100.0, 300.0), ZeroSource::imported, 100.0, 300.0, false);
  CHECK_THROWS_AS(pair_correlation(partial, 120.0, 0.5), CoverageError);
  PairOptions o;
  o.override_coverage = true;
  CHECK_NOTHROW(pair_correlation(partial, 120.0, 0.5, o));
  o.pair_cutoff = 10.0;
  CHECK_THROWS_AS(pair_correlation(partial, 120.0, 0.5, o), DomainError);
}

TEST_CASE("integral of h F") {
  const auto& Z = zeros_1000();
  const double T = 1000.0;
  const auto h = make_plateau({0.2, 0.8}, {0.3, 0.7});
  const double v = integral_hF(Z, T, h, 121);
  // int alpha h = 0.5 * int h by symmetry about 1/2
  CHECK(std::fabs(v - 0.5 * h.integral()) <= 0.2 * 0.6);
}

TEST_CASE("weighted pair sum equals the scaled integral") {
  const auto Z = find_zeros(290.0, 610.0);
  const double T = 300.0;
  const auto h = make_plateau({0.2, 0.8}, {0.3, 0.7});
  const double lhs = hat_pair_sum(Z, T, h, true);
  const double rhs = T * std::log(T) / (2.0 * kPi) * integral_hF(Z, T, h, 401);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-3));
}

TEST_CASE("Gonek sums") {
  const auto& Z = zeros_1000();
  const double T = 1000.0;
  const double env = 3.0 * std::log(T) * std::log(T);
  for (std::uint64_t n : {2, 3, 4, 5, 7, 8, 9}) {
    const auto g = gonek_sum(Z, n, T);
    CAPTURE(n);
    CHECK(std::abs(g.empirical - g.predicted) <= env * static_cast<double>(n));
  }
  CHECK(gonek_sum(Z, 4, T).predicted == doctest::Approx(-(T / (2.0 * kPi)) * std::log(2.0) / 4.0));
  const auto six = gonek_sum(Z, 6, T);
  CHECK(six.predicted == 0.0);
  CHECK(std::abs(six.empirical) <= env * 6.0);
  CHECK_THROWS_AS(gonek_sum(Z, 1, T), DomainError);
}

TEST_CASE("propA and thm3 right-hand sides") {
  const auto& Z = zeros_1000();
  const double T = 1000.0;
  const auto S = wellspaced_subset(Z.window(T, 2.0 * T), 2.0 * kPi / std::log(T));
  const double a = propA_rhs(S, T, 1.0, 1.0);
  CHECK(a > 0.0);
  CHECK(a < 1.0);
  CHECK(propA_rhs(S, T, 100.0, 1.0) < propA_rhs(S, T, 1.0, 1.0));
  CHECK_THROWS_AS(propA_rhs(S, T, 1.0, 2.0), ContractError);
  WellSpacedSet empty;
  empty.delta = S.delta;
  CHECK(propA_rhs(empty, T, 1.0, 1.0) == 0.0);

  CHECK(thm3_rhs([](double) { return 1.0; }, 0.3, 0.05, 50) == doctest::Approx(1.0 / 0.85));
  CHECK(thm3_rhs([](double) { return 0.0; }, 0.3, 0.05, 50) == 2.0);
  const double r = thm3_rhs(Z, T, 0.3, 0.05, 36);
  CHECK(r > 0.0);
  CHECK(r <= 2.0);
}

TEST_CASE("Plancherel bound") {
  const auto f = make_plateau({0.0, 1.0}, {0.25, 0.75});
  const double one[] = {3.7};
  const auto single = plancherel_bound_check(one, f, SquaredWindow{f}, 64);
  CHECK(single.lhs == doctest::Approx(single.rhs).epsilon(1e-9));
  CHECK(single.satisfied);

  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> U(0.0, 20.0);
  std::vector<double> pts(10);
  for (auto& x : pts) x = U(rng);
  const auto K = majorant_make({0.0, 1.0}, 1.0);
  const auto m = plancherel_bound_check(pts, f, K, 200);
  CHECK(m.satisfied);
  CHECK(m.lhs <= m.rhs * (1.0 + 1e-6));
  const auto sq = plancherel_bound_check(pts, f, SquaredWindow{f}, 200);
  CHECK(sq.lhs == doctest::Approx(sq.rhs).epsilon(1e-8));

  CHECK_THROWS_AS(plancherel_bound_check(pts, f, majorant_make({0.45, 0.55}, 4.0), 200), ContractError);
  CHECK_THROWS_AS(plancherel_bound_check(pts, f, K, 5), ResolutionError);
}
