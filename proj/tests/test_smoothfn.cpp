#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mollint/error.hpp"
#include "mollint/quadrature.hpp"
#include "mollint/smoothfn.hpp"

using namespace mollint;

namespace {
constexpr double kPi = std::numbers::pi;

// Direct series 1/x^2 + sum_{n>=0} (x-n)^-2 - sum_{n>=1} (x+n)^-2 with 2/x in place
// of 1/x^2, summed to n = 10^6 with a tail correction.
double beurling_direct(double x) {
  double s = 2.0 / x;
  const int M = 1'000'000;
  for (int n = 0; n <= M; ++n) s += 1.0 / ((x - n) * (x - n));
  for (int n = 1; n <= M; ++n) s -= 1.0 / ((x + n) * (x + n));
  // tails: sum_{n>M} (x-n)^-2 - (x+n)^-2 ~ 4x / M^2 / 2
  s += 2.0 * x / (static_cast<double>(M) * M);
  const double sn = std::sin(kPi * x) / kPi;
  return sn * sn * s;
}
}  // namespace

TEST_CASE("smooth step") {
  CHECK(smooth_step(-1.0) == 0.0);
  CHECK(smooth_step(0.0) == 0.0);
  CHECK(smooth_step(1.0) == 1.0);
  CHECK(smooth_step(0.5) == doctest::Approx(0.5).epsilon(1e-15));
  for (double x = 0.01; x < 1.0; x += 0.07) CHECK(smooth_step(x) + smooth_step(1.0 - x) == doctest::Approx(1.0));
}

TEST_CASE("plateau window") {
  const auto f = make_plateau({0.0, 3.0}, {1.0, 2.0});
  CHECK(f(1.5) == 1.0);
  CHECK(f(-1.0) == 0.0);
  CHECK(f(0.5) == doctest::Approx(0.5));
  CHECK(f(2.5) == doctest::Approx(0.5));
  CHECK(f.integral() == doctest::Approx(2.0));
  CHECK(f.center() == 1.5);
  CHECK_THROWS_AS(make_plateau({0.0, 1.0}, {0.5, 2.0}), ContractError);
  CHECK_THROWS_AS(make_plateau({0.0, 1.0}, {0.0, 1.0}), ContractError);
  const auto jump = make_plateau({0.0, 1.0}, {0.0, 0.5});
  CHECK(jump(0.0) == 1.0);
  CHECK(jump(0.75) == doctest::Approx(0.5));
}

TEST_CASE("window transform") {
  const auto f = make_plateau({0.0, 3.0}, {1.0, 2.0});
  const auto q = adaptive_gauss_kronrod([&](double v) { return f(v); }, 0.0, 3.0, 1e-13).value;
  CHECK(std::abs(window_fourier(f, 0.0) - q) < 1e-10);
  CHECK(std::abs(window_fourier(f, 10.0)) <= 1e-3 * std::abs(window_fourier(f, 0.0)));
  for (double x : {0.3, 1.7, 4.2}) {
    const auto rotated = std::polar(1.0, 2.0 * kPi * f.center() * x) * window_fourier(f, x);
    CHECK(std::fabs(rotated.imag()) < 1e-10);
    const auto direct = adaptive_gauss_kronrod(
        [&](double v) { return f(v) * std::polar(1.0, -2.0 * kPi * v * x); }, 0.0, 3.0, 1e-12).value;
    CHECK(std::abs(window_fourier(f, x) - direct) < 1e-10);
  }
  const auto sq = adaptive_gauss_kronrod([&](double v) { return f(v) * f(v) * std::cos(2.0 * kPi * v * 0.4); },
                                         0.0, 3.0, 1e-13).value;
  CHECK(std::fabs(window_squared_fourier(f, 0.4).real() - sq) < 1e-10);
}

TEST_CASE("Beurling function values") {
  CHECK(beurling_b(0.0) == 1.0);
  CHECK(beurling_b(5.5) >= 1.0);
  for (double x : {-7.3, -2.5, -0.5, 0.25, 1.5, 3.9}) {
    CAPTURE(x);
    CHECK(std::fabs(beurling_b(x) - beurling_direct(x)) < 1e-8);
  }
  for (double x = -20.0; x <= 20.0; x += 0.0137) REQUIRE(beurling_b(x) >= (x > 0) - (x < 0) - 1e-12);
  CHECK(beurling_b(3.0) == doctest::Approx(1.0));
  CHECK(beurling_b(-3.0) == doctest::Approx(-1.0));
  CHECK(std::fabs(beurling_b(1e-9) - 1.0) < 1e-6);
  CHECK_THROWS_AS(beurling_b(0.3, 5), DomainError);
}

TEST_CASE("Beurling excess integral") {
  const double I50 = beurling_excess_integral(50.0);
  // The tail beyond X is about 1 / (pi^2 X).
  CHECK(std::fabs(I50 + 1.0 / (kPi * kPi * 50.0) - 1.0) < 1e-4);
  CHECK(std::fabs(beurling_excess_integral(1000.0) - 1.0) < 2e-4);
  CHECK(std::abs(beurling_excess_hat(0.0) - 1.0) < 1e-6);
}

TEST_CASE("majorant kernel") {
  for (double delta : {0.5, 1.0, 2.0}) {
    CAPTURE(delta);
    const auto K = majorant_make({0.0, 1.0}, delta);
    for (double x = -5.0 / delta; x <= 1.0 + 5.0 / delta; x += 0.011) {
      const double chi = (x >= 0.0 && x <= 1.0) ? 1.0 : 0.0;
      REQUIRE(K(x) >= chi - 1e-6);
    }
    for (double u = 0.0; u < 3.0; u += 0.31) CHECK(K(u) == doctest::Approx(K(1.0 - u)).epsilon(1e-12));
    CHECK(std::fabs(K(1.0 + 10.0 / delta)) <= 1e-2);
    CHECK(majorant_hat(K, 0.0) == doctest::Approx(1.0 + 1.0 / delta).epsilon(1e-4));
    CHECK(std::fabs(majorant_hat(K, 1.05 * delta)) <= 1e-4 * majorant_hat(K, 0.0));
    CHECK(std::fabs(majorant_hat(K, -2.5 * delta)) <= 1e-4 * majorant_hat(K, 0.0));
    // real amplitude after recentering
    const double x = 0.37 * delta;
    const auto c = majorant_hat_complex(K, x);
    CHECK(std::abs(std::polar(1.0, kPi * x) * c - majorant_hat(K, x)) < 1e-10);
  }
}

TEST_CASE("majorant transform against direct quadrature") {
  // K^(0) - 1 = int (K - chi), checked by plain quadrature.
  const auto K = majorant_make({0.0, 1.0}, 1.0);
  const auto r = composite_gauss_legendre([&](double v) { return K(v) - ((v >= 0.0 && v <= 1.0) ? 1.0 : 0.0); },
                                          -400.0, 401.0, 801, 20);
  // tails beyond |v| = 400 carry about 1 / (pi^2 400)
  CHECK(std::fabs(r + 1.0 / (kPi * kPi * 400.0) - 1.0) < 1e-4);
}
