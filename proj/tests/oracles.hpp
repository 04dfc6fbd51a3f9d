#pragma once

// Reference values and brute-force helpers that do not share code with the
// library.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

namespace oracle {

// Values frozen from mpmath at 30 digits.
inline constexpr double kTheta100 = 87.972165231787219625;
inline constexpr double kTheta1000 = 2034.5464280380316087;
inline constexpr double kTheta5000 = 14197.89761760219781;
inline constexpr double kThetaRoot = 17.845599540410860817;

struct ZetaSample {
  double t, z, re, im;
};
inline constexpr ZetaSample kZetaSamples[] = {
    {14.0, -0.10562626777988261014, 0.022241142609993589246, -0.1032581232664500579},
    {14.2, 0.052045271715564370184, -0.0068162181585979673945, 0.05159699097778206654},
    {60.0, 0.58695049071087436762, 0.54120083514634811115, 0.22718392236826872865},
    {100.0, 2.692697056664463475, 2.6926198856813240905, -0.020386029602598161771},
    {500.0, 1.4724478510550852727, -0.39625650727514661783, -1.4181267413453708155},
    {1000.0, 0.99779463752158661399, 0.35633436719439605507, 0.93199783123299366512},
    {5000.0, -0.80425723635293984958, 0.40684271363543255898, -0.69376415919808510245},
    {20000.0, 1.3447013347897105423, 0.36827044340094162968, -1.2932898206908237487},
};

struct IndexedZero {
  int n;
  double gamma;
};
inline constexpr IndexedZero kZeros[] = {
    {1, 14.13472514173469379},    {2, 21.022039638771554993},    {3, 25.010857580145688763},
    {10, 49.773832477672302182},  {11, 52.970321477714460644},   {29, 98.831194218193692233},
    {30, 101.31785100573139123},  {649, 999.79157155741294046},  {650, 1001.3494826377827371},
    {1000, 1419.4224809459956865}, {1517, 1999.5457641762675889}, {1518, 2000.4345153024322468},
};

// Trial-division arithmetic.
inline std::uint64_t smallest_factor(std::uint64_t n) {
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return p;
  return n;
}

inline int mobius(std::uint64_t n) {
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  return n > 1 ? -sign : sign;
}

inline std::uint64_t phi(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    std::uint64_t a = k, b = n;
    while (b) {
      const auto r = a % b;
      a = b;
      b = r;
    }
    count += (a == 1);
  }
  return count;
}

// log Gamma(z) by the Lanczos approximation (g = 7, n = 9), Re z > 0.5.
inline std::complex<double> lgamma_lanczos(std::complex<double> z) {
  static const double c[] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                             771.32342877765313,   -176.61502916214059,   12.507343278686905,
                             -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  z -= 1.0;
  std::complex<double> x = c[0];
  for (int i = 1; i < 9; ++i) x += c[i] / (z + static_cast<double>(i));
  const std::complex<double> t = z + 7.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

// theta(t) = arg Gamma(1/4 + it/2) - (t/2) log pi, with the branch of arg
// fixed by continuity; Lanczos needs the shift recurrence for accuracy at
// large t, so this is only used for t <= 200.
inline double theta(double t) {
  const std::complex<double> z{0.25, 0.5 * t};
  // Shift to Re z > 1 where the approximation is tight.
  const std::complex<double> lg = lgamma_lanczos(z + 1.0) - std::log(z);
  return lg.imag() - 0.5 * t * std::log(std::numbers::pi);
}

// zeta(s) frozen from mpmath.
inline const std::complex<double> kZeta2p3i{0.79802198514627572062, -0.11374430805293850022};
inline const std::complex<double> kZeta03p5i{0.67564899811602329843, 0.25414478655467744161};
inline constexpr double kTheta10 = -3.0670743962898952917;

}  // namespace oracle
