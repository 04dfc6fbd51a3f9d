#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "mollint/arith.hpp"
#include "mollint/dirichlet.hpp"

namespace mollint {

// Cap on N for the O(N^2) direct forms.
inline constexpr std::size_t kDirectFormCap = 5000;

// G = sum_{n <= N} mu(n)^2 / phi(n).
double big_G(std::size_t N, const FactorSieve& sieve);

// y(l) = sum_{d <= N/l} a(dl) / d, index l-1.
std::vector<std::complex<double>> y_vector(const DirichletPoly& a, const FactorSieve& sieve);

// z(l) = mu(l) l / (G phi(l)), index l-1.
std::vector<double> z_vector(std::size_t N, const FactorSieve& sieve);

enum class GramMode { direct, diagonal };

// sum_{d,e} a(d) conj(a(e)) / [d,e]. Direct mode is capped at kDirectFormCap.
double gram_form(const DirichletPoly& a, const FactorSieve& sieve, GramMode mode);
// Direct double sum kept complex, for the realness check.
std::complex<double> gram_form_complex(const DirichletPoly& a);

struct QuadFormDecomposition {
  std::size_t N = 0;
  double G = 0.0;
  std::vector<std::complex<double>> y;
  std::vector<double> z;
  // sum phi(l)/l^2 |y(l) - z(l)|^2
  double residual = 0.0;
  double gram = 0.0;  // diagonal gram_form
  // |gram - (1/G + residual)| / gram
  double identity_error = 0.0;
};

// Requires a(1) = 1 (ContractError otherwise). Throws ContractError if the
// identity gram = 1/G + residual fails beyond 1e-10 relative.
QuadFormDecomposition diag_residual(const DirichletPoly& a, const FactorSieve& sieve);

// a(n) = sum_{d <= N/n} mu(d) z(nd) / d, the unique sequence with y = z.
DirichletPoly minimizer_coeffs(std::size_t N, const FactorSieve& sieve);

enum class LogMode { direct, telescoped };

// sum_{d,e} a(d) conj(a(e)) / [d,e] log([d,e] / (d,e)).
// telescoped: 2 sum_{p^k l <= N} (log p / p^k)(phi(l)/l^2) Re(y(l) conj(y(p^k l))),
// which matches the direct sum only up to error terms.
double log_form(const DirichletPoly& a, const FactorSieve& sieve, LogMode mode);
std::complex<double> log_form_complex(const DirichletPoly& a);

struct SDecomposition {
  double S1 = 0.0, S2 = 0.0, S3 = 0.0;
  double main = 0.0;  // telescoped log_form
  // Sign s for which main = S1 + s S2 + S3 holds; set by comparing both.
  int s2_sign = 0;
  double error_plus = 0.0;   // |main - (S1 + S2 + S3)|
  double error_minus = 0.0;  // |main - (S1 - S2 + S3)|
};

// Splits the telescoped sum along
// y(l) conj(y(m)) = (y-z)(l) conj((y-z)(m)) + z(l) conj((y-z)(m)) + conj(z(m)) (y-z)(l) + z(l) z(m),
// m = p^k l. Throws ContractError if neither sign reproduces `main` to 1e-10.
SDecomposition s_decomposition(const DirichletPoly& a, const FactorSieve& sieve);

// c = 4 e^{2 gamma - 1} / 2 pi.
double propB_constant();

// log(cT) gram_form - log_form - 1. Direct log_form when N <= kDirectFormCap,
// telescoped otherwise (`used_direct` reports which).
double propB_value(double T, const DirichletPoly& a, const FactorSieve& sieve, bool* used_direct = nullptr);

}  // namespace mollint
