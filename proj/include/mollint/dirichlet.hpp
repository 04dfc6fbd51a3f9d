#pragma once

#include <complex>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mollint/arith.hpp"
#include "mollint/smoothfn.hpp"

namespace mollint {

// Recorded growth bound |a(n)| <= C n^eps. Recorded, not enforced.
struct GrowthBound {
  double C = 1.0;
  double eps = 0.0;
};

// Finite Dirichlet polynomial sum_{n <= N} a(n) n^{-s}, dense coefficients.
// Immutable; copies share a lazily built table of log n.
class DirichletPoly {
 public:
  using value_type = std::complex<double>;

  DirichletPoly() : DirichletPoly(std::vector<value_type>{}) {}
  // coeffs[0] is a(1).
  explicit DirichletPoly(std::vector<value_type> coeffs, std::string label = {},
                         std::optional<GrowthBound> bound = std::nullopt);

  std::size_t length() const noexcept { return coeffs_.size(); }
  bool empty() const noexcept { return coeffs_.empty(); }
  // a(n) for 1 <= n <= N, zero beyond N. n = 0 throws DomainError.
  value_type coeff(std::size_t n) const;
  const std::vector<value_type>& coeffs() const noexcept { return coeffs_; }
  const std::string& label() const noexcept { return label_; }
  const std::optional<GrowthBound>& growth_bound() const noexcept { return bound_; }
  // True when a(1) = 1 and the recorded bound (if any) holds at every n.
  bool admissible(double tol = 1e-12) const;

  // log n for n = 1..N (index n-1). Built once, thread-safe.
  const std::vector<double>& logs() const;

  DirichletPoly relabeled(std::string label) const;

 private:
  struct LogCache;
  std::vector<value_type> coeffs_;
  std::string label_;
  std::optional<GrowthBound> bound_;
  std::shared_ptr<LogCache> cache_;
};

// The delta polynomial a(1) = 1.
DirichletPoly unit_poly();

// L_theta: a(n) = mu(n) (1 - log n / log T^theta), n <= floor(T^theta).
DirichletPoly build_L_theta(double T, double theta, const FactorSieve& sieve);

// Default smoothing window for zeta: plateau [0, 1/2], support [0, 1].
PlateauWindow default_zeta_window();
inline constexpr double kDefaultZetaEpsilon = 0.2;

// a(n) = w(n / T1), T1 = T^{1+epsilon}, n <= floor(T1).
DirichletPoly zeta_window_coeffs(double T, double epsilon, const PlateauWindow& w);

inline constexpr std::size_t kDefaultConvolveCap = 100'000'000;
// b(n) = sum_{de = n} A(d) M(e), n <= N_A N_M.
DirichletPoly dirichlet_convolve(const DirichletPoly& A, const DirichletPoly& M,
                                 std::size_t cap = kDefaultConvolveCap);

// sum a(n) n^{-sigma} e^{-it log n}, compensated.
std::complex<double> evaluate_poly(const DirichletPoly& A, double sigma, double t);

// sum a(n) n^{-iu} f(log n / 2 pi).
std::complex<double> windowed_sum(const DirichletPoly& A, const PlateauWindow& f, double u);

// alpha A + beta B, length max(N_A, N_B).
DirichletPoly linear_combination(std::complex<double> alpha, const DirichletPoly& A,
                                 std::complex<double> beta, const DirichletPoly& B);
// 1 - B.
DirichletPoly one_minus(const DirichletPoly& B);

// CSV with header "n,re,im". Rows may come in any order; missing n are zero.
void write_coeffs_csv(std::ostream& out, const DirichletPoly& A);
void write_coeffs_csv(const std::filesystem::path& path, const DirichletPoly& A);
DirichletPoly read_coeffs_csv(std::istream& in, std::string label = {});
DirichletPoly read_coeffs_csv(const std::filesystem::path& path);

}  // namespace mollint
