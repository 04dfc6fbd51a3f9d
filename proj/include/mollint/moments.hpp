#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "mollint/dirichlet.hpp"

namespace mollint {

inline constexpr double kEulerGamma = 0.57721566490153286;

struct QuadratureInfo {
  std::size_t panels = 0;
  int nodes = 0;
  // |value(panels) - value(panels / 2)|.
  double estimated_error = 0.0;
};

struct MomentReport {
  double T = 0.0;
  std::optional<double> theta;
  double value = 0.0;
  QuadratureInfo quadrature;
  std::string mollifier_label;
};

struct MomentOptions {
  // 0 selects the resolution floor.
  std::size_t panels = 0;
  int nodes = 8;
  // Accept panel counts below the floor.
  bool force = false;
  std::optional<double> theta;  // recorded in the report only
};

// Four panels per mean zero gap 2 pi / log(height) over an interval of the
// given length at the given height.
std::size_t resolution_floor(double length, double height);

// (1/T) int_T^{2T} |1 - zeta(1/2+it) M(1/2+it)|^2 dt by composite Gauss-Legendre.
// Refuses (ResolutionError) a panel count below the floor unless forced.
MomentReport mollified_moment(double T, const DirichletPoly& M, const MomentOptions& options = {});

// (1/T) int_T^{2T} |F(1/2+it)|^2 dt for an explicit polynomial F, e.g. 1 - B
// with B the smoothed-zeta approximation of zeta M.
MomentReport polynomial_moment(double T, const DirichletPoly& F, const MomentOptions& options = {});

// sum_{n <= T} |f(n)|^2 / n.
double trivial_bound(const DirichletPoly& F, double T);

inline constexpr std::size_t kBchCap = 5000;
// sum_{m,n} a(m) conj(a(n)) / [m,n] (log(T (m,n)^2 / (2 pi m n)) + 2 log 2 + 2 gamma - 1) - 1,
// complex so callers can check that the imaginary part cancels.
std::complex<double> bch_sum(double T, const DirichletPoly& a, std::size_t cap = kBchCap);
double bch_predicted(double T, const DirichletPoly& a, std::size_t cap = kBchCap);

struct BaezDuarteReport {
  double value = 0.0;  // int_{|t| <= t_cap}
  double tail_bound = 0.0;  // crude bound on the part with |t| > t_cap, never added
  QuadratureInfo quadrature;
};

// int_{-t_cap}^{t_cap} |(1 - zeta(1/2+it) M(1/2+it)) / (1/2+it)|^2 dt.
BaezDuarteReport baez_duarte_moment(const DirichletPoly& M, double t_cap, const MomentOptions& options = {});

// CSV "t,value" of |1 - zeta M|^2 at `points` equally spaced t in [T, 2T].
void write_moment_trace(std::ostream& out, double T, const DirichletPoly& M, std::size_t points);

}  // namespace mollint
