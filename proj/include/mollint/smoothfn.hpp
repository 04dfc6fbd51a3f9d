#pragma once

#include <complex>

namespace mollint {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const noexcept { return hi - lo; }
};

// Canonical C-infinity step: 0 for x <= 0, 1 for x >= 1, and
// exp(-1/x) / (exp(-1/x) + exp(-1/(1-x))) in between. step(x) + step(1-x) = 1.
double smooth_step(double x);

// Smooth window: 0 outside `support`, 1 on `plateau`, smooth_step ramps between.
// A zero-width ramp on one side is allowed (the window then jumps there); both
// sides degenerate would be an indicator and is rejected.
class PlateauWindow {
 public:
  PlateauWindow(Interval support, Interval plateau);

  double operator()(double x) const noexcept;
  Interval support() const noexcept { return support_; }
  Interval plateau() const noexcept { return plateau_; }
  double center() const noexcept { return 0.5 * (support_.lo + support_.hi); }
  // Exact integral: plateau length plus half of each ramp width.
  double integral() const noexcept;

 private:
  Interval support_;
  Interval plateau_;
};

PlateauWindow make_plateau(Interval support, Interval plateau);

// f^(x) = int f(v) e^{-2 pi i v x} dv. The plateau part is done in closed form,
// the ramps by adaptive Gauss-Kronrod. Throws AccuracyError if `abs_tol` is not
// reached.
std::complex<double> window_fourier(const PlateauWindow& f, double x, double abs_tol = 1e-10);
// Transform of f^2, same convention.
std::complex<double> window_squared_fourier(const PlateauWindow& f, double x, double abs_tol = 1e-10);

// Beurling's function
//   B(x) = (sin(pi x)/pi)^2 (2/x + sum_{n>=0} (x-n)^-2 - sum_{n>=1} (x+n)^-2),
// evaluated through the cotangent identity so that only the smooth series
// sum_{n=1}^{trunc} (|x|+n)^-2 (plus a midpoint tail term) is summed.
double beurling_b(double x, int trunc = 10000);

// int_{-X}^{X} (B(x) - sgn(x)) dx by Gauss-Legendre on unit panels.
double beurling_excess_integral(double X, int trunc = 10000);

// K(x) = B(delta (x - a))/2 + B(delta (b - x))/2, a majorant of the indicator of
// [a, b] whose transform is supported in [-delta, delta].
class MajorantKernel {
 public:
  MajorantKernel(Interval interval, double delta, int trunc = 10000);

  double operator()(double x) const;
  Interval interval() const noexcept { return interval_; }
  double delta() const noexcept { return delta_; }
  int trunc() const noexcept { return trunc_; }

 private:
  Interval interval_;
  double delta_;
  int trunc_;
};

MajorantKernel majorant_make(Interval interval, double delta, int trunc = 10000);

// K^(x) with the forward convention. Built as
//   chi^(x) + (1/2 delta) [e^{-2 pi i a x} D^(x/delta) + e^{-2 pi i b x} D^(-x/delta)],
// D = B - sgn, where D^ comes from a cached quadrature table of D on [-U, U]
// plus the analytic transform of its leading 1/u^2 tail.
std::complex<double> majorant_hat_complex(const MajorantKernel& K, double x);
// K is even about the midpoint c of its interval; returns the real amplitude
// e^{2 pi i c x} K^(x).
double majorant_hat(const MajorantKernel& K, double x);

// D^(eta) for D = B - sgn, as used above.
std::complex<double> beurling_excess_hat(double eta, int trunc = 10000);

}  // namespace mollint
