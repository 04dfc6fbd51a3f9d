#include "mollint/smoothfn.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>
#include <vector>

#include "mollint/error.hpp"
#include "mollint/parallel.hpp"
#include "mollint/quadrature.hpp"
#include "mollint/summation.hpp"

namespace mollint {

namespace {

constexpr double kPi = std::numbers::pi;

double sinc_pi(double x) {
  // sin(pi x) / (pi x)
  if (std::fabs(x) < 1e-8) return 1.0 - kPi * kPi * x * x / 6.0;
  return std::sin(kPi * x) / (kPi * x);
}

// sin^2(pi x), reduced to the nearest integer first so that it stays accurate
// for large |x|.
double sin_pi_squared(double x) {
  const double d = x - std::nearbyint(x);
  const double s = std::sin(kPi * d);
  return s * s;
}

// sum_{n=1}^{trunc} (y+n)^-2 + 1/(y + trunc + 1/2), y >= 0. Smallest terms first.
double trigamma_series(double y, int trunc) {
  double s = 1.0 / (y + trunc + 0.5);
  for (int n = trunc; n >= 1; --n) {
    const double d = y + n;
    s += 1.0 / (d * d);
  }
  return s;
}

// D(x) = B(x) - sgn(x) for x != 0.
double beurling_excess(double x, int trunc) {
  if (x > 0.0) return sin_pi_squared(x) / (kPi * kPi) * (2.0 / x - 2.0 * trigamma_series(x, trunc));
  const double y = -x;
  const double sc = sinc_pi(y);
  if (y == 0.0) return 1.0;
  return 2.0 * sc * sc + sin_pi_squared(y) / (kPi * kPi) * (2.0 * trigamma_series(y, trunc) - 2.0 / y);
}

// Si(x) for x >= 0.
double sine_integral(double x) {
  if (x <= 4.0) {
    double term = x, sum = x;
    for (int k = 1; k < 60; ++k) {
      term *= -x * x / ((2.0 * k) * (2.0 * k + 1.0));
      const double add = term / (2.0 * k + 1.0);
      sum += add;
      if (std::fabs(add) < 1e-17 * std::fabs(sum)) break;
    }
    return sum;
  }
  // Continued fraction for E1(ix) (modified Lentz).
  using C = std::complex<double>;
  C b(1.0, x);
  C c(1e300, 0.0);
  C d = 1.0 / b;
  C h = d;
  for (int i = 2; i < 200; ++i) {
    const double a = -static_cast<double>((i - 1) * (i - 1));
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const C del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  h *= C(std::cos(x), -std::sin(x));
  return kPi / 2.0 + h.imag();
}

// int_1^inf cos(k s) / s^2 ds, k >= 0.
double cosine_tail(double k) {
  if (k == 0.0) return 1.0;
  return std::cos(k) - k * (kPi / 2.0 - sine_integral(k));
}

// Quadrature table of D on [-U, U], unit panels.
struct ExcessTable {
  std::vector<double> nodes;
  std::vector<double> weighted;  // weight * D(node)
  double U;
};

constexpr int kTableHalfWidth = 1000;
constexpr int kTableNodes = 20;

std::shared_ptr<const ExcessTable> excess_table(int trunc) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const ExcessTable>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(trunc);
    if (it != cache.end()) return it->second;
  }
  const auto& rule = gauss_legendre(kTableNodes);
  const std::size_t panels = 2 * kTableHalfWidth;
  auto table = std::make_shared<ExcessTable>();
  table->U = kTableHalfWidth;
  table->nodes.resize(panels * kTableNodes);
  for (std::size_t p = 0; p < panels; ++p) {
    const double mid = -kTableHalfWidth + static_cast<double>(p) + 0.5;
    for (int k = 0; k < kTableNodes; ++k) table->nodes[p * kTableNodes + k] = mid + 0.5 * rule.nodes[k];
  }
  auto values = parallel_map(table->nodes.size(), [&](std::size_t i) {
    return 0.5 * rule.weights[i % kTableNodes] * beurling_excess(table->nodes[i], trunc);
  });
  table->weighted = std::move(values);
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(trunc, std::move(table));
  return it->second;
}

void check_interval(Interval i, const char* what) {
  if (!(i.lo <= i.hi) || !std::isfinite(i.lo) || !std::isfinite(i.hi))
    throw ContractError(std::string(what) + " must be a finite interval with lo <= hi");
}

}  // namespace

double smooth_step(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double e = 1.0 / x - 1.0 / (1.0 - x);
  if (e > 700.0) return 0.0;
  return 1.0 / (1.0 + std::exp(e));
}

PlateauWindow::PlateauWindow(Interval support, Interval plateau) : support_(support), plateau_(plateau) {
  check_interval(support, "support");
  check_interval(plateau, "plateau");
  if (plateau.lo < support.lo || plateau.hi > support.hi)
    throw ContractError("plateau must lie inside the support");
  if (plateau.lo == support.lo && plateau.hi == support.hi)
    throw ContractError("both ramps have zero width; an indicator is not a smooth window");
}

double PlateauWindow::operator()(double x) const noexcept {
  if (x < support_.lo || x > support_.hi) return 0.0;
  if (x >= plateau_.lo && x <= plateau_.hi) return 1.0;
  if (x < plateau_.lo) return smooth_step((x - support_.lo) / (plateau_.lo - support_.lo));
  return smooth_step((support_.hi - x) / (support_.hi - plateau_.hi));
}

double PlateauWindow::integral() const noexcept {
  return plateau_.length() + 0.5 * (plateau_.lo - support_.lo) + 0.5 * (support_.hi - plateau_.hi);
}

PlateauWindow make_plateau(Interval support, Interval plateau) { return PlateauWindow(support, plateau); }

namespace {

std::complex<double> window_transform(const PlateauWindow& f, double x, double abs_tol, int power) {
  const Interval s = f.support(), p = f.plateau();
  const double L = p.length();
  const double pc = 0.5 * (p.lo + p.hi);
  std::complex<double> total = L * sinc_pi(x * L) * std::polar(1.0, -2.0 * kPi * pc * x);
  auto integrand = [&](double v) {
    const double fv = f(v);
    return (power == 1 ? fv : fv * fv) * std::polar(1.0, -2.0 * kPi * v * x);
  };
  // Oscillation count decides the initial split; the adaptive rule does the rest.
  double achieved = 0.0;
  for (Interval ramp : {Interval{s.lo, p.lo}, Interval{p.hi, s.hi}}) {
    if (ramp.length() <= 0.0) continue;
    const int pieces = 1 + static_cast<int>(std::fabs(x) * ramp.length());
    const double h = ramp.length() / pieces;
    for (int k = 0; k < pieces; ++k) {
      const auto r = adaptive_gauss_kronrod(integrand, ramp.lo + k * h, ramp.lo + (k + 1) * h,
                                            0.5 * abs_tol / pieces);
      total += r.value;
      achieved += r.error;
    }
  }
  if (achieved > abs_tol) throw AccuracyError(achieved, "window transform did not reach tolerance");
  return total;
}

}  // namespace

std::complex<double> window_fourier(const PlateauWindow& f, double x, double abs_tol) {
  return window_transform(f, x, abs_tol, 1);
}

std::complex<double> window_squared_fourier(const PlateauWindow& f, double x, double abs_tol) {
  return window_transform(f, x, abs_tol, 2);
}

double beurling_b(double x, int trunc) {
  if (trunc < 10) throw DomainError("beurling_b needs trunc >= 10");
  if (x == 0.0) return 1.0;
  return (x > 0.0 ? 1.0 : -1.0) + beurling_excess(x, trunc);
}

double beurling_excess_integral(double X, int trunc) {
  if (!(X > 0.0)) throw DomainError("integration half-width must be positive");
  auto D = [trunc](double u) { return beurling_excess(u, trunc); };
  const auto panels = static_cast<std::size_t>(std::ceil(X));
  return composite_gauss_legendre(D, -X, 0.0, panels, 20) + composite_gauss_legendre(D, 0.0, X, panels, 20);
}

MajorantKernel::MajorantKernel(Interval interval, double delta, int trunc)
    : interval_(interval), delta_(delta), trunc_(trunc) {
  if (!(interval.lo < interval.hi)) throw ContractError("majorant interval needs a < b");
  if (!(delta > 0.0)) throw ContractError("majorant bandwidth delta must be positive");
  if (trunc < 10) throw DomainError("majorant needs trunc >= 10");
}

double MajorantKernel::operator()(double x) const {
  return 0.5 * beurling_b(delta_ * (x - interval_.lo), trunc_) +
         0.5 * beurling_b(delta_ * (interval_.hi - x), trunc_);
}

MajorantKernel majorant_make(Interval interval, double delta, int trunc) {
  return MajorantKernel(interval, delta, trunc);
}

std::complex<double> beurling_excess_hat(double eta, int trunc) {
  const auto table = excess_table(trunc);
  CompensatedComplexSum acc;
  for (std::size_t i = 0; i < table->nodes.size(); ++i)
    acc.add(table->weighted[i] * std::polar(1.0, -2.0 * kPi * table->nodes[i] * eta));
  // |u| > U: D(u) ~ sin^2(pi u) / (pi u)^2, whose transform over the tails is
  // (1/pi^2) [I(2 pi eta) - I(2 pi (1+eta))/2 - I(2 pi (1-eta))/2],
  // I(w) = int_U^inf cos(w u)/u^2 du = cosine_tail(|w| U) / U.
  const double U = table->U;
  auto I = [U](double w) { return cosine_tail(std::fabs(w) * U) / U; };
  const double tail = (I(2 * kPi * eta) - 0.5 * I(2 * kPi * (1 + eta)) - 0.5 * I(2 * kPi * (1 - eta))) / (kPi * kPi);
  return acc.value() + tail;
}

std::complex<double> majorant_hat_complex(const MajorantKernel& K, double x) {
  const double a = K.interval().lo, b = K.interval().hi, delta = K.delta();
  const std::complex<double> ea = std::polar(1.0, -2.0 * kPi * a * x);
  const std::complex<double> eb = std::polar(1.0, -2.0 * kPi * b * x);
  // Transform of the indicator of [a, b].
  const double L = b - a;
  const std::complex<double> chi = L * sinc_pi(x * L) * std::polar(1.0, -kPi * (a + b) * x);
  const std::complex<double> da = beurling_excess_hat(x / delta, K.trunc());
  const std::complex<double> db = beurling_excess_hat(-x / delta, K.trunc());
  return chi + (ea * da + eb * db) / (2.0 * delta);
}

double majorant_hat(const MajorantKernel& K, double x) {
  const double c = 0.5 * (K.interval().lo + K.interval().hi);
  return (std::polar(1.0, 2.0 * kPi * c * x) * majorant_hat_complex(K, x)).real();
}

}  // namespace mollint
