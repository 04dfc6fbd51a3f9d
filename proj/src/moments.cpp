#include "mollint/moments.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "mollint/error.hpp"
#include "mollint/parallel.hpp"
#include "mollint/quadrature.hpp"
#include "mollint/summation.hpp"
#include "mollint/zeta.hpp"

namespace mollint {

namespace {

constexpr double kPi = std::numbers::pi;

// Composite Gauss-Legendre with one work item per panel and an index-ordered
// compensated reduction, so the result does not depend on the worker count.
template <class F>
double panel_integral(const F& f, double a, double b, std::size_t panels, int nodes) {
  const auto& rule = gauss_legendre(nodes);
  const double width = (b - a) / static_cast<double>(panels);
  const auto parts = parallel_map(panels, [&](std::size_t p) {
    const double mid = a + width * (static_cast<double>(p) + 0.5);
    CompensatedSum s;
    for (int k = 0; k < nodes; ++k) s.add(rule.weights[k] * f(mid + 0.5 * width * rule.nodes[k]));
    return 0.5 * width * s.value();
  });
  return compensated_total(parts);
}

template <class F>
std::pair<double, QuadratureInfo> refined_integral(const F& f, double a, double b, std::size_t panels, int nodes) {
  const double fine = panel_integral(f, a, b, panels, nodes);
  const double coarse = panel_integral(f, a, b, std::max<std::size_t>(1, panels / 2), nodes);
  return {fine, QuadratureInfo{panels, nodes, std::fabs(fine - coarse)}};
}

std::size_t choose_panels(const MomentOptions& options, std::size_t floor) {
  if (options.nodes < 1) throw DomainError("quadrature needs at least one node per panel");
  if (options.panels == 0) return floor;
  if (options.panels < floor && !options.force)
    throw ResolutionError(std::to_string(options.panels) + " panels is below the resolution floor of " +
                          std::to_string(floor) + " (four per mean zero gap); pass force to override");
  return options.panels;
}

}  // namespace

std::size_t resolution_floor(double length, double height) {
  const double gap = 2.0 * kPi / std::log(std::max(height, 3.0));
  return static_cast<std::size_t>(std::ceil(4.0 * length / gap));
}

MomentReport mollified_moment(double T, const DirichletPoly& M, const MomentOptions& options) {
  if (!(T >= 50.0)) throw DomainError("mollified_moment needs T >= 50");
  const std::size_t panels = choose_panels(options, resolution_floor(T, 2.0 * T));
  auto integrand = [&M](double t) {
    const std::complex<double> zm = zeta_critical(t) * evaluate_poly(M, 0.5, t);
    return std::norm(1.0 - zm);
  };
  M.logs();  // build the shared cache before going parallel
  auto [value, info] = refined_integral(integrand, T, 2.0 * T, panels, options.nodes);
  return MomentReport{T, options.theta, value / T, {info.panels, info.nodes, info.estimated_error / T}, M.label()};
}

MomentReport polynomial_moment(double T, const DirichletPoly& F, const MomentOptions& options) {
  if (!(T >= 50.0)) throw DomainError("polynomial_moment needs T >= 50");
  const std::size_t panels = choose_panels(options, resolution_floor(T, 2.0 * T));
  auto integrand = [&F](double t) { return std::norm(evaluate_poly(F, 0.5, t)); };
  F.logs();
  auto [value, info] = refined_integral(integrand, T, 2.0 * T, panels, options.nodes);
  return MomentReport{T, options.theta, value / T, {info.panels, info.nodes, info.estimated_error / T}, F.label()};
}

double trivial_bound(const DirichletPoly& F, double T) {
  CompensatedSum s;
  const auto n_max = std::min<std::size_t>(F.length(), static_cast<std::size_t>(std::floor(T)));
  for (std::size_t n = 1; n <= n_max; ++n) s.add(std::norm(F.coeffs()[n - 1]) / static_cast<double>(n));
  return s.value();
}

std::complex<double> bch_sum(double T, const DirichletPoly& a, std::size_t cap) {
  const std::size_t N = a.length();
  if (N > cap) throw SizingError("bch double sum capped at N = " + std::to_string(cap));
  if (!(T > 0.0)) throw DomainError("bch_predicted needs T > 0");
  const double shift = std::log(T / (2.0 * kPi)) + 2.0 * std::numbers::ln2 + 2.0 * kEulerGamma - 1.0;
  const auto& c = a.coeffs();
  const auto rows = parallel_map(N, [&](std::size_t i) {
    const std::size_t m = i + 1;
    CompensatedComplexSum s;
    if (c[i] == 0.0) return s.value();
    for (std::size_t n = 1; n <= N; ++n) {
      if (c[n - 1] == 0.0) continue;
      const std::size_t g = std::gcd(m, n);
      const double lcm = static_cast<double>(m / g) * static_cast<double>(n);
      // log((m,n)^2 / mn) = -log([m,n] / (m,n))
      const double weight = (shift - std::log(lcm / static_cast<double>(g))) / lcm;
      s.add(c[i] * std::conj(c[n - 1]) * weight);
    }
    return s.value();
  });
  return compensated_total(rows) - 1.0;
}

double bch_predicted(double T, const DirichletPoly& a, std::size_t cap) { return bch_sum(T, a, cap).real(); }

BaezDuarteReport baez_duarte_moment(const DirichletPoly& M, double t_cap, const MomentOptions& options) {
  if (!(t_cap >= 100.0)) throw DomainError("baez_duarte_moment needs t_cap >= 100");
  const std::size_t panels = choose_panels(options, resolution_floor(2.0 * t_cap, t_cap));
  M.logs();
  auto integrand = [&M](double t) {
    const std::complex<double> zm = zeta_half_line(t) * evaluate_poly(M, 0.5, t);
    return std::norm(1.0 - zm) / (0.25 + t * t);
  };
  auto [value, info] = refined_integral(integrand, -t_cap, t_cap, panels, options.nodes);

  // Tail: |zeta(1/2+it)| <= 0.618 t^{1/6} log t (an explicit subconvexity
  // bound) and |M| <= sum |a(n)| n^{-1/2}; integrate over t = t_cap e^s.
  CompensatedSum abs_sum;
  for (std::size_t n = 1; n <= M.length(); ++n) abs_sum.add(std::abs(M.coeffs()[n - 1]) / std::sqrt(static_cast<double>(n)));
  const double A = abs_sum.value();
  auto tail = [&](double s) {
    const double t = t_cap * std::exp(s);
    const double big = 1.0 + A * 0.618 * std::pow(t, 1.0 / 6.0) * std::log(t);
    return big * big / (0.25 + t * t) * t;
  };
  const double tail_bound = 2.0 * adaptive_gauss_kronrod(tail, 0.0, 120.0, 1e-12).value;
  return BaezDuarteReport{value, tail_bound, info};
}

void write_moment_trace(std::ostream& out, double T, const DirichletPoly& M, std::size_t points) {
  if (points < 2) throw DomainError("trace needs at least two points");
  out << "t,value\n";
  out.precision(17);
  for (std::size_t i = 0; i < points; ++i) {
    const double t = T + T * static_cast<double>(i) / static_cast<double>(points - 1);
    out << t << ',' << std::norm(1.0 - zeta_critical(t) * evaluate_poly(M, 0.5, t)) << '\n';
  }
}

}  // namespace mollint
