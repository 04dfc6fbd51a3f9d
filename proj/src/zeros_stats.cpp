#include "mollint/zeros_stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "mollint/error.hpp"
#include "mollint/parallel.hpp"
#include "mollint/quadrature.hpp"
#include "mollint/summation.hpp"

namespace mollint {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> zeros_in_window(const ZeroTable& Z, double T, const PairOptions& options) {
  if (!(T >= kCriticalLineFloor)) throw DomainError("zero statistics need T >= 10");
  if (!options.override_coverage) {
    if (!Z.covers(T, 2.0 * T))
      throw CoverageError("zero table covers [" + std::to_string(Z.t_min()) + ", " + std::to_string(Z.t_max()) +
                          "], not [T, 2T] = [" + std::to_string(T) + ", " + std::to_string(2 * T) + "]");
    if (!Z.claimed_complete())
      throw CoverageError("zero table is not certified complete; pass the coverage override to use it anyway");
  }
  if (options.edge_trim < 0.0 || 2.0 * options.edge_trim >= T) throw DomainError("edge trim must lie in [0, T/2)");
  return Z.window(T + options.edge_trim, 2.0 * T - options.edge_trim);
}

// Ordered pairs (i, j) with |g_i - g_j| <= cutoff, stored as differences.
std::vector<double> pair_differences(const std::vector<double>& g, double cutoff) {
  std::vector<double> d;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto lo = std::lower_bound(g.begin(), g.end(), g[i] - cutoff);
    const auto hi = std::upper_bound(g.begin(), g.end(), g[i] + cutoff);
    for (auto it = lo; it != hi; ++it) d.push_back(g[i] - *it);
  }
  return d;
}

double von_mangoldt_small(std::uint64_t n) {
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    return n == 1 ? std::log(static_cast<double>(p)) : 0.0;
  }
  return n >= 2 ? std::log(static_cast<double>(n)) : 0.0;
}

}  // namespace

WellSpacedSet wellspaced_subset(std::span<const double> ordinates, double delta) {
  if (!(delta > 0.0)) throw DomainError("well-spaced selection needs delta > 0");
  if (ordinates.empty()) throw DomainError("well-spaced selection needs a non-empty table");
  WellSpacedSet S;
  S.delta = delta;
  S.parent_count = ordinates.size();
  for (double g : ordinates)
    if (S.ordinates.empty() || g - S.ordinates.back() >= delta) S.ordinates.push_back(g);
  return S;
}

WellSpacedSet wellspaced_subset(const ZeroTable& Z, double delta) { return wellspaced_subset(Z.ordinates(), delta); }

PairCorrelation pair_correlation(const ZeroTable& Z, double T, std::span<const double> alphas,
                                 const PairOptions& options) {
  if (!(options.pair_cutoff >= 50.0)) throw DomainError("pair cutoff must be at least 50");
  const auto g = zeros_in_window(Z, T, options);
  const auto d = pair_differences(g, options.pair_cutoff);
  std::vector<double> w(d.size());
  for (std::size_t k = 0; k < d.size(); ++k) w[k] = pair_weight(d[k]);
  const double logT = std::log(T);
  const double norm = 2.0 * kPi / (T * logT);

  PairCorrelation out;
  out.T = T;
  out.alphas.assign(alphas.begin(), alphas.end());
  out.pair_cutoff = options.pair_cutoff;
  out.zero_count = g.size();
  // w(x) <= 4/x^2 beyond the cutoff, zero density log(T/2pi)/2pi per unit height.
  out.tail_estimate = 2.0 * (logT / (2.0 * kPi)) * 4.0 / options.pair_cutoff;
  const auto sums = parallel_map(alphas.size(), [&](std::size_t a) {
    const double freq = alphas[a] * logT;
    CompensatedComplexSum s;
    for (std::size_t k = 0; k < d.size(); ++k) s.add(w[k] * std::polar(1.0, freq * d[k]));
    return s.value() * norm;
  });
  out.values.resize(sums.size());
  for (std::size_t a = 0; a < sums.size(); ++a) {
    out.values[a] = sums[a].real();
    out.max_imag = std::max(out.max_imag, std::fabs(sums[a].imag()));
  }
  return out;
}

double pair_correlation(const ZeroTable& Z, double T, double alpha, const PairOptions& options) {
  const double a[] = {alpha};
  return pair_correlation(Z, T, a, options).values[0];
}

double integral_hF(const ZeroTable& Z, double T, const PlateauWindow& h, std::size_t grid, const PairOptions& options) {
  if (grid < 2) throw DomainError("integral_hF needs at least two grid points");
  const Interval s = h.support();
  std::vector<double> alphas(grid);
  for (std::size_t i = 0; i < grid; ++i)
    alphas[i] = s.lo + (s.hi - s.lo) * static_cast<double>(i) / static_cast<double>(grid - 1);
  const auto F = pair_correlation(Z, T, alphas, options);
  const double step = (s.hi - s.lo) / static_cast<double>(grid - 1);
  CompensatedSum acc;
  for (std::size_t i = 0; i < grid; ++i) {
    const double wt = (i == 0 || i + 1 == grid) ? 0.5 : 1.0;
    acc.add(wt * step * h(alphas[i]) * F.values[i]);
  }
  return acc.value();
}

double hat_pair_sum(const ZeroTable& Z, double T, const PlateauWindow& h, bool weighted, const PairOptions& options) {
  const auto g = zeros_in_window(Z, T, options);
  const auto d = pair_differences(g, options.pair_cutoff);
  const double scale = std::log(T) / (2.0 * kPi);
  const auto terms = parallel_map(d.size(), [&](std::size_t k) {
    const double hx = window_fourier(h, scale * d[k], 1e-12).real();
    return weighted ? hx * pair_weight(d[k]) : hx;
  });
  return compensated_total(terms);
}

GonekResult gonek_sum(const ZeroTable& Z, std::uint64_t n, double T, const PairOptions& options) {
  if (n < 2) throw DomainError("gonek_sum needs n >= 2");
  const auto g = zeros_in_window(Z, T, options);
  const double logn = std::log(static_cast<double>(n));
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  CompensatedComplexSum s;
  for (double gamma : g) s.add(std::polar(amp, -gamma * logn));
  const double logT = std::log(T);
  return GonekResult{s.value(), -(T / (2.0 * kPi)) * von_mangoldt_small(n) / static_cast<double>(n),
                     logT * logT * static_cast<double>(n)};
}

double propA_rhs(const WellSpacedSet& S, double T, double theta, double A) {
  if (!(A > 0.0) || !(theta > 0.0) || !(T > 1.0)) throw DomainError("propA_rhs needs T > 1, theta > 0, A > 0");
  const double expected = 2.0 * kPi * A / std::log(T);
  if (std::fabs(S.delta - expected) > 1e-9) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "well-spaced set has delta = " << S.delta << " but 2 pi A / log T = " << expected;
    throw ContractError(msg.str());
  }
  const double density = static_cast<double>(S.size()) / ((T / (2.0 * kPi)) * std::log(T));
  return density / (1.0 + theta + 1.0 / A);
}

double thm3_rhs(const std::function<double(double)>& F, double theta, double eps, std::size_t grid) {
  if (grid < 2) throw DomainError("thm3_rhs needs at least two grid points");
  if (!(theta + eps > 0.0)) throw DomainError("thm3_rhs needs theta + eps > 0");
  const double integral = trapezoid(F, 1.0, 1.0 + theta + eps, grid);
  return 1.0 / (0.5 + integral);
}

double thm3_rhs(const ZeroTable& Z, double T, double theta, double eps, std::size_t grid, const PairOptions& options) {
  if (grid < 2) throw DomainError("thm3_rhs needs at least two grid points");
  std::vector<double> alphas(grid);
  const double hi = 1.0 + theta + eps;
  for (std::size_t i = 0; i < grid; ++i) alphas[i] = 1.0 + (hi - 1.0) * static_cast<double>(i) / static_cast<double>(grid - 1);
  const auto F = pair_correlation(Z, T, alphas, options);
  std::size_t i = 0;
  return thm3_rhs([&](double) { return F.values[i++]; }, theta, eps, grid);
}

PlancherelResult plancherel_bound_check(std::span<const double> ordinates, const PlateauWindow& f,
                                        const PlancherelKernel& K, std::size_t vgrid) {
  if (ordinates.empty()) throw DomainError("plancherel_bound_check needs at least one ordinate");
  const Interval s = f.support();
  const double len = s.length();
  auto kernel = [&K](double v) {
    if (const auto* mk = std::get_if<MajorantKernel>(&K)) return (*mk)(v);
    const double gv = std::get<SquaredWindow>(K).g(v);
    return gv * gv;
  };
  // Contract: K >= f^2 on a grid a little wider than supp f.
  const double lo = s.lo - 0.25 * len, hi = s.hi + 0.25 * len;
  for (std::size_t i = 0; i < vgrid; ++i) {
    const double v = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(std::max<std::size_t>(1, vgrid - 1));
    const double fv = f(v);
    if (kernel(v) < fv * fv - 1e-12) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "K < f^2 at v = " << v << " (K = " << kernel(v) << ", f^2 = " << fv * fv << ")";
      throw ContractError(msg.str());
    }
  }

  const auto [mn, mx] = std::minmax_element(ordinates.begin(), ordinates.end());
  const double mid = 0.5 * (*mn + *mx);
  const double spread = *mx - *mn;
  if (static_cast<double>(vgrid) < 2.0 * spread * len)
    throw ResolutionError("vgrid " + std::to_string(vgrid) + " does not resolve the exponential sum (need >= " +
                          std::to_string(static_cast<std::size_t>(std::ceil(2.0 * spread * len))) + ")");
  auto integrand = [&](double v) {
    CompensatedComplexSum e;
    for (double g : ordinates) e.add(std::polar(1.0, -2.0 * kPi * (g - mid) * v));
    const double fv = f(v);
    return std::norm(e.value()) * fv * fv;
  };
  const double lhs = composite_gauss_legendre(integrand, s.lo, s.hi, vgrid, 8);

  CompensatedSum rhs;
  if (const auto* mk = std::get_if<MajorantKernel>(&K)) {
    std::vector<double> g(ordinates.begin(), ordinates.end());
    std::sort(g.begin(), g.end());
    const double delta = mk->delta();
    // K^ vanishes outside [-delta, delta].
    std::vector<double> d;
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j)
        if (std::fabs(g[i] - g[j]) <= delta) d.push_back(g[i] - g[j]);
    const auto terms = parallel_map(d.size(), [&](std::size_t k) { return majorant_hat_complex(*mk, d[k]).real(); });
    for (double t : terms) rhs.add(t);
  } else {
    const auto& gw = std::get<SquaredWindow>(K).g;
    const std::size_t n = ordinates.size();
    const auto terms = parallel_map(n * n, [&](std::size_t k) {
      return window_squared_fourier(gw, ordinates[k / n] - ordinates[k % n], 1e-12).real();
    });
    for (double t : terms) rhs.add(t);
  }
  PlancherelResult out{lhs, rhs.value(), false};
  out.satisfied = out.lhs <= out.rhs * (1.0 + 1e-6);
  return out;
}

}  // namespace mollint
