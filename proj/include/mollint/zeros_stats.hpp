#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "mollint/smoothfn.hpp"
#include "mollint/zeta.hpp"

namespace mollint {

struct WellSpacedSet {
  std::vector<double> ordinates;
  double delta = 0.0;
  std::size_t parent_count = 0;
  std::size_t size() const noexcept { return ordinates.size(); }
  double density() const noexcept {
    return parent_count == 0 ? 0.0 : static_cast<double>(ordinates.size()) / static_cast<double>(parent_count);
  }
};

// Greedy left-to-right selection keeping gaps >= delta. Maximum cardinality.
WellSpacedSet wellspaced_subset(std::span<const double> ordinates, double delta);
WellSpacedSet wellspaced_subset(const ZeroTable& Z, double delta);

inline double pair_weight(double x) { return 4.0 / (4.0 + x * x); }

struct PairOptions {
  double pair_cutoff = 200.0;
  // Use a table that is not certified complete over [T, 2T].
  bool override_coverage = false;
  // Sum over [T + edge_trim, 2T - edge_trim].
  double edge_trim = 0.0;
};

struct PairCorrelation {
  double T = 0.0;
  std::vector<double> alphas;
  std::vector<double> values;
  double pair_cutoff = 0.0;
  // Bound on the excluded pairs |gamma - gamma'| > cutoff.
  double tail_estimate = 0.0;
  // Largest |Im| seen in the ordered complex sums.
  double max_imag = 0.0;
  std::size_t zero_count = 0;
};

// F(alpha, T) = (2 pi / (T log T)) sum_{T <= gamma, gamma' <= 2T} T^{i alpha (gamma - gamma')} w(gamma - gamma'),
// diagonal included, pairs restricted to |gamma - gamma'| <= cutoff.
PairCorrelation pair_correlation(const ZeroTable& Z, double T, std::span<const double> alphas,
                                 const PairOptions& options = {});
double pair_correlation(const ZeroTable& Z, double T, double alpha, const PairOptions& options = {});

// int h(alpha) F(alpha, T) d alpha, trapezoid with `grid` points over supp h.
double integral_hF(const ZeroTable& Z, double T, const PlateauWindow& h, std::size_t grid,
                   const PairOptions& options = {});

// sum over pairs in [T, 2T] of h^((log T / 2 pi)(gamma - gamma')), optionally weighted by
// w(gamma - gamma'). With the weight this equals (T log T / 2 pi) int h F.
double hat_pair_sum(const ZeroTable& Z, double T, const PlateauWindow& h, bool weighted,
                    const PairOptions& options = {});

struct GonekResult {
  std::complex<double> empirical;
  double predicted = 0.0;
  double envelope = 0.0;  // (log T)^2 n
};
// sum_{T <= gamma <= 2T} n^{-1/2 - i gamma} against -(T / 2 pi) Lambda(n) / n.
GonekResult gonek_sum(const ZeroTable& Z, std::uint64_t n, double T, const PairOptions& options = {});

// Card(S) / ((T / 2 pi) log T) / (1 + theta + 1/A); S.delta must equal 2 pi A / log T.
double propA_rhs(const WellSpacedSet& S, double T, double theta, double A);

// (1/2 + int_1^{1+theta+eps} F)^{-1}, F from the zeros or supplied directly.
double thm3_rhs(const ZeroTable& Z, double T, double theta, double eps, std::size_t grid,
                const PairOptions& options = {});
double thm3_rhs(const std::function<double(double)>& F, double theta, double eps, std::size_t grid);

// K = g^2 for a window g.
struct SquaredWindow {
  PlateauWindow g;
};
using PlancherelKernel = std::variant<MajorantKernel, SquaredWindow>;

struct PlancherelResult {
  double lhs = 0.0;
  double rhs = 0.0;
  bool satisfied = false;
};

// lhs = int |sum_gamma e^{-2 pi i gamma v}|^2 f(v)^2 dv over supp f (Gauss-Legendre,
// `vgrid` panels), rhs = sum_{gamma, gamma'} K^(gamma - gamma'). K >= f^2 is checked
// on `vgrid` points first (ContractError names the failing point).
PlancherelResult plancherel_bound_check(std::span<const double> ordinates, const PlateauWindow& f,
                                        const PlancherelKernel& K, std::size_t vgrid);

}  // namespace mollint
