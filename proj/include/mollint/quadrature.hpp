#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <queue>
#include <string>
#include <vector>

#include "mollint/error.hpp"
#include "mollint/summation.hpp"

namespace mollint {

// Gauss-Legendre nodes and weights on [-1, 1], ascending nodes.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Rules are computed by Newton iteration on P_n and cached; safe to call
// concurrently.
const GaussLegendreRule& gauss_legendre(int n);

namespace detail {

template <class R>
struct Accumulator;
template <>
struct Accumulator<double> {
  using type = CompensatedSum;
};
template <>
struct Accumulator<std::complex<double>> {
  using type = CompensatedComplexSum;
};

inline double magnitude(double x) { return std::fabs(x); }
inline double magnitude(std::complex<double> z) { return std::abs(z); }

}  // namespace detail

// Composite Gauss-Legendre over `panels` equal panels with `nodes` points each.
template <class F>
auto composite_gauss_legendre(F&& f, double a, double b, std::size_t panels, int nodes) {
  using R = decltype(f(a));
  const auto& rule = gauss_legendre(nodes);
  const double width = (b - a) / static_cast<double>(panels);
  typename detail::Accumulator<R>::type acc;
  for (std::size_t p = 0; p < panels; ++p) {
    const double lo = a + width * static_cast<double>(p);
    const double mid = lo + 0.5 * width;
    R panel{};
    for (int k = 0; k < nodes; ++k) panel += rule.weights[k] * f(mid + 0.5 * width * rule.nodes[k]);
    acc.add(0.5 * width * panel);
  }
  return acc.value();
}

// Trapezoidal rule with `points` equally spaced samples (points >= 2).
template <class F>
auto trapezoid(F&& f, double a, double b, std::size_t points) {
  using R = decltype(f(a));
  if (points < 2) throw DomainError("trapezoid needs at least two points");
  const double h = (b - a) / static_cast<double>(points - 1);
  typename detail::Accumulator<R>::type acc;
  for (std::size_t i = 0; i < points; ++i) {
    const double w = (i == 0 || i + 1 == points) ? 0.5 : 1.0;
    acc.add(w * h * f(a + h * static_cast<double>(i)));
  }
  return acc.value();
}

template <class R>
struct QuadratureResult {
  R value{};
  double error = 0.0;
  std::size_t segments = 0;
};

namespace detail {

inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Weights of the embedded 7-point Gauss rule at kKronrodNodes[1], [3], [5], [7].
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class R>
struct Segment {
  double a, b;
  R value;
  double error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

template <class F>
auto gk15(F& f, double a, double b) {
  using R = decltype(f(a));
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const R fc = f(c);
  R kron = kKronrodWeights[7] * fc;
  R gauss = kGaussWeights[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kKronrodNodes[j];
    const R s = f(c - dx) + f(c + dx);
    kron += kKronrodWeights[j] * s;
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * s;
  }
  return Segment<R>{a, b, h * kron, magnitude(h * (kron - gauss))};
}

}  // namespace detail

// Globally adaptive Gauss-Kronrod (7/15) integration. Bisects the segment with
// the largest error estimate until the summed estimate falls below `abs_tol`.
// Throws AccuracyError carrying the achieved bound when `max_segments` is hit.
template <class F>
auto adaptive_gauss_kronrod(F&& f, double a, double b, double abs_tol, std::size_t max_segments = 4000) {
  using R = decltype(f(a));
  if (a == b) return QuadratureResult<R>{R{}, 0.0, 0};
  std::priority_queue<detail::Segment<R>> heap;
  heap.push(detail::gk15(f, a, b));
  double total_error = heap.top().error;
  while (total_error > abs_tol) {
    if (heap.size() >= max_segments)
      throw AccuracyError(total_error, "adaptive quadrature did not converge; achieved error " +
                                           std::to_string(total_error));
    const auto worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    auto left = detail::gk15(f, worst.a, mid);
    auto right = detail::gk15(f, mid, worst.b);
    total_error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    // Guard against drift in the running error total.
    if (total_error <= abs_tol) {
      double recount = 0.0;
      auto copy = heap;
      while (!copy.empty()) {
        recount += copy.top().error;
        copy.pop();
      }
      total_error = recount;
    }
  }
  std::vector<detail::Segment<R>> segs;
  segs.reserve(heap.size());
  while (!heap.empty()) {
    segs.push_back(heap.top());
    heap.pop();
  }
  std::sort(segs.begin(), segs.end(), [](const auto& x, const auto& y) { return x.a < y.a; });
  typename detail::Accumulator<R>::type acc;
  for (const auto& s : segs) acc.add(s.value);
  return QuadratureResult<R>{acc.value(), total_error, segs.size()};
}

}  // namespace mollint
