#include "mollint/zeta.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>

#include "mollint/error.hpp"
#include "mollint/parallel.hpp"
#include "mollint/summation.hpp"

namespace mollint {

using cplx = std::complex<double>;
using std::numbers::pi;

namespace {

void require_height(double t, const char* what) {
  if (!(t >= kCriticalLineFloor))
    throw DomainError(std::string(what) + " requires t >= 10, got " + std::to_string(t));
}

// B_{2k} / (2k)! for k = 1..15.
constexpr std::array<double, 15> kBernoulliOverFactorial = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0,
    43867.0 / 798.0 / 6402373705728000.0,
    -174611.0 / 330.0 / 2432902008176640000.0,
    854513.0 / 138.0 / 1.1240007277776077e21,
    -236364091.0 / 2730.0 / 6.204484017332394e23,
    8553103.0 / 6.0 / 4.0329146112660565e26,
    -23749461029.0 / 870.0 / 3.0488834461171384e29,
    8615841276005.0 / 14322.0 / 2.6525285981219107e32,
};

// Taylor coefficients (in x = p - 1/2) of the Riemann-Siegel remainder
// coefficients C0..C4, built from the Taylor series of
// Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p).
struct RemainderPolys {
  static constexpr int kDegree = 90;
  std::array<std::vector<double>, 5> c;
};

RemainderPolys build_remainder_polys() {
  constexpr int K = RemainderPolys::kDegree + 13;
  constexpr int P = 1024;
  // Psi is entire; its Taylor coefficients about 1/2 come from the Cauchy
  // integral on the unit circle, evaluated by the (spectrally accurate)
  // trapezoid rule.
  std::vector<cplx> samples(P);
  for (int j = 0; j < P; ++j) {
    const cplx w = std::polar(1.0, 2.0 * pi * j / P);
    const cplx p = 0.5 + w;
    samples[j] = std::cos(2.0 * pi * (p * p - p - 1.0 / 16.0)) / std::cos(2.0 * pi * p);
  }
  std::vector<double> taylor(K + 1);
  for (int k = 0; k <= K; ++k) {
    CompensatedComplexSum acc;
    for (int j = 0; j < P; ++j) acc.add(samples[j] * std::polar(1.0, -2.0 * pi * double(k) * j / P));
    taylor[k] = acc.value().real() / P;
  }
  // deriv[m][j]: coefficient of x^j in Psi^{(m)}.
  std::array<std::vector<double>, 13> deriv;
  for (int m = 0; m <= 12; ++m) {
    deriv[m].assign(RemainderPolys::kDegree + 1, 0.0);
    for (int j = 0; j <= RemainderPolys::kDegree; ++j) {
      double falling = 1.0;
      for (int i = 1; i <= m; ++i) falling *= double(j + i);
      deriv[m][j] = taylor[j + m] * falling;
    }
  }
  const double p2 = pi * pi, p4 = p2 * p2, p6 = p4 * p2, p8 = p4 * p4;
  RemainderPolys out;
  for (auto& poly : out.c) poly.assign(RemainderPolys::kDegree + 1, 0.0);
  for (int j = 0; j <= RemainderPolys::kDegree; ++j) {
    out.c[0][j] = deriv[0][j];
    out.c[1][j] = -deriv[3][j] / (96.0 * p2);
    out.c[2][j] = deriv[2][j] / (64.0 * p2) + deriv[6][j] / (18432.0 * p4);
    out.c[3][j] = -deriv[1][j] / (64.0 * p2) - deriv[5][j] / (3840.0 * p4) -
                  deriv[9][j] / (5308416.0 * p6);
    out.c[4][j] = deriv[0][j] / (128.0 * p2) + 19.0 * deriv[4][j] / (24576.0 * p4) +
                  11.0 * deriv[8][j] / (5898240.0 * p6) + deriv[12][j] / (2038431744.0 * p8);
  }
  return out;
}

const RemainderPolys& remainder_polys() {
  static const RemainderPolys polys = build_remainder_polys();
  return polys;
}

double horner(const std::vector<double>& coeffs, double x) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double hardy_z_riemann_siegel(double t) {
  const double tau = std::sqrt(t / (2.0 * pi));
  const auto n_terms = static_cast<std::int64_t>(std::floor(tau));
  const double theta = rs_theta(t);
  CompensatedSum main;
  for (std::int64_t n = 1; n <= n_terms; ++n) {
    const double dn = static_cast<double>(n);
    main.add(std::cos(theta - t * std::log(dn)) / std::sqrt(dn));
  }
  const double x = (tau - static_cast<double>(n_terms)) - 0.5;
  const auto& polys = remainder_polys();
  double remainder = 0.0;
  double scale = 1.0;
  for (const auto& poly : polys.c) {
    remainder += horner(poly, x) * scale;
    scale /= tau;
  }
  const double sign = (n_terms % 2 == 1) ? 1.0 : -1.0;  // (-1)^(N-1)
  return 2.0 * main.value() + sign * remainder / std::sqrt(tau);
}

double hardy_z_euler_maclaurin(double t) {
  const cplx rotated = std::polar(1.0, rs_theta(t)) * zeta_em(cplx(0.5, t));
  return rotated.real();
}

}  // namespace

double rs_theta(double t) {
  require_height(t, "rs_theta");
  const double inv = 1.0 / t;
  const double inv2 = inv * inv;
  const double series =
      inv * (1.0 / 48.0 +
             inv2 * (7.0 / 5760.0 + inv2 * (31.0 / 80640.0 + inv2 * (127.0 / 430080.0 +
                                                                    inv2 * 511.0 / 1216512.0))));
  return 0.5 * t * std::log(t / (2.0 * pi)) - 0.5 * t - pi / 8.0 + series;
}

cplx zeta_em(cplx s) {
  if (s == cplx(1.0, 0.0)) throw DomainError("zeta has a pole at s = 1");
  const double height = std::abs(s);
  const auto n_terms = static_cast<std::int64_t>(std::ceil(3.0 * height / (2.0 * pi))) + 12;
  CompensatedComplexSum acc;
  for (std::int64_t n = 1; n < n_terms; ++n) acc.add(std::exp(-s * std::log(static_cast<double>(n))));
  const double dN = static_cast<double>(n_terms);
  const double logN = std::log(dN);
  const cplx n_pow = std::exp(-s * logN);  // N^{-s}
  acc.add(n_pow * dN / (s - 1.0));
  acc.add(0.5 * n_pow);
  // Bernoulli corrections: B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}.
  cplx rising = s;           // s (s+1) ... (s+2k-2)
  cplx power = n_pow / dN;   // N^{-s-1}
  for (std::size_t k = 0; k < kBernoulliOverFactorial.size(); ++k) {
    const cplx term = kBernoulliOverFactorial[k] * rising * power;
    acc.add(term);
    if (std::abs(term) < 1e-17 * std::abs(acc.value())) break;
    const double m = 2.0 * double(k + 1);
    rising *= (s + (m - 1.0)) * (s + m);
    power /= dN * dN;
  }
  return acc.value();
}

double hardy_z(double t) {
  require_height(t, "hardy_z");
  return t <= 50.0 ? hardy_z_euler_maclaurin(t) : hardy_z_riemann_siegel(t);
}

cplx zeta_critical(double t) {
  require_height(t, "zeta_critical");
  return std::polar(1.0, -rs_theta(t)) * hardy_z(t);
}

cplx zeta_half_line(double t) {
  const double a = std::fabs(t);
  const cplx value = a < kCriticalLineFloor ? zeta_em(cplx(0.5, a)) : zeta_critical(a);
  return t < 0.0 ? std::conj(value) : value;
}

CriticalValue critical_value(double t) {
  require_height(t, "critical_value");
  const double z = hardy_z(t);
  return {t, z, std::polar(1.0, -rs_theta(t)) * z};
}

double count_zeros_rvm(double T) {
  require_height(T, "count_zeros_rvm");
  const double x = T / (2.0 * pi);
  return x * std::log(x) - x + 7.0 / 8.0;
}

std::int64_t count_zeros_exact(double T) {
  require_height(T, "count_zeros_exact");
  if (std::fabs(hardy_z(T)) < 1e-8)
    throw DomainError("count_zeros_exact: T = " + std::to_string(T) + " lies on a zero");
  // arg zeta(sigma + iT) is within 0.1 of 0 for sigma >= 4; follow it
  // continuously down to sigma = 1/2, halving steps whose phase jump is large.
  constexpr double kStart = 4.0, kEnd = 0.5;
  constexpr int kInitialSteps = 48;
  std::function<double(double, cplx, double, cplx, int)> track =
      [&](double s0, cplx z0, double s1, cplx z1, int depth) -> double {
    const double jump = std::arg(z1 / z0);
    if (std::fabs(jump) < pi / 4.0 || depth > 40) return jump;
    const double mid = 0.5 * (s0 + s1);
    const cplx zm = zeta_em(cplx(mid, T));
    return track(s0, z0, mid, zm, depth + 1) + track(mid, zm, s1, z1, depth + 1);
  };
  double phase = 0.0;
  double s_prev = kStart;
  cplx z_prev = zeta_em(cplx(kStart, T));
  phase += std::arg(z_prev);
  for (int i = 1; i <= kInitialSteps; ++i) {
    const double s = kStart + (kEnd - kStart) * double(i) / kInitialSteps;
    const cplx z = zeta_em(cplx(s, T));
    phase += track(s_prev, z_prev, s, z, 0);
    s_prev = s;
    z_prev = z;
  }
  const double estimate = rs_theta(T) / pi + 1.0 + phase / pi;
  const double rounded = std::round(estimate);
  if (std::fabs(estimate - rounded) > 0.2)
    throw DomainError("count_zeros_exact: non-integral count " + std::to_string(estimate) +
                      " at T = " + std::to_string(T));
  return static_cast<std::int64_t>(rounded);
}

// ---------------------------------------------------------------------------
// ZeroTable

ZeroTable::ZeroTable(std::vector<double> ordinates, ZeroSource source, double t_min, double t_max,
                     bool claimed_complete)
    : ordinates_(std::move(ordinates)),
      source_(source),
      t_min_(t_min),
      t_max_(t_max),
      claimed_complete_(claimed_complete) {
  if (!(t_min <= t_max)) throw ContractError("zero table range is inverted");
  for (std::size_t i = 0; i < ordinates_.size(); ++i) {
    const double g = ordinates_[i];
    if (!(g >= t_min && g <= t_max))
      throw ContractError("ordinate " + std::to_string(g) + " outside table range");
    if (i > 0 && !(g > ordinates_[i - 1]))
      throw ContractError("ordinates not strictly increasing at index " + std::to_string(i));
  }
}

std::vector<double> ZeroTable::window(double a, double b) const {
  const auto lo = std::lower_bound(ordinates_.begin(), ordinates_.end(), a);
  const auto hi = std::upper_bound(ordinates_.begin(), ordinates_.end(), b);
  return {lo, hi};
}

// ---------------------------------------------------------------------------
// Zero finding

namespace {

double bisect_root(double lo, double z_lo, double hi, double tolerance) {
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    const double z_mid = hardy_z(mid);
    if (z_mid == 0.0) return mid;
    if ((z_mid < 0.0) == (z_lo < 0.0)) {
      lo = mid;
      z_lo = z_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Minimizes sign * Z on [lo, hi] by golden-section search.
std::pair<double, double> golden_min(double lo, double hi, double sign) {
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - ratio * (b - a), d = a + ratio * (b - a);
  double fc = sign * hardy_z(c), fd = sign * hardy_z(d);
  for (int i = 0; i < 60 && b - a > 1e-9; ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - ratio * (b - a);
      fc = sign * hardy_z(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + ratio * (b - a);
      fd = sign * hardy_z(d);
    }
  }
  return fc < fd ? std::pair{c, fc} : std::pair{d, fd};
}

struct ScanResult {
  std::vector<double> zeros;
  std::vector<std::pair<double, double>> suspects;  // same-sign dips that held no pair
};

ScanResult scan(double t0, double t1, double step, double tolerance) {
  const auto n = static_cast<std::size_t>(std::ceil((t1 - t0) / step));
  const double h = (t1 - t0) / static_cast<double>(n);
  auto grid = [&](std::size_t i) { return i == n ? t1 : t0 + h * static_cast<double>(i); };
  const auto values = parallel_map(n + 1, [&](std::size_t i) { return hardy_z(grid(i)); });

  ScanResult out;
  for (std::size_t i = 0; i < n; ++i) {
    const double za = values[i], zb = values[i + 1];
    if (za == 0.0) {
      if (i > 0) out.zeros.push_back(grid(i));  // the first grid point is handled by the caller's window
      continue;
    }
    if ((za < 0.0) != (zb < 0.0) && zb != 0.0) out.zeros.push_back(bisect_root(grid(i), za, grid(i + 1), tolerance));
  }
  // Lehmer-type near misses: |Z| dips at an interior grid point without a
  // sign change on either side. Look for a hidden pair of zeros.
  for (std::size_t i = 1; i < n; ++i) {
    const double zl = values[i - 1], zm = values[i], zr = values[i + 1];
    const bool same = (zl < 0.0) == (zm < 0.0) && (zm < 0.0) == (zr < 0.0) && zm != 0.0;
    if (!same || std::fabs(zm) > std::fabs(zl) || std::fabs(zm) > std::fabs(zr)) continue;
    const double sign = zm > 0.0 ? 1.0 : -1.0;
    const auto [t_min, f_min] = golden_min(grid(i - 1), grid(i + 1), sign);
    if (f_min < 0.0) {
      const double z_left = values[i - 1];
      out.zeros.push_back(bisect_root(grid(i - 1), z_left, t_min, tolerance));
      out.zeros.push_back(bisect_root(t_min, sign * f_min, grid(i + 1), tolerance));
    } else {
      out.suspects.emplace_back(grid(i - 1), grid(i + 1));
    }
  }
  std::sort(out.zeros.begin(), out.zeros.end());
  out.zeros.erase(std::unique(out.zeros.begin(), out.zeros.end(),
                              [&](double x, double y) { return y - x <= 2.0 * tolerance; }),
                  out.zeros.end());
  return out;
}

std::string format_interval(double a, double b) {
  std::ostringstream os;
  os.precision(10);
  os << "[" << a << ", " << b << "]";
  return os.str();
}

}  // namespace

ZeroTable find_zeros(double t0, double t1, const FindZerosOptions& options) {
  if (!(t0 >= kCriticalLineFloor && t0 < t1))
    throw DomainError("find_zeros needs 10 <= t0 < t1");
  const std::int64_t expected = count_zeros_exact(t1) - count_zeros_exact(t0);
  const double base_step = options.step_scale * 0.5 / std::log(t1);

  ScanResult result = scan(t0, t1, base_step, options.tolerance);
  auto found = static_cast<std::int64_t>(result.zeros.size());
  if (found != expected && options.refine_on_mismatch) {
    result = scan(t0, t1, base_step / 4.0, options.tolerance);
    found = static_cast<std::int64_t>(result.zeros.size());
  }
  ZeroTable table(result.zeros, ZeroSource::computed, t0, t1, found == expected);
  if (found != expected) {
    table.add_diagnostic("count mismatch: found " + std::to_string(found) + ", N(t1) - N(t0) = " +
                         std::to_string(expected));
    for (const auto& [a, b] : result.suspects) table.add_diagnostic("suspect gap " + format_interval(a, b));
    const auto check = verify_zero_table(table, t0, t1);
    table.add_diagnostic("widest normalized gap " +
                         format_interval(check.widest_gap_lo, check.widest_gap_hi));
  }
  return table;
}

ZeroCountCheck verify_zero_table(const ZeroTable& table, double a, double b) {
  ZeroCountCheck check;
  check.a = a;
  check.b = b;
  const auto zs = table.window(a, b);
  check.found = static_cast<std::int64_t>(zs.size());
  check.expected = count_zeros_exact(b) - count_zeros_exact(a);
  check.rvm_estimate = count_zeros_rvm(b) - count_zeros_rvm(a);
  check.pass = check.found == check.expected;
  std::vector<double> edges;
  edges.reserve(zs.size() + 2);
  edges.push_back(a);
  edges.insert(edges.end(), zs.begin(), zs.end());
  edges.push_back(b);
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double mid = 0.5 * (edges[i] + edges[i + 1]);
    const double density = std::log(std::max(mid, 2.0 * pi * std::exp(1.0)) / (2.0 * pi)) / (2.0 * pi);
    const double normalized = (edges[i + 1] - edges[i]) * density;
    if (normalized > check.widest_gap_normalized) {
      check.widest_gap_normalized = normalized;
      check.widest_gap_lo = edges[i];
      check.widest_gap_hi = edges[i + 1];
    }
  }
  return check;
}

// ---------------------------------------------------------------------------
// Zero-table text format

ZeroTable parse_zero_table(std::istream& in, double t_min, double t_max) {
  std::vector<double> selected;
  std::string line;
  std::size_t line_no = 0;
  bool have_prev = false;
  double prev = 0.0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    const char* begin = line.data() + first;
    const char* end = line.data() + last + 1;
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) throw ParseError(line_no, "not a decimal ordinate: '" + line + "'");
    if (have_prev && !(value > prev))
      throw ParseError(line_no, "ordinates must be strictly increasing");
    have_prev = true;
    prev = value;
    if (value >= t_min && value <= t_max) selected.push_back(value);
  }
  ZeroTable table(std::move(selected), ZeroSource::imported, t_min, t_max, false);
  if (table.empty()) table.add_diagnostic("warning: no ordinates in " + format_interval(t_min, t_max));
  return table;
}

ZeroTable import_zero_table(const std::filesystem::path& path, double t_min, double t_max) {
  std::ifstream in(path);
  if (!in) throw ContractError("cannot open zero table " + path.string());
  return parse_zero_table(in, t_min, t_max);
}

void write_zero_table(std::ostream& out, const ZeroTable& table) {
  char buf[64];
  for (double g : table.ordinates()) {
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, g);
    out.write(buf, ptr - buf);
    out.put('\n');
  }
}

void write_zero_table(const std::filesystem::path& path, const ZeroTable& table) {
  std::ofstream out(path);
  if (!out) throw ContractError("cannot write zero table " + path.string());
  write_zero_table(out, table);
}

}  // namespace mollint
