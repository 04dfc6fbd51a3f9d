#include "mollint/dirichlet.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <mutex>
#include <numbers>
#include <ostream>
#include <sstream>

#include "mollint/error.hpp"
#include "mollint/summation.hpp"

namespace mollint {

struct DirichletPoly::LogCache {
  std::once_flag once;
  std::vector<double> logs;
};

DirichletPoly::DirichletPoly(std::vector<value_type> coeffs, std::string label, std::optional<GrowthBound> bound)
    : coeffs_(std::move(coeffs)), label_(std::move(label)), bound_(bound), cache_(std::make_shared<LogCache>()) {
  for (const auto& c : coeffs_)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw ContractError("Dirichlet coefficients must be finite");
}

DirichletPoly::value_type DirichletPoly::coeff(std::size_t n) const {
  if (n == 0) throw DomainError("Dirichlet coefficients are indexed from 1");
  return n <= coeffs_.size() ? coeffs_[n - 1] : value_type{};
}

bool DirichletPoly::admissible(double tol) const {
  if (coeffs_.empty() || std::abs(coeffs_[0] - 1.0) > tol) return false;
  if (!bound_) return true;
  for (std::size_t n = 1; n <= coeffs_.size(); ++n)
    if (std::abs(coeffs_[n - 1]) > bound_->C * std::pow(static_cast<double>(n), bound_->eps) * (1 + tol))
      return false;
  return true;
}

const std::vector<double>& DirichletPoly::logs() const {
  std::call_once(cache_->once, [this] {
    cache_->logs.resize(coeffs_.size());
    for (std::size_t n = 1; n <= coeffs_.size(); ++n) cache_->logs[n - 1] = std::log(static_cast<double>(n));
  });
  return cache_->logs;
}

DirichletPoly DirichletPoly::relabeled(std::string label) const {
  DirichletPoly out = *this;
  out.label_ = std::move(label);
  return out;
}

DirichletPoly unit_poly() { return DirichletPoly({1.0}, "unit", GrowthBound{1.0, 0.0}); }

DirichletPoly build_L_theta(double T, double theta, const FactorSieve& sieve) {
  if (!(T >= 10.0)) throw DomainError("build_L_theta needs T >= 10");
  if (!(theta > 0.0)) throw DomainError("build_L_theta needs theta > 0");
  const double logN = theta * std::log(T);
  const double Nreal = std::exp(logN);
  if (Nreal < 2.0) throw DomainError("build_L_theta needs T^theta >= 2");
  // Guard against T^theta landing a hair below an integer.
  const auto N = static_cast<std::uint64_t>(std::floor(Nreal * (1.0 + 1e-13)));
  if (N > sieve.limit()) throw SizingError("sieve limit " + std::to_string(sieve.limit()) + " below T^theta = " + std::to_string(N));
  std::vector<std::complex<double>> a(N);
  for (std::uint64_t n = 1; n <= N; ++n) {
    const int mu = sieve.mobius(n);
    a[n - 1] = mu == 0 ? 0.0 : mu * (1.0 - std::log(static_cast<double>(n)) / logN);
  }
  std::ostringstream label;
  label << "L_theta(T=" << T << ",theta=" << theta << ")";
  return DirichletPoly(std::move(a), label.str(), GrowthBound{1.0, 0.0});
}

PlateauWindow default_zeta_window() { return make_plateau({0.0, 1.0}, {0.0, 0.5}); }

DirichletPoly zeta_window_coeffs(double T, double epsilon, const PlateauWindow& w) {
  if (!(epsilon > 0.0)) throw DomainError("zeta_window_coeffs needs epsilon > 0");
  if (w(0.0) != 1.0) throw ContractError("smoothing window must satisfy w(0) = 1");
  if (w.support().lo < 0.0 || w.support().hi > 1.0) throw ContractError("smoothing window must be supported in [0, 1]");
  const double T1 = std::pow(T, 1.0 + epsilon);
  if (!(T1 >= 2.0)) throw DomainError("zeta_window_coeffs needs T^(1+epsilon) >= 2");
  const auto N = static_cast<std::size_t>(std::floor(T1));
  std::vector<std::complex<double>> a(N);
  for (std::size_t n = 1; n <= N; ++n) a[n - 1] = w(static_cast<double>(n) / T1);
  std::ostringstream label;
  label << "zeta_window(T=" << T << ",eps=" << epsilon << ")";
  return DirichletPoly(std::move(a), label.str(), GrowthBound{1.0, 0.0});
}

DirichletPoly dirichlet_convolve(const DirichletPoly& A, const DirichletPoly& M, std::size_t cap) {
  if (A.empty() || M.empty()) throw ContractError("dirichlet_convolve needs non-empty polynomials");
  const std::size_t NA = A.length(), NM = M.length();
  if (NA > cap / NM) throw SizingError("convolution length " + std::to_string(NA) + "*" + std::to_string(NM) + " exceeds cap " + std::to_string(cap));
  std::vector<std::complex<double>> b(NA * NM);
  const auto& ca = A.coeffs();
  const auto& cm = M.coeffs();
  for (std::size_t e = 1; e <= NM; ++e) {
    const auto me = cm[e - 1];
    if (me == 0.0) continue;
    for (std::size_t d = 1; d <= NA; ++d) b[d * e - 1] += ca[d - 1] * me;
  }
  std::optional<GrowthBound> bound;
  if (A.growth_bound() && M.growth_bound())
    bound = GrowthBound{A.growth_bound()->C * M.growth_bound()->C * static_cast<double>(std::min(NA, NM)),
                        std::max(A.growth_bound()->eps, M.growth_bound()->eps)};
  return DirichletPoly(std::move(b), A.label() + "*" + M.label(), bound);
}

std::complex<double> evaluate_poly(const DirichletPoly& A, double sigma, double t) {
  const auto& logs = A.logs();
  const auto& a = A.coeffs();
  CompensatedComplexSum acc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0.0) continue;
    const double L = logs[i];
    acc.add(a[i] * std::polar(std::exp(-sigma * L), -t * L));
  }
  return acc.value();
}

std::complex<double> windowed_sum(const DirichletPoly& A, const PlateauWindow& f, double u) {
  const auto& logs = A.logs();
  const auto& a = A.coeffs();
  CompensatedComplexSum acc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0.0) continue;
    const double fv = f(logs[i] / (2.0 * std::numbers::pi));
    if (fv == 0.0) continue;
    acc.add(fv * a[i] * std::polar(1.0, -u * logs[i]));
  }
  return acc.value();
}

DirichletPoly linear_combination(std::complex<double> alpha, const DirichletPoly& A, std::complex<double> beta,
                                 const DirichletPoly& B) {
  std::vector<std::complex<double>> c(std::max(A.length(), B.length()));
  for (std::size_t i = 0; i < A.length(); ++i) c[i] += alpha * A.coeffs()[i];
  for (std::size_t i = 0; i < B.length(); ++i) c[i] += beta * B.coeffs()[i];
  return DirichletPoly(std::move(c));
}

DirichletPoly one_minus(const DirichletPoly& B) {
  std::vector<std::complex<double>> c(std::max<std::size_t>(1, B.length()));
  c[0] = 1.0;
  for (std::size_t i = 0; i < B.length(); ++i) c[i] -= B.coeffs()[i];
  return DirichletPoly(std::move(c), "1-" + B.label());
}

void write_coeffs_csv(std::ostream& out, const DirichletPoly& A) {
  out << "n,re,im\n";
  char buf[64];
  for (std::size_t n = 1; n <= A.length(); ++n) {
    const auto c = A.coeffs()[n - 1];
    out << n << ',';
    out.write(buf, std::to_chars(buf, buf + sizeof buf, c.real()).ptr - buf);
    out << ',';
    out.write(buf, std::to_chars(buf, buf + sizeof buf, c.imag()).ptr - buf);
    out << '\n';
  }
}

void write_coeffs_csv(const std::filesystem::path& path, const DirichletPoly& A) {
  std::ofstream out(path);
  if (!out) throw ContractError("cannot open " + path.string() + " for writing");
  write_coeffs_csv(out, A);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

template <class T>
T parse_field(std::string_view s, std::size_t line) {
  s = trim(s);
  T v{};
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size())
    throw ParseError(line, "malformed field '" + std::string(s) + "'");
  return v;
}

}  // namespace

DirichletPoly read_coeffs_csv(std::istream& in, std::string label) {
  std::string raw;
  std::size_t line = 0;
  std::vector<std::complex<double>> c;
  std::vector<bool> seen;
  bool header = false;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view s = trim(raw);
    if (s.empty()) continue;
    if (!header) {
      if (s != "n,re,im") throw ParseError(line, "expected header 'n,re,im'");
      header = true;
      continue;
    }
    const auto c1 = s.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : s.find(',', c1 + 1);
    if (c2 == std::string_view::npos || s.find(',', c2 + 1) != std::string_view::npos)
      throw ParseError(line, "expected three comma-separated fields");
    const auto n = parse_field<std::uint64_t>(s.substr(0, c1), line);
    const auto re = parse_field<double>(s.substr(c1 + 1, c2 - c1 - 1), line);
    const auto im = parse_field<double>(s.substr(c2 + 1), line);
    if (n == 0) throw ParseError(line, "index n must be >= 1");
    if (n > 100'000'000) throw ParseError(line, "index n too large");
    if (n > c.size()) {
      c.resize(n);
      seen.resize(n);
    }
    if (seen[n - 1]) throw ParseError(line, "duplicate index " + std::to_string(n));
    seen[n - 1] = true;
    c[n - 1] = {re, im};
  }
  if (!header) throw ParseError(line, "empty coefficient file");
  return DirichletPoly(std::move(c), std::move(label));
}

DirichletPoly read_coeffs_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ContractError("cannot open " + path.string());
  return read_coeffs_csv(in, path.filename().string());
}

}  // namespace mollint
