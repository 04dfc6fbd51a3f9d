#include "mollint/quadform.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "mollint/error.hpp"
#include "mollint/moments.hpp"
#include "mollint/parallel.hpp"
#include "mollint/summation.hpp"

namespace mollint {

namespace {

void check_sieve(std::size_t N, const FactorSieve& sieve) {
  if (N > sieve.limit()) throw SizingError("N = " + std::to_string(N) + " exceeds sieve limit " + std::to_string(sieve.limit()));
}

void check_direct(std::size_t N) {
  if (N > kDirectFormCap) throw SizingError("direct O(N^2) form capped at N = " + std::to_string(kDirectFormCap));
}

// phi(l) / l^2 for l = 1..N, index l-1.
std::vector<double> phi_weights(std::size_t N, const FactorSieve& sieve) {
  std::vector<double> w(N);
  for (std::size_t l = 1; l <= N; ++l) {
    const double ld = static_cast<double>(l);
    w[l - 1] = static_cast<double>(sieve.euler_phi(l)) / (ld * ld);
  }
  return w;
}

struct PrimePower {
  std::size_t q;
  double log_p;
};

std::vector<PrimePower> prime_powers(std::size_t N, const FactorSieve& sieve) {
  std::vector<PrimePower> out;
  for (std::uint32_t p : sieve.primes()) {
    if (p > N) break;
    const double lp = std::log(static_cast<double>(p));
    for (std::size_t q = p; q <= N; q *= p) {
      out.push_back({q, lp});
      if (q > N / p) break;
    }
  }
  return out;
}

// 2 sum_{q = p^k, ql <= N} (log p / q) (phi(l)/l^2) Re(u(l) conj(v(ql))).
template <class U, class V>
double telescoped_sum(std::size_t N, const std::vector<PrimePower>& pp, const std::vector<double>& w, const U& u,
                      const V& v) {
  const auto parts = parallel_map(pp.size(), [&](std::size_t i) {
    const auto [q, lp] = pp[i];
    CompensatedSum s;
    for (std::size_t l = 1; l * q <= N; ++l) s.add(w[l - 1] * std::real(u(l) * std::conj(v(l * q))));
    return 2.0 * lp / static_cast<double>(q) * s.value();
  });
  return compensated_total(parts);
}

}  // namespace

double big_G(std::size_t N, const FactorSieve& sieve) {
  if (N < 1) throw DomainError("big_G needs N >= 1");
  check_sieve(N, sieve);
  CompensatedSum s;
  for (std::size_t n = 1; n <= N; ++n)
    if (sieve.mobius(n) != 0) s.add(1.0 / static_cast<double>(sieve.euler_phi(n)));
  return s.value();
}

std::vector<std::complex<double>> y_vector(const DirichletPoly& a, const FactorSieve& sieve) {
  const std::size_t N = a.length();
  check_sieve(N, sieve);
  std::vector<std::complex<double>> y(N);
  const auto& c = a.coeffs();
  for (std::size_t l = 1; l <= N; ++l) {
    CompensatedComplexSum s;
    for (std::size_t d = 1; d * l <= N; ++d) s.add(c[d * l - 1] / static_cast<double>(d));
    y[l - 1] = s.value();
  }
  return y;
}

std::vector<double> z_vector(std::size_t N, const FactorSieve& sieve) {
  check_sieve(N, sieve);
  const double G = big_G(N, sieve);
  std::vector<double> z(N);
  for (std::size_t l = 1; l <= N; ++l) {
    const int mu = sieve.mobius(l);
    z[l - 1] = mu == 0 ? 0.0 : mu * static_cast<double>(l) / (G * static_cast<double>(sieve.euler_phi(l)));
  }
  return z;
}

std::complex<double> gram_form_complex(const DirichletPoly& a) {
  const std::size_t N = a.length();
  check_direct(N);
  const auto& c = a.coeffs();
  const auto rows = parallel_map(N, [&](std::size_t i) {
    CompensatedComplexSum s;
    const std::size_t d = i + 1;
    if (c[i] == 0.0) return s.value();
    for (std::size_t e = 1; e <= N; ++e) {
      if (c[e - 1] == 0.0) continue;
      const double lcm = static_cast<double>(d / std::gcd(d, e)) * static_cast<double>(e);
      s.add(c[i] * std::conj(c[e - 1]) / lcm);
    }
    return s.value();
  });
  return compensated_total(rows);
}

double gram_form(const DirichletPoly& a, const FactorSieve& sieve, GramMode mode) {
  if (mode == GramMode::direct) return gram_form_complex(a).real();
  const auto y = y_vector(a, sieve);
  const auto w = phi_weights(a.length(), sieve);
  CompensatedSum s;
  for (std::size_t l = 0; l < y.size(); ++l) s.add(w[l] * std::norm(y[l]));
  return s.value();
}

QuadFormDecomposition diag_residual(const DirichletPoly& a, const FactorSieve& sieve) {
  if (a.empty() || std::abs(a.coeffs()[0] - 1.0) > 1e-12)
    throw ContractError("the decomposition needs a(1) = 1");
  QuadFormDecomposition out;
  out.N = a.length();
  out.G = big_G(out.N, sieve);
  out.y = y_vector(a, sieve);
  out.z = z_vector(out.N, sieve);
  const auto w = phi_weights(out.N, sieve);
  CompensatedSum res, gram;
  for (std::size_t l = 0; l < out.N; ++l) {
    res.add(w[l] * std::norm(out.y[l] - out.z[l]));
    gram.add(w[l] * std::norm(out.y[l]));
  }
  out.residual = res.value();
  out.gram = gram.value();
  out.identity_error = std::fabs(out.gram - (1.0 / out.G + out.residual)) / out.gram;
  if (out.identity_error > 1e-10)
    throw ContractError("gram = 1/G + residual fails: relative error " + std::to_string(out.identity_error));
  return out;
}

DirichletPoly minimizer_coeffs(std::size_t N, const FactorSieve& sieve) {
  if (N < 1) throw DomainError("minimizer_coeffs needs N >= 1");
  const auto z = z_vector(N, sieve);
  std::vector<std::complex<double>> a(N);
  for (std::size_t n = 1; n <= N; ++n) {
    CompensatedSum s;
    for (std::size_t d = 1; d * n <= N; ++d) {
      const int mu = sieve.mobius(d);
      if (mu != 0) s.add(mu * z[n * d - 1] / static_cast<double>(d));
    }
    a[n - 1] = s.value();
  }
  DirichletPoly out(std::move(a), "minimizer(N=" + std::to_string(N) + ")");
  const auto y = y_vector(out, sieve);
  for (std::size_t l = 0; l < N; ++l)
    if (std::abs(y[l] - z[l]) > 1e-12)
      throw ContractError("minimizer postcondition y = z fails at l = " + std::to_string(l + 1));
  return out;
}

std::complex<double> log_form_complex(const DirichletPoly& a) {
  const std::size_t N = a.length();
  check_direct(N);
  const auto& c = a.coeffs();
  const auto& logs = a.logs();
  const auto rows = parallel_map(N, [&](std::size_t i) {
    CompensatedComplexSum s;
    const std::size_t d = i + 1;
    if (c[i] == 0.0) return s.value();
    for (std::size_t e = 1; e <= N; ++e) {
      if (c[e - 1] == 0.0 || e == d) continue;
      const std::size_t g = std::gcd(d, e);
      const double lcm = static_cast<double>(d / g) * static_cast<double>(e);
      // [d,e]/(d,e) = (d/g)(e/g)
      const double lg = logs[d / g - 1] + logs[e / g - 1];
      s.add(c[i] * std::conj(c[e - 1]) * (lg / lcm));
    }
    return s.value();
  });
  return compensated_total(rows);
}

double log_form(const DirichletPoly& a, const FactorSieve& sieve, LogMode mode) {
  if (mode == LogMode::direct) return log_form_complex(a).real();
  const std::size_t N = a.length();
  const auto y = y_vector(a, sieve);
  const auto w = phi_weights(N, sieve);
  const auto pp = prime_powers(N, sieve);
  auto Y = [&y](std::size_t l) { return y[l - 1]; };
  return telescoped_sum(N, pp, w, Y, Y);
}

SDecomposition s_decomposition(const DirichletPoly& a, const FactorSieve& sieve) {
  const std::size_t N = a.length();
  const auto y = y_vector(a, sieve);
  const auto z = z_vector(N, sieve);
  const auto w = phi_weights(N, sieve);
  const auto pp = prime_powers(N, sieve);
  auto Y = [&](std::size_t l) { return y[l - 1]; };
  auto Z = [&](std::size_t l) { return std::complex<double>(z[l - 1]); };
  auto D = [&](std::size_t l) { return y[l - 1] - z[l - 1]; };

  SDecomposition out;
  out.main = telescoped_sum(N, pp, w, Y, Y);
  out.S1 = telescoped_sum(N, pp, w, D, D);
  // Re(conj(z(m)) (y-z)(l)) = Re((y-z)(l) conj(z(m))).
  out.S2 = telescoped_sum(N, pp, w, Z, D) + telescoped_sum(N, pp, w, D, Z);
  out.S3 = telescoped_sum(N, pp, w, Z, Z);
  out.error_plus = std::fabs(out.main - (out.S1 + out.S2 + out.S3));
  out.error_minus = std::fabs(out.main - (out.S1 - out.S2 + out.S3));
  const double tol = 1e-10 * std::max(1.0, std::fabs(out.main));
  if (out.error_plus <= tol)
    out.s2_sign = +1;
  else if (out.error_minus <= tol)
    out.s2_sign = -1;
  else
    throw ContractError("neither S1 + S2 + S3 nor S1 - S2 + S3 reproduces the telescoped sum");
  return out;
}

double propB_constant() { return 4.0 * std::exp(2.0 * kEulerGamma - 1.0) / (2.0 * std::numbers::pi); }

double propB_value(double T, const DirichletPoly& a, const FactorSieve& sieve, bool* used_direct) {
  if (!(T > 0.0)) throw DomainError("propB_value needs T > 0");
  const bool direct = a.length() <= kDirectFormCap;
  if (used_direct) *used_direct = direct;
  const double gram = gram_form(a, sieve, GramMode::diagonal);
  const double lf = log_form(a, sieve, direct ? LogMode::direct : LogMode::telescoped);
  return std::log(propB_constant() * T) * gram - lf - 1.0;
}

}  // namespace mollint
