#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace mollint {

// Lowest height accepted by the critical-line evaluators.
inline constexpr double kCriticalLineFloor = 10.0;

// Riemann-Siegel theta from its asymptotic expansion (t >= 10).
double rs_theta(double t);

// zeta(s) by Euler-Maclaurin summation; any s != 1. Cost grows like |Im s|.
std::complex<double> zeta_em(std::complex<double> s);

// Hardy's Z(t) = e^{i theta(t)} zeta(1/2 + it), real. Riemann-Siegel main sum
// with the C0..C4 remainder terms above t = 50; Euler-Maclaurin below.
double hardy_z(double t);

// zeta(1/2 + it) = e^{-i theta(t)} Z(t), t >= 10.
std::complex<double> zeta_critical(double t);

// zeta(1/2 + it) for every real t: Euler-Maclaurin for |t| < 10, conjugate
// symmetry for negative t.
std::complex<double> zeta_half_line(double t);

struct CriticalValue {
  double t;
  double z;
  std::complex<double> zeta;
};
CriticalValue critical_value(double t);

// Smooth Riemann-von Mangoldt main term (T/2pi) log(T/2pi) - T/2pi + 7/8.
double count_zeros_rvm(double T);

// Exact N(T) = theta(T)/pi + 1 + S(T), with S(T) obtained by continuous
// variation of arg zeta along [1/2 + iT, 4 + iT]. Throws DomainError when T
// sits on (or within 1e-8 of) a zero.
std::int64_t count_zeros_exact(double T);

enum class ZeroSource { computed, imported };

// Sorted zero ordinates with provenance.
class ZeroTable {
 public:
  ZeroTable() = default;
  // Validates strict increase and containment in [t_min, t_max].
  ZeroTable(std::vector<double> ordinates, ZeroSource source, double t_min, double t_max,
            bool claimed_complete = false);

  const std::vector<double>& ordinates() const noexcept { return ordinates_; }
  std::size_t size() const noexcept { return ordinates_.size(); }
  bool empty() const noexcept { return ordinates_.empty(); }
  ZeroSource source() const noexcept { return source_; }
  double t_min() const noexcept { return t_min_; }
  double t_max() const noexcept { return t_max_; }
  bool claimed_complete() const noexcept { return claimed_complete_; }
  const std::vector<std::string>& diagnostics() const noexcept { return diagnostics_; }

  void add_diagnostic(std::string note) { diagnostics_.push_back(std::move(note)); }
  void set_claimed_complete(bool complete) noexcept { claimed_complete_ = complete; }

  // Ordinates in [a, b].
  std::vector<double> window(double a, double b) const;
  // True when the table's height range contains [a, b].
  bool covers(double a, double b) const noexcept { return t_min_ <= a && b <= t_max_; }

 private:
  std::vector<double> ordinates_;
  ZeroSource source_ = ZeroSource::computed;
  double t_min_ = 0.0;
  double t_max_ = 0.0;
  bool claimed_complete_ = false;
  std::vector<std::string> diagnostics_;
};

struct FindZerosOptions {
  // Grid step is step_scale * 0.5 / log(t1).
  double step_scale = 1.0;
  // Bisection stops once the bracket is narrower than this.
  double tolerance = 1e-10;
  // On a count mismatch, rescan once with a quarter of the step.
  bool refine_on_mismatch = true;
};

// All sign changes of Z on [t0, t1] (plus same-sign dips that hide a pair of
// zeros), refined by bisection. claimed_complete is set iff the number found
// equals count_zeros_exact(t1) - count_zeros_exact(t0).
ZeroTable find_zeros(double t0, double t1, const FindZerosOptions& options = {});

// Count-consistency verdict for a table restricted to [a, b].
struct ZeroCountCheck {
  double a = 0.0, b = 0.0;
  std::int64_t found = 0;
  std::int64_t expected = 0;  // exact N(b) - N(a)
  double rvm_estimate = 0.0;  // count_zeros_rvm(b) - count_zeros_rvm(a)
  bool pass = false;
  // Largest normalized gap (gap * log(t / 2pi) / 2pi) and where it sits.
  double widest_gap_lo = 0.0, widest_gap_hi = 0.0, widest_gap_normalized = 0.0;
};
ZeroCountCheck verify_zero_table(const ZeroTable& table, double a, double b);

// One decimal ordinate per line, ascending, no header. Blank lines are skipped.
ZeroTable parse_zero_table(std::istream& in, double t_min, double t_max);
ZeroTable import_zero_table(const std::filesystem::path& path, double t_min, double t_max);
// Shortest round-trip decimal form, so parse(write(table)) reproduces it.
void write_zero_table(std::ostream& out, const ZeroTable& table);
void write_zero_table(const std::filesystem::path& path, const ZeroTable& table);

}  // namespace mollint
