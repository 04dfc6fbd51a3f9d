#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mollint/arith.hpp"
#include "mollint/dirichlet.hpp"
#include "mollint/error.hpp"
#include "mollint/moments.hpp"
#include "mollint/parallel.hpp"
#include "mollint/quadform.hpp"
#include "mollint/smoothfn.hpp"
#include "mollint/zeros_stats.hpp"
#include "mollint/zeta.hpp"

namespace mollint::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

struct RunConfig {
  std::string config_path;
  std::string zero_table_path;
  std::uint64_t sieve_limit = 2'000'000;
  std::string output_dir = ".";
  std::size_t panels = 0;
  int nodes = 8;
  double pair_cutoff = 200.0;
  std::uint64_t seed = 20240601;
  unsigned workers = 0;
  bool force = false;
};

// Flat key=value file; '#' starts a comment.
std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ContractError("cannot open config file " + path);
  std::map<std::string, std::string> kv;
  std::string raw;
  std::size_t line = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
  };
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string s = trim(raw.substr(0, hash));
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ParseError(line, "expected key=value in " + path);
    kv[trim(s.substr(0, eq))] = trim(s.substr(eq + 1));
  }
  return kv;
}

json verdict(const std::string& op, json inputs, double lhs, double rhs, double tolerance, bool pass) {
  json v;
  v["operation"] = op;
  v["inputs"] = std::move(inputs);
  v["lhs"] = lhs;
  v["rhs"] = rhs;
  v["tolerance"] = tolerance;
  v["pass"] = pass;
  return v;
}

json report_json(const MomentReport& r) {
  json j;
  j["T"] = r.T;
  j["theta"] = r.theta ? json(*r.theta) : json(nullptr);
  j["value"] = r.value;
  j["quadrature"] = {{"panels", r.quadrature.panels},
                     {"nodes", r.quadrature.nodes},
                     {"estimated_error", r.quadrature.estimated_error}};
  j["mollifier_label"] = r.mollifier_label;
  return j;
}

std::size_t length_for(double T, double theta) {
  return static_cast<std::size_t>(std::floor(std::pow(T, theta) * (1.0 + 1e-13)));
}

// Random admissible coefficients: a(1) = 1, |a(n)| <= n^0.1, random phases.
DirichletPoly random_admissible(std::size_t N, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> U(0.0, 1.0);
  std::vector<std::complex<double>> c(N);
  c[0] = 1.0;
  for (std::size_t n = 2; n <= N; ++n)
    c[n - 1] = std::polar(std::pow(static_cast<double>(n), 0.1) * U(rng), 2.0 * std::numbers::pi * U(rng));
  return DirichletPoly(std::move(c), "random(N=" + std::to_string(N) + ")", GrowthBound{1.0, 0.1});
}

class Runner {
 public:
  Runner(RunConfig& cfg, std::ostream& out, std::ostream& err) : cfg_(cfg), out_(out), err_(err) {}

  const FactorSieve& sieve() {
    if (!sieve_) sieve_.emplace(std::max<std::uint64_t>(cfg_.sieve_limit, 2));
    return *sieve_;
  }

  DirichletPoly mollifier(const std::string& spec, double T, double theta) {
    if (spec == "none") return DirichletPoly({}, "none");
    if (spec == "ltheta") return build_L_theta(T, theta, sieve());
    if (spec == "minimizer") return minimizer_coeffs(length_for(T, theta), sieve());
    if (spec.rfind("file:", 0) == 0) return read_coeffs_csv(fs::path(spec.substr(5)));
    throw ContractError("unknown mollifier '" + spec + "' (expected none, ltheta, minimizer or file:PATH)");
  }

  MomentOptions moment_options(std::optional<double> theta) const {
    MomentOptions o;
    o.panels = cfg_.panels;
    o.nodes = cfg_.nodes;
    o.force = cfg_.force;
    o.theta = theta;
    return o;
  }

  // Zero table covering [T, 2T]: the configured file if any, else computed.
  ZeroTable zeros_for(double T) {
    if (!cfg_.zero_table_path.empty()) {
      ZeroTable Z = import_zero_table(cfg_.zero_table_path, T, 2.0 * T);
      if (verify_zero_table(Z, T, 2.0 * T).pass) Z.set_claimed_complete(true);
      return Z;
    }
    return find_zeros(T, 2.0 * T);
  }

  fs::path output(const std::string& name) const { return fs::path(cfg_.output_dir) / name; }

  void emit(const json& j) { out_ << j.dump(2) << '\n'; }
  void emit_verdict(const json& v) {
    emit(v);
    if (!v.at("pass").get<bool>()) all_pass_ = false;
  }
  bool all_pass() const { return all_pass_; }
  std::ostream& err() { return err_; }
  RunConfig& cfg() { return cfg_; }

 private:
  RunConfig& cfg_;
  std::ostream& out_;
  std::ostream& err_;
  std::optional<FactorSieve> sieve_;
  bool all_pass_ = true;
};

void check_output_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  const fs::path probe = fs::path(dir) / ".mollint_write_probe";
  {
    std::ofstream f(probe);
    if (!f) throw ContractError("output directory " + dir + " is not writable");
  }
  fs::remove(probe, ec);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Mollified moments, zeta zeros and quadratic forms"};
  app.require_subcommand(1);
  app.fallthrough();
  auto* o_config = app.add_option("--config", cfg.config_path, "flat key=value configuration file");
  auto* o_zeros = app.add_option("--zeros", cfg.zero_table_path, "zero table file (one ordinate per line)");
  auto* o_sieve = app.add_option("--sieve-limit", cfg.sieve_limit, "factor sieve size");
  auto* o_outdir = app.add_option("--output-dir", cfg.output_dir, "directory for emitted files");
  auto* o_panels = app.add_option("--panels", cfg.panels, "quadrature panels (0 = resolution floor)");
  auto* o_nodes = app.add_option("--nodes", cfg.nodes, "Gauss-Legendre nodes per panel");
  auto* o_cutoff = app.add_option("--pair-cutoff", cfg.pair_cutoff, "max |gamma - gamma'| in pair sums");
  auto* o_seed = app.add_option("--seed", cfg.seed, "seed for randomized suites");
  auto* o_workers = app.add_option("--workers", cfg.workers, "worker threads (0 = all cores)");
  app.add_flag("--force", cfg.force, "accept quadrature below the resolution floor");
  (void)o_config;

  Runner* runner = nullptr;  // set after parsing
  std::function<void()> action;

  // zeros
  auto* zeros = app.add_subcommand("zeros", "compute, import or verify zero tables");
  zeros->require_subcommand(1);
  double t0 = 0, t1 = 0;
  std::string out_path, in_path;
  std::pair<double, double> range{0.0, 0.0};
  auto* zc = zeros->add_subcommand("compute", "locate zeros of Z(t) on [t0, t1]");
  zc->add_option("--t0", t0)->required();
  zc->add_option("--t1", t1)->required();
  zc->add_option("--out", out_path, "output file (default <output-dir>/zeros_<t0>_<t1>.txt)");
  zc->callback([&] {
    action = [&] {
      const ZeroTable Z = find_zeros(t0, t1);
      const fs::path path = out_path.empty() ? runner->output("zeros_" + std::to_string(static_cast<long long>(t0)) + "_" +
                                                             std::to_string(static_cast<long long>(t1)) + ".txt")
                                             : fs::path(out_path);
      write_zero_table(path, Z);
      const auto check = verify_zero_table(Z, t0, t1);
      json v = verdict("zeros.compute", {{"t0", t0}, {"t1", t1}}, static_cast<double>(check.found),
                       static_cast<double>(check.expected), 0.0, Z.claimed_complete());
      v["file"] = path.string();
      v["diagnostics"] = Z.diagnostics();
      runner->emit_verdict(v);
    };
  });
  auto* zi = zeros->add_subcommand("import", "validate a zero table and cache the selected range");
  zi->add_option("--path", in_path)->required();
  auto* zi_range = zi->add_option("--range", range, "t_min t_max")->required();
  (void)zi_range;
  zi->callback([&] {
    action = [&] {
      const ZeroTable Z = import_zero_table(in_path, range.first, range.second);
      const fs::path cache = runner->output("zeros_cache.txt");
      write_zero_table(cache, Z);
      json j{{"operation", "zeros.import"},
             {"inputs", {{"path", in_path}, {"range", {range.first, range.second}}}},
             {"count", Z.size()},
             {"cache", cache.string()},
             {"diagnostics", Z.diagnostics()}};
      runner->emit(j);
    };
  });
  auto* zv = zeros->add_subcommand("verify", "check a zero table against the exact zero count");
  zv->add_option("--path", in_path, "table (defaults to --zeros / config / MOLLINT_ZEROS)");
  auto* zv_range = zv->add_option("--range", range, "t_min t_max (default: the table's extent)");
  zv->callback([&] {
    action = [&] {
      std::string path = in_path.empty() ? runner->cfg().zero_table_path : in_path;
      if (path.empty()) throw ContractError("zeros verify needs a table (--path, --zeros or MOLLINT_ZEROS)");
      double a = range.first, b = range.second;
      if (zv_range->count() == 0) {
        const ZeroTable all = import_zero_table(path, -std::numeric_limits<double>::infinity(),
                                                std::numeric_limits<double>::infinity());
        if (all.empty()) throw ContractError("zero table " + path + " is empty");
        a = std::max(kCriticalLineFloor, std::floor(all.ordinates().front()) - 0.5);
        b = std::ceil(all.ordinates().back()) + 0.01;
      }
      const ZeroTable Z = import_zero_table(path, a, b);
      const auto check = verify_zero_table(Z, a, b);
      json v = verdict("zeros.verify", {{"path", path}, {"range", {a, b}}}, static_cast<double>(check.found),
                       static_cast<double>(check.expected), 0.0, check.pass);
      v["rvm_estimate"] = check.rvm_estimate;
      v["widest_gap"] = {{"lo", check.widest_gap_lo}, {"hi", check.widest_gap_hi},
                         {"normalized", check.widest_gap_normalized}};
      runner->emit_verdict(v);
      if (!check.pass) {
        std::ostringstream msg;
        msg.precision(10);
        msg << "error: coverage: found " << check.found << " zeros, expected " << check.expected
            << "; widest gap [" << check.widest_gap_lo << ", " << check.widest_gap_hi << "]";
        runner->err() << msg.str() << '\n';
      }
    };
  });

  // moment
  double T = 0, theta = 0.5;
  std::string moll = "ltheta";
  bool compare_bch = false;
  std::size_t trace_points = 0;
  auto* mom = app.add_subcommand("moment", "mollified second moment on [T, 2T]");
  mom->add_option("--T", T)->required();
  mom->add_option("--theta", theta);
  mom->add_option("--mollifier", moll, "none | ltheta | minimizer | file:PATH");
  mom->add_flag("--compare-bch", compare_bch, "also report the predicted value");
  mom->add_option("--trace", trace_points, "write |1 - zeta M|^2 at this many points");
  mom->callback([&] {
    action = [&] {
      const DirichletPoly M = runner->mollifier(moll, T, theta);
      const auto r = mollified_moment(T, M, runner->moment_options(theta));
      json j = report_json(r);
      if (compare_bch && !M.empty()) {
        const double pred = bch_predicted(T, M);
        j["bch_predicted"] = pred;
        j["ratio"] = r.value / pred;
      }
      if (trace_points > 0) {
        const fs::path p = runner->output("moment_trace.csv");
        std::ofstream f(p);
        write_moment_trace(f, T, M, trace_points);
        j["trace"] = p.string();
      }
      runner->emit(j);
    };
  });

  // bounds
  auto* bounds = app.add_subcommand("bounds", "inequality runs against the measured moment");
  bounds->require_subcommand(1);
  double A = 1.0, eps = 0.05, t_cap = 500.0;
  std::size_t grid = 36, N = 0;
  auto* bA = bounds->add_subcommand("propA", "well-spaced zero bound");
  bA->add_option("--T", T)->required();
  bA->add_option("--theta", theta);
  bA->add_option("--A", A);
  bA->callback([&] {
    action = [&] {
      const ZeroTable Z = runner->zeros_for(T);
      const auto S = wellspaced_subset(Z.window(T, 2.0 * T), 2.0 * std::numbers::pi * A / std::log(T));
      const double rhs = propA_rhs(S, T, theta, A);
      const auto r = mollified_moment(T, build_L_theta(T, theta, runner->sieve()), runner->moment_options(theta));
      json v = verdict("bounds.propA", {{"T", T}, {"theta", theta}, {"A", A}}, r.value, rhs, r.quadrature.estimated_error,
                       rhs <= r.value);
      v["satisfied"] = rhs <= r.value;
      v["well_spaced"] = {{"count", S.size()}, {"parent_count", S.parent_count}, {"delta", S.delta}};
      runner->emit_verdict(v);
    };
  });
  auto* b3 = bounds->add_subcommand("thm3", "pair-correlation bound");
  b3->add_option("--T", T)->required();
  b3->add_option("--theta", theta);
  b3->add_option("--eps", eps);
  b3->add_option("--grid", grid);
  b3->callback([&] {
    action = [&] {
      const ZeroTable Z = runner->zeros_for(T);
      PairOptions po;
      po.pair_cutoff = runner->cfg().pair_cutoff;
      const double rhs = thm3_rhs(Z, T, theta, eps, grid, po);
      const auto r = mollified_moment(T, build_L_theta(T, theta, runner->sieve()), runner->moment_options(theta));
      json v = verdict("bounds.thm3", {{"T", T}, {"theta", theta}, {"eps", eps}, {"grid", grid}}, r.value, rhs,
                       r.quadrature.estimated_error, rhs <= r.value);
      v["satisfied"] = rhs <= r.value;
      runner->emit_verdict(v);
    };
  });
  auto* bb = bounds->add_subcommand("baez", "weighted moment over |t| <= t_cap");
  bb->add_option("--t-cap", t_cap);
  bb->add_option("--mollifier", moll, "none | ltheta | minimizer | file:PATH");
  bb->add_option("--N", N, "mollifier length for ltheta / minimizer");
  bb->callback([&] {
    action = [&] {
      const DirichletPoly M = (moll == "none" || moll.rfind("file:", 0) == 0)
                                  ? runner->mollifier(moll, 10.0, 1.0)
                                  : runner->mollifier(moll, static_cast<double>(std::max<std::size_t>(N, 10)), 1.0);
      const auto r = baez_duarte_moment(M, t_cap, runner->moment_options(std::nullopt));
      json inputs{{"t_cap", t_cap}, {"mollifier", moll}, {"N", M.length()}};
      json v;
      if (M.empty()) {
        const double closed = 4.0 * std::atan(2.0 * t_cap);
        v = verdict("bounds.baez", inputs, r.value, closed, 1e-8, std::fabs(r.value - closed) <= 1e-8);
        v["consistency"] = "closed form 4 arctan(2 t_cap)";
      } else {
        const double floor = 0.05 / std::log(static_cast<double>(std::max<std::size_t>(M.length(), 2)));
        v = verdict("bounds.baez", inputs, r.value, floor, 0.0, r.value >= floor);
      }
      v["satisfied"] = v["pass"];
      v["tail_bound"] = r.tail_bound;
      v["quadrature"] = {{"panels", r.quadrature.panels}, {"nodes", r.quadrature.nodes},
                         {"estimated_error", r.quadrature.estimated_error}};
      runner->emit_verdict(v);
    };
  });

  // quadform
  auto* qf = app.add_subcommand("quadform", "quadratic-form diagonalization and minimizer");
  qf->require_subcommand(1);
  std::size_t trials = 50;
  auto* qd = qf->add_subcommand("verify-diag", "direct vs diagonal form and the residual identity");
  qd->add_option("--N", N)->required();
  qd->add_option("--trials", trials);
  qd->callback([&] {
    action = [&] {
      std::mt19937_64 rng(runner->cfg().seed);
      double worst_diag = 0.0, worst_identity = 0.0;
      for (std::size_t k = 0; k < trials; ++k) {
        const DirichletPoly a = random_admissible(N, rng);
        const double d = gram_form(a, runner->sieve(), GramMode::direct);
        const double g = gram_form(a, runner->sieve(), GramMode::diagonal);
        worst_diag = std::max(worst_diag, std::fabs(d - g) / std::fabs(d));
        const auto dec = diag_residual(a, runner->sieve());
        worst_identity = std::max(worst_identity, dec.identity_error);
      }
      const double worst = std::max(worst_diag, worst_identity);
      json v = verdict("quadform.verify-diag", {{"N", N}, {"trials", trials}, {"seed", runner->cfg().seed}}, worst,
                       0.0, 1e-10, worst <= 1e-10);
      v["max_rel_diagonalization_error"] = worst_diag;
      v["max_rel_identity_error"] = worst_identity;
      runner->emit_verdict(v);
    };
  });
  auto* qm = qf->add_subcommand("minimize", "optimal coefficients for length N");
  qm->add_option("--N", N)->required();
  qm->callback([&] {
    action = [&] {
      const DirichletPoly a = minimizer_coeffs(N, runner->sieve());
      const fs::path p = runner->output("minimizer_" + std::to_string(N) + ".csv");
      write_coeffs_csv(p, a);
      const double gram = gram_form(a, runner->sieve(), GramMode::diagonal);
      const double inv_g = 1.0 / big_G(N, runner->sieve());
      json v = verdict("quadform.minimize", {{"N", N}}, gram, inv_g, 1e-10, std::fabs(gram - inv_g) <= 1e-10 * inv_g);
      v["a1"] = a.coeffs()[0].real();
      v["csv"] = p.string();
      runner->emit_verdict(v);
    };
  });
  auto* qs = qf->add_subcommand("s-decomp", "S1, S2, S3 split of the telescoped log form");
  qs->add_option("--N", N)->required();
  std::string coeffs = "random";
  qs->add_option("--coeffs", coeffs, "random | minimizer | file:PATH");
  qs->callback([&] {
    action = [&] {
      std::mt19937_64 rng(runner->cfg().seed);
      const DirichletPoly a = coeffs == "random"      ? random_admissible(N, rng)
                              : coeffs == "minimizer" ? minimizer_coeffs(N, runner->sieve())
                                                      : runner->mollifier(coeffs, 10.0, 1.0);
      const auto s = s_decomposition(a, runner->sieve());
      const double recombined = s.S1 + s.s2_sign * s.S2 + s.S3;
      json v = verdict("quadform.s-decomp", {{"N", a.length()}, {"coeffs", coeffs}, {"seed", runner->cfg().seed}},
                       s.main, recombined, 1e-10, true);
      v["S1"] = s.S1;
      v["S2"] = s.S2;
      v["S3"] = s.S3;
      v["s2_sign"] = s.s2_sign;
      v["error_plus"] = s.error_plus;
      v["error_minus"] = s.error_minus;
      v["note"] = std::fabs(s.S2) < 1e-12
                      ? "S2 vanishes for these coefficients, so the sign is not identifiable; use random coefficients"
                      : (s.s2_sign > 0 ? "main = S1 + S2 + S3 (cross terms enter with a plus sign)"
                                       : "main = S1 - S2 + S3");
      runner->emit_verdict(v);
    };
  });
  auto* qp = qf->add_subcommand("propb", "log(cT) gram - log form - 1 against 1/theta");
  qp->add_option("--T", T)->required();
  qp->add_option("--theta", theta);
  qp->add_option("--mollifier", moll, "minimizer | ltheta | file:PATH")->default_str("minimizer");
  qp->callback([&] {
    action = [&] {
      const std::string spec = qp->get_option("--mollifier")->count() ? moll : "minimizer";
      const DirichletPoly a = runner->mollifier(spec, T, theta);
      bool direct = false;
      const double value = propB_value(T, a, runner->sieve(), &direct);
      const double floor = 1.0 / theta - 0.15;
      json v = verdict("quadform.propb", {{"T", T}, {"theta", theta}, {"mollifier", spec}, {"N", a.length()}}, value,
                       floor, 0.15, value >= floor);
      v["log_form_mode"] = direct ? "direct" : "telescoped";
      if (a.length() <= 2000) v["bch_predicted"] = bch_predicted(T, a);
      runner->emit_verdict(v);
    };
  });

  // stats
  auto* stats = app.add_subcommand("stats", "zero statistics");
  stats->require_subcommand(1);
  double alpha_max = 3.0, alpha_step = 0.01;
  auto* sp = stats->add_subcommand("pair", "pair correlation grid");
  sp->add_option("--T", T)->required();
  sp->add_option("--alpha-max", alpha_max);
  sp->add_option("--step", alpha_step);
  sp->callback([&] {
    action = [&] {
      const ZeroTable Z = runner->zeros_for(T);
      PairOptions po;
      po.pair_cutoff = runner->cfg().pair_cutoff;
      std::vector<double> alphas;
      const auto steps = static_cast<long>(std::floor(alpha_max / alpha_step + 1e-9));
      for (long k = -steps; k <= steps; ++k) alphas.push_back(static_cast<double>(k) * alpha_step);
      const auto F = pair_correlation(Z, T, alphas, po);
      const fs::path p = runner->output("pair_correlation.csv");
      std::ofstream f(p);
      f.precision(17);
      f << "alpha,F\n";
      double asym = 0.0;
      for (std::size_t i = 0; i < alphas.size(); ++i) {
        f << alphas[i] << ',' << F.values[i] << '\n';
        asym = std::max(asym, std::fabs(F.values[i] - F.values[alphas.size() - 1 - i]));
      }
      json v = verdict("stats.pair", {{"T", T}, {"alpha_max", alpha_max}, {"step", alpha_step}},
                       std::max(asym, F.max_imag), 0.0, 1e-12, std::max(asym, F.max_imag) <= 1e-12);
      v["tail_estimate"] = F.tail_estimate;
      v["zero_count"] = F.zero_count;
      v["csv"] = p.string();
      runner->emit_verdict(v);
    };
  });
  std::uint64_t n_max = 10;
  auto* sg = stats->add_subcommand("gonek", "Gonek sums for 2 <= n <= n_max");
  sg->add_option("--T", T)->required();
  sg->add_option("--n-max", n_max);
  sg->callback([&] {
    action = [&] {
      const ZeroTable Z = runner->zeros_for(T);
      const fs::path p = runner->output("gonek.csv");
      std::ofstream f(p);
      f.precision(17);
      f << "n,empirical_re,empirical_im,predicted\n";
      double worst = 0.0;
      for (std::uint64_t n = 2; n <= n_max; ++n) {
        const auto g = gonek_sum(Z, n, T);
        f << n << ',' << g.empirical.real() << ',' << g.empirical.imag() << ',' << g.predicted << '\n';
        worst = std::max(worst, std::abs(g.empirical - g.predicted) / (3.0 * g.envelope));
      }
      json v = verdict("stats.gonek", {{"T", T}, {"n_max", n_max}}, worst, 1.0, 0.0, worst <= 1.0);
      v["csv"] = p.string();
      runner->emit_verdict(v);
    };
  });

  // majorant
  double a_lo = 0.0, b_hi = 1.0, delta = 1.0, x_lo = -5.0, x_hi = 6.0;
  std::size_t points = 1001;
  int trunc = 10000;
  auto* mj = app.add_subcommand("majorant", "dump (x, K(x), K^(x)) for an interval majorant");
  mj->add_option("--a", a_lo);
  mj->add_option("--b", b_hi);
  mj->add_option("--delta", delta);
  mj->add_option("--trunc", trunc);
  mj->add_option("--x-min", x_lo);
  mj->add_option("--x-max", x_hi);
  mj->add_option("--points", points);
  mj->callback([&] {
    action = [&] {
      const auto K = majorant_make({a_lo, b_hi}, delta, trunc);
      const fs::path p = runner->output("majorant.csv");
      std::ofstream f(p);
      f.precision(17);
      f << "x,K,K_hat\n";
      for (std::size_t i = 0; i < points; ++i) {
        const double x = x_lo + (x_hi - x_lo) * static_cast<double>(i) / static_cast<double>(std::max<std::size_t>(1, points - 1));
        f << x << ',' << K(x) << ',' << majorant_hat(K, x) << '\n';
      }
      const double k0 = majorant_hat(K, 0.0);
      const double expected = b_hi - a_lo + 1.0 / delta;
      json v = verdict("majorant", {{"a", a_lo}, {"b", b_hi}, {"delta", delta}, {"trunc", trunc}}, k0, expected, 1e-4,
                       std::fabs(k0 - expected) <= 1e-4 * expected);
      v["csv"] = p.string();
      runner->emit_verdict(v);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error: usage: " << msg << '\n';
    return 2;
  }

  try {
    if (!cfg.config_path.empty()) {
      const auto kv = read_config_file(cfg.config_path);
      const std::map<std::string, std::pair<CLI::Option*, std::function<void(const std::string&)>>> setters = {
          {"zero_table_path", {o_zeros, [&](const std::string& s) { cfg.zero_table_path = s; }}},
          {"sieve_limit", {o_sieve, [&](const std::string& s) { cfg.sieve_limit = std::stoull(s); }}},
          {"output_dir", {o_outdir, [&](const std::string& s) { cfg.output_dir = s; }}},
          {"panels", {o_panels, [&](const std::string& s) { cfg.panels = std::stoull(s); }}},
          {"nodes", {o_nodes, [&](const std::string& s) { cfg.nodes = std::stoi(s); }}},
          {"pair_cutoff", {o_cutoff, [&](const std::string& s) { cfg.pair_cutoff = std::stod(s); }}},
          {"seed", {o_seed, [&](const std::string& s) { cfg.seed = std::stoull(s); }}},
          {"workers", {o_workers, [&](const std::string& s) { cfg.workers = static_cast<unsigned>(std::stoul(s)); }}},
      };
      for (const auto& [key, value] : kv) {
        const auto it = setters.find(key);
        if (it == setters.end()) throw ContractError("unknown config key '" + key + "'");
        if (it->second.first->count() > 0) continue;  // flags win
        try {
          it->second.second(value);
        } catch (const std::logic_error&) {
          throw ContractError("bad value for config key '" + key + "': " + value);
        }
      }
    }
    if (o_zeros->count() == 0)
      if (const char* env = std::getenv("MOLLINT_ZEROS"); env && *env) cfg.zero_table_path = env;
    if (cfg.sieve_limit < 2) throw ContractError("sieve_limit must be at least 2");
    if (cfg.nodes < 1) throw ContractError("nodes must be positive");
    if (!(cfg.pair_cutoff > 0.0)) throw ContractError("pair_cutoff must be positive");
    check_output_dir(cfg.output_dir);
    set_worker_count(cfg.workers);

    Runner r(cfg, out, err);
    runner = &r;
    if (action) action();
    return r.all_pass() ? 0 : 1;
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace mollint::cli
