// Copyright 2026 The qrk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qrk/cli/commands.h"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "qrk/analytic.h"
#include "qrk/cli/csv.h"
#include "qrk/keyrate.h"
#include "qrk/oracle/monte_carlo.h"
#include "qrk/rates.h"

namespace qrk::cli {
namespace {

constexpr double kDefaultLengthOqr = 600.0;
constexpr double kDefaultLengthHqr = 300.0;
constexpr double kIntegerTolerance = 1e-9;

[[noreturn]] void flag_fail(const std::string& flag, const std::string& message) {
  throw std::domain_error("--" + flag + ": " + message);
}

std::string num(double x) { return format_number(x); }

// ---------------------------------------------------------------------------
// Parameter points shared by keyrate and sweep.

struct PointFlags {
  std::string setup = "oqr";
  double l_total = std::numeric_limits<double>::quiet_NaN();  // setup default
  int n = 2;
  int k = 0;
  double pg = 1.0;
  double eta = 1.0;
  double f0 = 1.0;
  double alpha = kDefaultAttenuation;
  double c = kDefaultFiberSpeed;
};

void add_point_flags(CLI::App* cmd, PointFlags& f) {
  cmd->add_option("--setup", f.setup, "Repeater architecture")->check(CLI::IsMember({"oqr", "hqr"}));
  cmd->add_option("--L", f.l_total, "Total distance in km (default 600 for oqr, 300 for hqr)");
  cmd->add_option("--n", f.n, "Nesting levels")->capture_default_str();
  cmd->add_option("--k", f.k, "Distillation rounds")->capture_default_str();
  cmd->add_option("--pg", f.pg, "Gate quality")->capture_default_str();
  cmd->add_option("--eta", f.eta, "Detector efficiency")->capture_default_str();
  cmd->add_option("--f0", f.f0, "Initial fidelity")->capture_default_str();
  cmd->add_option("--alpha", f.alpha, "Fiber attenuation in dB/km")->capture_default_str();
  cmd->add_option("--c", f.c, "Speed of light in fiber in m/s")->capture_default_str();
}

struct Point {
  RepeaterConfig config;
  HardwareParams hw;
};

Point make_point(const PointFlags& f) {
  Point p;
  p.config.setup = parse_setup(f.setup);
  p.config.l_total_km = std::isnan(f.l_total)
                            ? (p.config.setup == Setup::kOqr ? kDefaultLengthOqr : kDefaultLengthHqr)
                            : f.l_total;
  p.config.n = f.n;
  p.config.k = f.k;
  p.hw = {f.pg, f.eta, f.f0, f.alpha, f.c};
  return p;
}

void check_range(const std::string& flag, double x, double lo, double hi, bool open_lo) {
  const bool ok = (open_lo ? x > lo : x >= lo) && x <= hi;
  if (!ok) {
    std::ostringstream os;
    os << "must lie in " << (open_lo ? "(" : "[") << num(lo) << ", " << num(hi) << "], got " << num(x);
    flag_fail(flag, os.str());
  }
}

// Throws std::domain_error naming the offending flag.
void validate(const Point& p) {
  const bool hqr = p.config.setup == Setup::kHqr;
  if (!(p.config.l_total_km > 0.0) || !std::isfinite(p.config.l_total_km)) {
    flag_fail("L", "must be positive, got " + num(p.config.l_total_km));
  }
  check_range("n", p.config.n, 0, 20, false);
  check_range("k", p.config.k, 0, 16, false);
  check_range("pg", p.hw.p_g, hqr ? 0.5 : 0.0, 1.0, false);
  check_range("eta", p.hw.eta_d, 0.0, 1.0, hqr);
  check_range("f0", p.hw.f0, hqr ? 0.5 : 0.25, 1.0, false);
  if (!(p.hw.alpha_db_per_km > 0.0) || !std::isfinite(p.hw.alpha_db_per_km)) {
    flag_fail("alpha", "must be positive, got " + num(p.hw.alpha_db_per_km));
  }
  if (!(p.hw.c_fiber_m_per_s > 0.0) || !std::isfinite(p.hw.c_fiber_m_per_s)) {
    flag_fail("c", "must be positive, got " + num(p.hw.c_fiber_m_per_s));
  }
}

const std::vector<std::string> kPointColumns = {"setup", "L", "n", "k", "pg", "eta", "f0", "alpha", "c"};
const std::vector<std::string> kValueColumns = {"rate_rep", "q_x", "q_z",   "q_z_di",  "s",
                                                "r_dd",     "r_di", "key_dd", "key_di", "f_final",
                                                "p0",       "p_l0", "approx_warning"};

std::vector<std::string> point_cells(const Point& p) {
  return {std::string(to_string(p.config.setup)),
          num(p.config.l_total_km),
          std::to_string(p.config.n),
          std::to_string(p.config.k),
          num(p.hw.p_g),
          num(p.hw.eta_d),
          num(p.hw.f0),
          num(p.hw.alpha_db_per_km),
          num(p.hw.c_fiber_m_per_s)};
}

std::vector<std::string> value_cells(const RateRecord& r) {
  return {num(r.rate_rep), num(r.q_x),    num(r.q_z),     num(r.q_z_di),
          num(r.s),        num(r.r_dd),   num(r.r_di),    num(r.key_dd),
          num(r.key_di),   num(r.state_final.fidelity()), num(r.trace.p0),
          num(r.trace.p_l0), r.trace.approx_warning ? "1" : "0"};
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

int cmd_keyrate(const PointFlags& flags, std::ostream& out) {
  const Point p = make_point(flags);
  validate(p);
  const RateRecord rec = key_rates(p.config, p.hw);
  write_row(out, concat(kPointColumns, kValueColumns));
  write_row(out, concat(point_cells(p), value_cells(rec)));
  return kExitOk;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepFlags {
  std::string param;
  double from = 0.0;
  double to = 0.0;
  int steps = 0;
  std::string out_path;
};

const std::vector<std::string> kSweepParams = {"f0", "p_g", "eta_d", "l_total", "n", "k"};

// Sets the swept parameter; returns a reason when the value cannot be used.
std::string assign(Point& p, const std::string& param, double v) {
  auto as_int = [&](int& slot) -> std::string {
    const double r = std::round(v);
    if (std::abs(v - r) > kIntegerTolerance) return param + " must be an integer, got " + num(v);
    slot = static_cast<int>(r);
    return {};
  };
  if (param == "f0") p.hw.f0 = v;
  else if (param == "p_g") p.hw.p_g = v;
  else if (param == "eta_d") p.hw.eta_d = v;
  else if (param == "l_total") p.config.l_total_km = v;
  else if (param == "n") return as_int(p.config.n);
  else if (param == "k") return as_int(p.config.k);
  return {};
}

int cmd_sweep(const PointFlags& flags, const SweepFlags& sweep, std::ostream& out) {
  Point base = make_point(flags);
  validate(base);
  if (sweep.steps < 2) flag_fail("steps", "must be at least 2, got " + std::to_string(sweep.steps));
  if (!std::isfinite(sweep.from)) flag_fail("from", "must be finite");
  if (!std::isfinite(sweep.to)) flag_fail("to", "must be finite");
  // The grid ends must lie in the parameter's domain; integer checks apply
  // per row.
  for (const auto& [flag, v] : {std::pair{std::string("from"), sweep.from}, std::pair{std::string("to"), sweep.to}}) {
    Point probe = base;
    const bool integral = sweep.param == "n" || sweep.param == "k";
    assign(probe, sweep.param, integral ? std::round(v) : v);
    try {
      validate(probe);
    } catch (const std::domain_error& e) {
      flag_fail(flag, e.what());
    }
  }

  const int steps = sweep.steps;
  std::vector<std::string> rows(static_cast<std::size_t>(steps));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < steps; i = next++) {
      const double v = i == steps - 1 ? sweep.to : sweep.from + (sweep.to - sweep.from) * i / (steps - 1);
      Point p = base;
      std::string reason = assign(p, sweep.param, v);
      std::vector<std::string> values(kValueColumns.size());
      if (reason.empty()) {
        try {
          validate(p);
          values = value_cells(key_rates(p.config, p.hw));
        } catch (const std::domain_error& e) {
          reason = e.what();
        }
      }
      std::ostringstream os;
      auto cells = concat({num(v)}, concat(point_cells(p), values));
      cells.push_back(reason);
      write_row(os, cells);
      rows[static_cast<std::size_t>(i)] = os.str();
    }
  };
  const int workers = std::max(1, std::min(steps, static_cast<int>(std::thread::hardware_concurrency())));
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::ofstream file;
  if (!sweep.out_path.empty()) {
    file.open(sweep.out_path);
    if (!file) throw std::invalid_argument("--out: cannot open '" + sweep.out_path + "' for writing");
  }
  std::ostream& sink = sweep.out_path.empty() ? out : file;
  sink << "# qrk sweep param=" << sweep.param << " from=" << num(sweep.from) << " to=" << num(sweep.to)
       << " steps=" << steps;
  const auto fixed = point_cells(base);
  for (std::size_t i = 0; i < fixed.size(); ++i) sink << ' ' << kPointColumns[i] << '=' << fixed[i];
  sink << '\n';
  sink << "# units: L km; alpha dB/km; c m/s; rate_rep key_dd key_di Hz; all other columns dimensionless\n";
  auto header = concat({"sweep_" + sweep.param}, concat(kPointColumns, kValueColumns));
  header.push_back("reason");
  write_row(sink, header);
  for (const auto& r : rows) sink << r;
  sink.flush();
  if (!sink) throw std::runtime_error("failed writing sweep output");
  return kExitOk;
}

// ---------------------------------------------------------------------------
// mc

struct McFlags {
  double p0 = 0.5;
  int n = 1;
  long long trials = 100000;
  unsigned long long seed = 1;
  std::string strategy = "waitall";
  std::vector<double> pes;
  int chunks = 16;
};

// Expected attempts from the rate formulas: Z_n for deterministic swaps,
// otherwise the probabilistic waiting-time recursion.
double formula_attempts(double p0, int n, const std::vector<double>& p_es) {
  const bool deterministic = std::all_of(p_es.begin(), p_es.end(), [](double p) { return p == 1.0; });
  if (deterministic) return zn(n, p0);
  const LinkBudget unit{1.0, kDefaultAttenuation, kDefaultFiberSpeed, 1.0, 1.0};
  const DistilledLink link{p0, p0, {}, {}};
  return 1.0 / probabilistic_rate(unit, n, link, p_es).rate_hz;
}

int cmd_mc(const McFlags& f, std::ostream& out) {
  check_range("p0", f.p0, 0.0, 1.0, true);
  check_range("n", f.n, 0, 16, false);
  if (f.trials < 2) flag_fail("trials", "must be at least 2, got " + std::to_string(f.trials));
  if (f.chunks < 1) flag_fail("chunks", "must be at least 1");
  std::vector<double> p_es = f.pes;
  if (p_es.empty()) p_es.assign(static_cast<std::size_t>(f.n), 1.0);
  else if (p_es.size() == 1) p_es.assign(static_cast<std::size_t>(f.n), f.pes.front());
  else if (p_es.size() != static_cast<std::size_t>(f.n)) {
    flag_fail("pes", "give one value or one per nesting level (" + std::to_string(f.n) + ")");
  }
  for (double p : p_es) check_range("pes", p, 0.0, 1.0, true);

  const auto strategy = oracle::parse_strategy(f.strategy);
  const auto est = oracle::mc_repeater(f.p0, p_es, f.n, static_cast<std::uint64_t>(f.trials), f.seed, strategy,
                                       f.chunks);
  const double formula = formula_attempts(f.p0, f.n, p_es);
  write_row(out, std::vector<std::string>{"strategy", "p0", "n", "trials", "seed", "chunks", "mean_attempts",
                                          "std_error", "formula_attempts", "ratio"});
  write_row(out, std::vector<std::string>{oracle::to_string(strategy), num(f.p0), std::to_string(f.n),
                                          std::to_string(est.trials), std::to_string(est.seed),
                                          std::to_string(f.chunks), num(est.mean_attempts), num(est.std_error),
                                          num(formula), num(est.mean_attempts / formula)});
  return kExitOk;
}

// ---------------------------------------------------------------------------
// analytic

struct AnalyticFlags {
  std::vector<double> pg_range;
  std::vector<double> n_range;
  double pg = 1.0;
  double eta = 1.0;
  double n = 1.0;
};

std::vector<double> grid(const std::string& flag, const std::vector<double>& range) {
  if (range.size() != 3) flag_fail(flag, "expects three values: from to steps");
  const double steps = range[2];
  if (steps < 2 || std::round(steps) != steps) flag_fail(flag, "steps must be an integer >= 2");
  const int count = static_cast<int>(steps);
  std::vector<double> g(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    g[static_cast<std::size_t>(i)] = i == count - 1 ? range[1] : range[0] + (range[1] - range[0]) * i / (count - 1);
  }
  return g;
}

std::string relative(double d, double r) { return r > 0.0 ? num(d / r) : std::string(); }

int cmd_analytic(const AnalyticFlags& f, std::ostream& out) {
  const bool pg_sweep = !f.pg_range.empty();
  if (pg_sweep == !f.n_range.empty()) {
    throw std::domain_error("analytic: give exactly one of --pg-range or --n-range");
  }
  check_range("eta", f.eta, 0.0, 1.0, true);
  std::vector<std::pair<double, double>> points;  // (p_g, n)
  if (pg_sweep) {
    if (f.n < 1.0) flag_fail("n", "must be at least 1, got " + num(f.n));
    for (double pg : grid("pg-range", f.pg_range)) {
      check_range("pg-range", pg, 0.0, 1.0, true);
      points.emplace_back(pg, f.n);
    }
  } else {
    check_range("pg", f.pg, 0.0, 1.0, true);
    for (double n : grid("n-range", f.n_range)) {
      if (n < 1.0) flag_fail("n-range", "nesting level must be at least 1, got " + num(n));
      points.emplace_back(f.pg, n);
    }
  }

  write_row(out, std::vector<std::string>{"eta", "pg", "n", "n_bar", "r_dd", "r_di", "d_eta_dd", "d_pg_dd",
                                          "d_n_dd", "d_eta_di", "d_pg_di", "d_n_di", "rel_eta_dd", "rel_pg_dd",
                                          "rel_n_dd", "rel_eta_di", "rel_pg_di", "rel_n_di", "reason"});
  for (const auto& [pg, n] : points) {
    const SensitivityReport s = sensitivity(f.eta, pg, n);
    std::vector<std::string> row{num(f.eta),    num(pg),      num(n),       num(s.n_bar),
                                 num(s.r_dd),   "",           num(s.dd.d_eta), num(s.dd.d_pg),
                                 num(s.dd.d_n), "",           "",           "",
                                 relative(s.dd.d_eta, s.r_dd), relative(s.dd.d_pg, s.r_dd),
                                 relative(s.dd.d_n, s.r_dd),   "",           "",           "",
                                 ""};
    if (s.di_defined) {
      row[5] = num(s.r_di);
      row[9] = num(s.di.d_eta);
      row[10] = num(s.di.d_pg);
      row[11] = num(s.di.d_n);
      row[15] = relative(s.di.d_eta, s.r_di);
      row[16] = relative(s.di.d_pg, s.r_di);
      row[17] = relative(s.di.d_n, s.r_di);
    } else {
      row[18] = "no CHSH violation";
    }
    write_row(out, row);
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Secret key rates of quantum repeater chains"};
  app.name("qrk");
  app.require_subcommand(1);

  PointFlags point;
  auto* keyrate = app.add_subcommand("keyrate", "Evaluate one parameter point");
  add_point_flags(keyrate, point);

  PointFlags sweep_point;
  SweepFlags sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Sweep one parameter over a uniform grid");
  add_point_flags(sweep_cmd, sweep_point);
  sweep_cmd->add_option("--param", sweep.param, "Swept parameter")->required()->check(CLI::IsMember(kSweepParams));
  sweep_cmd->add_option("--from", sweep.from, "First grid value")->required();
  sweep_cmd->add_option("--to", sweep.to, "Last grid value")->required();
  sweep_cmd->add_option("--steps", sweep.steps, "Number of grid points (>= 2)")->required();
  sweep_cmd->add_option("--out", sweep.out_path, "Output file (default: standard output)");

  McFlags mc;
  auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo waiting time of a repeater chain");
  mc_cmd->add_option("--p0", mc.p0, "Link probability per attempt")->capture_default_str();
  mc_cmd->add_option("--n", mc.n, "Nesting levels")->capture_default_str();
  mc_cmd->add_option("--trials", mc.trials, "Number of trials")->capture_default_str();
  mc_cmd->add_option("--seed", mc.seed, "Random seed")->capture_default_str();
  mc_cmd->add_option("--strategy", mc.strategy, "waitall or immediate")
      ->check(CLI::IsMember({"waitall", "immediate"}))
      ->capture_default_str();
  mc_cmd->add_option("--pes", mc.pes, "Swap success probability, once or per level (default 1)");
  mc_cmd->add_option("--chunks", mc.chunks, "Independent random streams")->capture_default_str();

  AnalyticFlags an;
  auto* an_cmd = app.add_subcommand("analytic", "Closed-form secret fractions and their derivatives");
  an_cmd->add_option("--pg-range", an.pg_range, "from to steps")->expected(3);
  an_cmd->add_option("--n-range", an.n_range, "from to steps")->expected(3);
  an_cmd->add_option("--pg", an.pg, "Gate quality (with --n-range)")->capture_default_str();
  an_cmd->add_option("--eta", an.eta, "Detector efficiency")->capture_default_str();
  an_cmd->add_option("--n", an.n, "Nesting level, may be fractional (with --pg-range)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitDomainError;
  }

  try {
    if (keyrate->parsed()) return cmd_keyrate(point, out);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep_point, sweep, out);
    if (mc_cmd->parsed()) return cmd_mc(mc, out);
    if (an_cmd->parsed()) return cmd_analytic(an, out);
    throw std::logic_error("no subcommand dispatched");
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  }
}

}  // namespace qrk::cli
