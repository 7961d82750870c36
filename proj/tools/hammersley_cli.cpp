// Command-line front end: sampling, line diagrams, trajectory dumps, and the
// Monte Carlo / exact verification experiments. Every run is reproducible
// from its flags; CSV reports embed the tool version and the full config.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hammersley/balance.hpp"
#include "hammersley/coupling.hpp"
#include "hammersley/dynamics.hpp"
#include "hammersley/experiments.hpp"
#include "hammersley/lines.hpp"
#include "hammersley/model.hpp"
#include "hammersley/rational.hpp"
#include "hammersley/sampling.hpp"
#include "hammersley/subseq.hpp"
#include "hammersley/version.hpp"

namespace {

using namespace hammersley;

std::string fmt_g(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

ModelKind to_model(int m) {
  if (m == 1) return ModelKind::model1;
  if (m == 2) return ModelKind::model2;
  throw std::invalid_argument("model must be 1 or 2");
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
}

// Reports carry the version and the exact flag set that produced them.
std::string report_text(const std::string& config_line,
                        const std::vector<ExperimentReport>& rows) {
  std::string out;
  out += "# ";
  out += kVersion;
  out += "\n# config: ";
  out += config_line;
  out += "\n";
  out += csv_header();
  out += "\n";
  for (const ExperimentReport& r : rows) {
    out += csv_row(r);
    out += "\n";
  }
  return out;
}

void emit_report(const std::string& csv_path, const std::string& config_line,
                 const std::vector<ExperimentReport>& rows) {
  const std::string text = report_text(config_line, rows);
  std::cout << text;
  if (!csv_path.empty()) write_file(csv_path, text);
}

struct SampleArgs {
  int model = 1;
  int n = 8;
  int m = 8;
  double p = 0.25;
  double alpha = -1.0;
  std::uint64_t seed = 1;
  std::uint64_t replica = 0;
  std::string out;
  std::string boundary_out;
};

int run_sample(const SampleArgs& a) {
  const CrossField f = sample_cross_field(a.n, a.m, a.p, SeedSpec{a.seed}, a.replica);
  const std::string text = field_to_text(f);
  if (a.out.empty())
    std::cout << text;
  else
    write_file(a.out, text);
  if (a.alpha >= 0.0) {
    const BoundaryData b =
        sample_boundary(to_model(a.model), a.n, a.m, a.alpha, a.p, SeedSpec{a.seed}, a.replica);
    const std::string btext = boundary_to_text(b);
    if (a.boundary_out.empty())
      std::cout << btext;
    else
      write_file(a.boundary_out, btext);
  }
  return 0;
}

struct LinesArgs {
  int model = 1;
  int n = 8;
  int m = 8;
  double p = 0.25;
  double alpha = -1.0;
  std::uint64_t seed = 1;
  std::uint64_t replica = 0;
  std::string field_path;
  std::string boundary_path;
  std::string svg_path;
};

int run_lines(const LinesArgs& a) {
  const ModelKind k = to_model(a.model);
  CrossField f(1, 1);
  if (!a.field_path.empty()) {
    std::ifstream in(a.field_path);
    if (!in) throw std::runtime_error("cannot open field file: " + a.field_path);
    f = field_from_text(in);
  } else {
    f = sample_cross_field(a.n, a.m, a.p, SeedSpec{a.seed}, a.replica);
  }

  std::optional<BoundaryData> b;
  if (!a.boundary_path.empty()) {
    std::ifstream in(a.boundary_path);
    if (!in) throw std::runtime_error("cannot open boundary file: " + a.boundary_path);
    b = boundary_from_text(in, k, f.n, f.m);
  } else if (a.alpha >= 0.0) {
    b = sample_boundary(k, f.n, f.m, a.alpha, a.p, SeedSpec{a.seed}, a.replica);
  }

  const LineDiagram d = b ? build_lines_boundary(f, *b, k) : build_lines(f, k);
  const int lines = static_cast<int>(d.lines.size());
  const int tops = top_exit_count(d);
  std::cout << "lines " << lines << "\n";
  std::cout << "top_exits " << tops << "\n";
  if (b) {
    std::cout << "sinks " << b->sink_total() << "\n";
    const int chain = boundary_chain_length(f, *b, k);
    std::cout << "chain " << chain << "\n";
    if (chain != lines || lines != tops + b->sink_total()) {
      std::cerr << "error: line bookkeeping out of balance\n";
      return 1;
    }
  } else {
    const int chain = longest_chain(f, k);
    std::cout << "chain " << chain << "\n";
    if (chain != lines) {
      std::cerr << "error: line count disagrees with chain length\n";
      return 1;
    }
  }
  if (!a.svg_path.empty()) write_file(a.svg_path, render_svg(d));
  return 0;
}

struct SimulateArgs {
  int model = 1;
  int n = 8;
  int m = 8;
  double p = 0.25;
  double alpha = -1.0;
  std::uint64_t seed = 1;
  std::uint64_t replica = 0;
  std::string out;
};

int run_simulate(const SimulateArgs& a) {
  const ModelKind k = to_model(a.model);
  const CrossField f = sample_cross_field(a.n, a.m, a.p, SeedSpec{a.seed}, a.replica);
  BoundaryData b = zero_boundary(k, a.n, a.m);
  if (a.alpha >= 0.0) b = sample_boundary(k, a.n, a.m, a.alpha, a.p, SeedSpec{a.seed}, a.replica);
  const std::vector<ParticleState> traj = evolve(k, f, b);
  const std::string text = trajectory_to_text(traj);
  if (a.out.empty())
    std::cout << text;
  else
    write_file(a.out, text);
  return 0;
}

struct LlnArgs {
  int model = 1;
  double a = 1.0;
  double b = 1.0;
  double p = 0.25;
  int n = 500;
  int m = 0;
  int reps = 50;
  std::uint64_t seed = 1;
  bool lpp = false;
  std::string csv;
};

int run_lln(const LlnArgs& a) {
  ExperimentReport rep;
  std::string cfg;
  if (a.lpp) {
    const int m = a.m > 0 ? a.m : a.n;
    rep = lpp_estimate(a.p, a.n, m, a.reps, SeedSpec{a.seed});
    cfg = "lln --lpp --p " + fmt_g(a.p) + " --n " + std::to_string(a.n) + " --m " +
          std::to_string(m) + " --reps " + std::to_string(a.reps) + " --seed " +
          std::to_string(a.seed);
  } else {
    rep = mc_estimate(to_model(a.model), a.a, a.b, a.p, a.n, a.reps, SeedSpec{a.seed});
    cfg = "lln --model " + std::to_string(a.model) + " --a " + fmt_g(a.a) + " --b " +
          fmt_g(a.b) + " --p " + fmt_g(a.p) + " --n " + std::to_string(a.n) + " --reps " +
          std::to_string(a.reps) + " --seed " + std::to_string(a.seed);
  }
  emit_report(a.csv, cfg, {rep});
  return rep.pass ? 0 : 1;
}

struct StationaryArgs {
  int model = 1;
  int n = 40;
  int m = 40;
  double alpha = 1.0 / 3.0;
  double p = 0.25;
  int replicas = 20000;
  std::uint64_t seed = 1;
  double sink_alpha = -1.0;
};

int run_stationary(const StationaryArgs& a) {
  const StationarityReport rep = stationarity_test(to_model(a.model), a.n, a.m, a.alpha, a.p,
                                                   a.replicas, SeedSpec{a.seed}, a.sink_alpha);
  std::cout << "# " << kVersion << "\n";
  std::cout << "# config: stationary --model " << a.model << " --n " << a.n << " --m " << a.m
            << " --alpha " << fmt_g(a.alpha) << " --p " << fmt_g(a.p) << " --replicas "
            << a.replicas << " --seed " << a.seed;
  if (a.sink_alpha >= 0.0) std::cout << " --sink-alpha " << fmt_g(a.sink_alpha);
  std::cout << "\n";
  std::printf("slice_means %s worst_t=%d worst_sigmas=%.3f\n",
              rep.slice_means_ok ? "ok" : "FAIL", rep.worst_slice_t, rep.worst_slice_sigmas);
  std::printf("top_moments %s mean=%.4f (%.3f sigmas) var=%.4f (%.3f sigmas)\n",
              rep.top_moments_ok ? "ok" : "FAIL", rep.top_mean, rep.top_mean_sigmas,
              rep.top_var, rep.top_var_sigmas);
  std::printf("count_identity %s\n", rep.count_identity_ok ? "ok" : "FAIL");
  std::printf("upper_bound %s\n", rep.upper_bound_ok ? "ok" : "FAIL");
  return rep.pass() ? 0 : 1;
}

struct BalanceArgs {
  int model = 1;
  std::string alpha = "1/3";
  std::string p = "1/4";
  std::string sink_alpha;
  int truncation = 32;
};

int run_balance(const BalanceArgs& a) {
  const Rational alpha = parse_rational(a.alpha);
  const Rational p = parse_rational(a.p);
  std::optional<Rational> override_astar;
  if (!a.sink_alpha.empty()) override_astar = parse_rational(a.sink_alpha);
  const PushforwardReport rep =
      pushforward_check(to_model(a.model), alpha, p, a.truncation, override_astar);
  std::cout << "# " << kVersion << "\n";
  std::cout << "# config: balance --model " << a.model << " --alpha " << a.alpha << " --p "
            << a.p;
  if (!a.sink_alpha.empty()) std::cout << " --sink-alpha " << a.sink_alpha;
  std::cout << " --truncation " << a.truncation << "\n";
  std::cout << "x,y,expected,actual,ok\n";
  for (const PushforwardAtom& atom : rep.atoms)
    std::cout << atom.x << "," << atom.y << "," << atom.expected << "," << atom.actual << ","
              << (atom.ok ? 1 : 0) << "\n";
  std::cout << "exact_match " << (rep.exact_match ? "yes" : "no") << "\n";
  std::cout << "identity " << (rep.identity_ok ? "yes" : "no") << "\n";
  if (!rep.first_violation.empty()) std::cout << "violation " << rep.first_violation << "\n";
  return rep.exact_match && rep.identity_ok ? 0 : 1;
}

struct CouplingArgs {
  int sites = 256;
  int n = 2;
  int j = 0;
  int trials = 2000;
  double p = 0.25;
  double plant = 0.25;
  int audit_every = 50;
  std::uint64_t seed = 1;
  std::string csv;
};

int run_coupling(const CouplingArgs& a) {
  std::vector<std::string> trace;
  const CouplingSweepReport rep =
      coupling_sweep(a.sites, a.n, a.j, a.trials, a.p, a.plant, a.audit_every, SeedSpec{a.seed},
                     a.csv.empty() ? nullptr : &trace);
  std::cout << "# " << kVersion << "\n";
  std::cout << "# config: coupling --sites " << a.sites << " --n " << a.n << " --j " << rep.j
            << " --trials " << a.trials << " --p " << fmt_g(a.p) << " --plant "
            << fmt_g(a.plant) << " --audit-every " << a.audit_every << " --seed " << a.seed
            << "\n";
  std::printf("trials %d violations %d\n", rep.trials, rep.violations);
  std::printf("audits %d audit_violations %d\n", rep.audit_trials, rep.audit_violations);
  std::printf("patterns %lld events %lld\n", rep.patterns_seen, rep.events_seen);
  if (!a.csv.empty()) {
    std::string text = "# ";
    text += kVersion;
    text += "\ntrial,n,j,delta_before,delta_after,a_count,holds\n";
    for (const std::string& row : trace) {
      text += row;
      text += "\n";
    }
    write_file(a.csv, text);
  }
  return rep.ok() ? 0 : 1;
}

struct UlamArgs {
  int k = 10;
  double n = 100000.0;
  int reps = 10;
  std::uint64_t seed = 1;
  std::string csv;
};

int run_ulam(const UlamArgs& a) {
  const UlamReport rep = ulam_estimate(a.k, a.n, a.reps, SeedSpec{a.seed});
  const std::string cfg = "ulam --k " + std::to_string(a.k) + " --n " + fmt_g(a.n) +
                          " --reps " + std::to_string(a.reps) + " --seed " +
                          std::to_string(a.seed);
  emit_report(a.csv, cfg, {rep.discretized, rep.direct});
  return rep.pass() ? 0 : 1;
}

struct OracleArgs {
  int max_side = 4;
  int dyn_side = 3;
  int max_sink = 2;
  int random = 1000;
  int random_side = 10;
  std::uint64_t seed = 1;
};

int run_oracle(const OracleArgs& a) {
  bool all_ok = true;
  for (int side = 1; side <= a.max_side; ++side) {
    const OracleReport rep = oracle_exhaustive_chains(side);
    std::printf("chains side=%d cases=%lld mismatches=%lld\n", side, rep.cases_checked,
                rep.mismatches);
    all_ok = all_ok && rep.ok();
  }
  for (ModelKind k : {ModelKind::model1, ModelKind::model2}) {
    const int model = k == ModelKind::model1 ? 1 : 2;
    const OracleReport ex = oracle_dynamics_exhaustive(k, a.dyn_side, a.max_sink);
    std::printf("dynamics model=%d side=%d cases=%lld mismatches=%lld\n", model, a.dyn_side,
                ex.cases_checked, ex.mismatches);
    all_ok = all_ok && ex.ok();
    if (a.random > 0) {
      const OracleReport rnd =
          oracle_dynamics_random(k, a.random_side, a.random, SeedSpec{a.seed});
      std::printf("dynamics-random model=%d side=%d cases=%lld mismatches=%lld\n", model,
                  a.random_side, rnd.cases_checked, rnd.mismatches);
      all_ok = all_ok && rnd.ok();
    }
  }
  std::printf("oracle %s\n", all_ok ? "ok" : "FAIL");
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(hammersley::kVersion) +
               " -- discrete Hammersley processes: sampling, line diagrams, particle "
               "dynamics, and verification experiments"};
  app.set_config("--config", "", "read options from a config file");
  app.require_subcommand(1);

  SampleArgs sa;
  CLI::App* sample = app.add_subcommand("sample", "emit a sampled cross field (and boundary)");
  sample->add_option("--model", sa.model, "model (1 or 2)");
  sample->add_option("--n", sa.n, "columns")->check(CLI::PositiveNumber);
  sample->add_option("--m", sa.m, "rows")->check(CLI::PositiveNumber);
  sample->add_option("--p", sa.p, "cross intensity");
  sample->add_option("--alpha", sa.alpha, "source intensity; adds a boundary dump");
  sample->add_option("--seed", sa.seed, "master seed");
  sample->add_option("--replica", sa.replica, "replica index");
  sample->add_option("--out", sa.out, "field output path (default stdout)");
  sample->add_option("--boundary-out", sa.boundary_out, "boundary output path");

  LinesArgs la;
  CLI::App* lines = app.add_subcommand("lines", "build the line diagram, optionally as SVG");
  lines->add_option("--model", la.model, "model (1 or 2)");
  lines->add_option("--n", la.n, "columns")->check(CLI::PositiveNumber);
  lines->add_option("--m", la.m, "rows")->check(CLI::PositiveNumber);
  lines->add_option("--p", la.p, "cross intensity");
  lines->add_option("--alpha", la.alpha, "source intensity; adds a sampled boundary");
  lines->add_option("--seed", la.seed, "master seed");
  lines->add_option("--replica", la.replica, "replica index");
  lines->add_option("--field", la.field_path, "read the field from a text dump");
  lines->add_option("--boundary", la.boundary_path, "read the boundary from a text dump");
  lines->add_option("--svg", la.svg_path, "SVG output path");

  SimulateArgs ma;
  CLI::App* simulate = app.add_subcommand("simulate", "evolve the particle dynamics");
  simulate->add_option("--model", ma.model, "model (1 or 2)");
  simulate->add_option("--n", ma.n, "sites")->check(CLI::PositiveNumber);
  simulate->add_option("--m", ma.m, "time steps")->check(CLI::PositiveNumber);
  simulate->add_option("--p", ma.p, "cross intensity");
  simulate->add_option("--alpha", ma.alpha, "source intensity (default: empty boundary)");
  simulate->add_option("--seed", ma.seed, "master seed");
  simulate->add_option("--replica", ma.replica, "replica index");
  simulate->add_option("--out", ma.out, "trajectory output path (default stdout)");

  LlnArgs lla;
  CLI::App* lln = app.add_subcommand("lln", "Monte Carlo chain length vs the closed-form limit");
  lln->add_option("--model", lla.model, "model (1 or 2)");
  lln->add_option("--a", lla.a, "horizontal box scale");
  lln->add_option("--b", lla.b, "vertical box scale");
  lln->add_option("--p", lla.p, "cross intensity");
  lln->add_option("--n", lla.n, "scale parameter")->check(CLI::PositiveNumber);
  lln->add_option("--m", lla.m, "rows for --lpp (default n)");
  lln->add_option("--reps", lla.reps, "replicas")->check(CLI::PositiveNumber);
  lln->add_option("--seed", lla.seed, "master seed");
  lln->add_flag("--lpp", lla.lpp, "geometric last-passage time instead of chain length");
  lln->add_option("--csv", lla.csv, "CSV report path");

  StationaryArgs sta;
  CLI::App* stationary = app.add_subcommand("stationary", "stationarity test battery");
  stationary->add_option("--model", sta.model, "model (1 or 2)");
  stationary->add_option("--n", sta.n, "sites")->check(CLI::PositiveNumber);
  stationary->add_option("--m", sta.m, "time steps")->check(CLI::PositiveNumber);
  stationary->add_option("--alpha", sta.alpha, "source intensity");
  stationary->add_option("--p", sta.p, "cross intensity");
  stationary->add_option("--replicas", sta.replicas, "replicas")->check(CLI::PositiveNumber);
  stationary->add_option("--seed", sta.seed, "master seed");
  stationary->add_option("--sink-alpha", sta.sink_alpha,
                         "override the sink intensity (negative control)");

  BalanceArgs ba;
  CLI::App* balance = app.add_subcommand("balance", "exact-rational pushforward check");
  balance->add_option("--model", ba.model, "model (1 or 2)");
  balance->add_option("--alpha", ba.alpha, "source intensity as num/den");
  balance->add_option("--p", ba.p, "cross intensity as num/den");
  balance->add_option("--sink-alpha", ba.sink_alpha,
                      "override the sink intensity as num/den (negative control)");
  balance->add_option("--truncation", ba.truncation, "model 2 sink enumeration cutoff");

  CouplingArgs ca;
  CLI::App* coupling = app.add_subcommand("coupling", "discrepancy inequality sweep");
  coupling->add_option("--sites", ca.sites, "window size")->check(CLI::PositiveNumber);
  coupling->add_option("--n", ca.n, "pattern span");
  coupling->add_option("--j", ca.j, "block count (0 = maximal)");
  coupling->add_option("--trials", ca.trials, "trials")->check(CLI::PositiveNumber);
  coupling->add_option("--p", ca.p, "cross intensity");
  coupling->add_option("--plant", ca.plant, "fraction of trials with a planted pattern");
  coupling->add_option("--audit-every", ca.audit_every, "per-cross audit cadence (0 = off)");
  coupling->add_option("--seed", ca.seed, "master seed");
  coupling->add_option("--csv", ca.csv, "per-trial trace output path");

  UlamArgs ua;
  CLI::App* ulam = app.add_subcommand("ulam", "Ulam constant estimates");
  ulam->add_option("--k", ua.k, "discretization level")->check(CLI::PositiveNumber);
  ulam->add_option("--n", ua.n, "Poisson intensity");
  ulam->add_option("--reps", ua.reps, "replicas")->check(CLI::PositiveNumber);
  ulam->add_option("--seed", ua.seed, "master seed");
  ulam->add_option("--csv", ua.csv, "CSV report path");

  OracleArgs oa;
  CLI::App* oracle = app.add_subcommand("oracle", "exhaustive equivalence suites");
  oracle->add_option("--max-side", oa.max_side, "largest exhaustive chain side");
  oracle->add_option("--dyn-side", oa.dyn_side, "dynamics equivalence side");
  oracle->add_option("--max-sink", oa.max_sink, "largest sink value enumerated");
  oracle->add_option("--random", oa.random, "random dynamics instances per model");
  oracle->add_option("--random-side", oa.random_side, "random instance side");
  oracle->add_option("--seed", oa.seed, "master seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(sample)) return run_sample(sa);
    if (app.got_subcommand(lines)) return run_lines(la);
    if (app.got_subcommand(simulate)) return run_simulate(ma);
    if (app.got_subcommand(lln)) return run_lln(lla);
    if (app.got_subcommand(stationary)) return run_stationary(sta);
    if (app.got_subcommand(balance)) return run_balance(ba);
    if (app.got_subcommand(coupling)) return run_coupling(ca);
    if (app.got_subcommand(ulam)) return run_ulam(ua);
    if (app.got_subcommand(oracle)) return run_oracle(oa);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
