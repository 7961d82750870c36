#include "hammersley/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "hammersley/coupling.hpp"
#include "hammersley/dynamics.hpp"
#include "hammersley/lines.hpp"
#include "hammersley/sampling.hpp"
#include "hammersley/subseq.hpp"

namespace hammersley {

namespace {

constexpr double kUlamDiscTolerance = 0.15;  // sanity band; finite-size bias sits below target

void check_rate(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must lie in (0,1)");
}

void check_scales(double a, double b) {
  if (!(a > 0.0 && b > 0.0)) throw std::invalid_argument("scales must be positive");
}

double pairwise_sum(const double* v, std::size_t lo, std::size_t hi) {
  if (hi - lo <= 16) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += v[i];
    return s;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

struct MeanErr {
  double mean = 0.0;
  double se = 0.0;
};

MeanErr mean_and_stderr(const std::vector<double>& xs) {
  const std::size_t r = xs.size();
  if (r == 0) throw std::invalid_argument("no samples");
  MeanErr me;
  me.mean = pairwise_sum(xs.data(), 0, r) / static_cast<double>(r);
  if (r < 2) return me;
  std::vector<double> sq(r);
  for (std::size_t i = 0; i < r; ++i) {
    const double d = xs[i] - me.mean;
    sq[i] = d * d;
  }
  const double var = pairwise_sum(sq.data(), 0, r) / static_cast<double>(r - 1);
  me.se = std::sqrt(var / static_cast<double>(r));
  return me;
}

int particle_count(const ParticleState& s) {
  int c = 0;
  for (std::uint8_t v : s) c += v;
  return c;
}

void fill_from_mask(CrossField& f, std::uint32_t mask) {
  for (std::size_t i = 0; i < f.cells.size(); ++i)
    f.cells[i] = static_cast<std::uint8_t>((mask >> i) & 1u);
}

}  // namespace

double limit_value(ModelKind k, double a, double b, double p) {
  check_scales(a, b);
  check_rate(p);
  if (k == ModelKind::model1) {
    if (p < std::min(a / b, b / a))
      return std::sqrt(p) * (2.0 * std::sqrt(a * b) - (a + b) * std::sqrt(p)) / (1.0 - p);
    return std::min(a, b);
  }
  if (p < a / (a + b)) return 2.0 * std::sqrt(a * b * p * (1.0 - p)) + (a - b) * p;
  return a;
}

double limit_value_lpp(double p) {
  check_rate(p);
  const double s = std::sqrt(p);
  return 2.0 * s / (1.0 - s);
}

double phi1(double a, double b, double alpha, double p) {
  check_scales(a, b);
  check_rate(p);
  if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in (0,1]");
  return a * alpha + b * p * (1.0 - alpha) / (alpha + p * (1.0 - alpha));
}

std::string csv_header() {
  return "model,a,b,p,n,reps,seed,estimate,stderr,target,tolerance,pass";
}

std::string csv_row(const ExperimentReport& r) {
  char buf[320];
  std::snprintf(buf, sizeof buf, "%s,%g,%g,%g,%d,%d,%llu,%.10g,%.6g,%.10g,%g,%d",
                r.model_label.c_str(), r.a, r.b, r.p, r.n, r.reps,
                static_cast<unsigned long long>(r.seed), r.estimate, r.std_error, r.target,
                r.tolerance, r.pass ? 1 : 0);
  return buf;
}

ExperimentReport mc_estimate(ModelKind k, double a, double b, double p, int n, int reps,
                             SeedSpec seed) {
  check_scales(a, b);
  check_rate(p);
  if (n < 1 || reps < 1) throw std::invalid_argument("n and reps must be positive");
  const int cols = static_cast<int>(std::floor(a * n));
  const int rows = static_cast<int>(std::floor(b * n));
  if (cols < 1 || rows < 1) throw std::invalid_argument("box side rounds to zero");
  std::vector<double> vals(static_cast<std::size_t>(reps));
  for (int r = 0; r < reps; ++r) {
    const CrossField f = sample_cross_field(cols, rows, p, seed, static_cast<std::uint64_t>(r));
    vals[static_cast<std::size_t>(r)] = longest_chain(f, k) / static_cast<double>(n);
  }
  const MeanErr me = mean_and_stderr(vals);
  ExperimentReport rep;
  rep.model_label = k == ModelKind::model1 ? "1" : "2";
  rep.a = a;
  rep.b = b;
  rep.p = p;
  rep.n = n;
  rep.reps = reps;
  rep.seed = seed.master_seed;
  rep.estimate = me.mean;
  rep.std_error = me.se;
  rep.target = limit_value(k, a, b, p);
  rep.tolerance = kLlnTolerance;
  rep.pass = std::abs(rep.estimate - rep.target) <= rep.tolerance;
  return rep;
}

ExperimentReport lpp_estimate(double p, int n, int m, int reps, SeedSpec seed) {
  check_rate(p);
  if (n < 1 || m < 1 || reps < 1) throw std::invalid_argument("sizes must be positive");
  std::vector<double> vals(static_cast<std::size_t>(reps));
  for (int r = 0; r < reps; ++r) {
    const RngStream rs(seed, Purpose::weights, static_cast<std::uint64_t>(r));
    WeightField w(n, m);
    for (int t = 1; t <= m; ++t)
      for (int x = 1; x <= n; ++x) {
        const long long g = rs.geometric_count(RngStream::cell(x, t), p);
        w.set(x, t, static_cast<int>(std::min<long long>(g, 1ll << 30)));
      }
    vals[static_cast<std::size_t>(r)] =
        static_cast<double>(geometric_lpp(w)) / static_cast<double>(n);
  }
  const MeanErr me = mean_and_stderr(vals);
  ExperimentReport rep;
  rep.model_label = "lpp";
  rep.a = 1.0;
  rep.b = static_cast<double>(m) / n;
  rep.p = p;
  rep.n = n;
  rep.reps = reps;
  rep.seed = seed.master_seed;
  rep.estimate = me.mean;
  rep.std_error = me.se;
  rep.target = limit_value_lpp(p);
  rep.tolerance = kLppTolerance;
  rep.pass = std::abs(rep.estimate - rep.target) <= rep.tolerance;
  return rep;
}

Rational exact_expectation_small(ModelKind k, int n, int m, const Rational& p) {
  if (n < 1 || m < 1) throw std::invalid_argument("grid sides must be positive");
  if (n * m > 16) throw std::invalid_argument("grid too large for exhaustive expectation");
  if (!(p >= 0 && p <= 1)) throw std::invalid_argument("p must lie in [0,1]");
  const int cells = n * m;
  std::vector<Rational> pw(static_cast<std::size_t>(cells) + 1);
  std::vector<Rational> qw(static_cast<std::size_t>(cells) + 1);
  pw[0] = 1;
  qw[0] = 1;
  for (int i = 1; i <= cells; ++i) {
    pw[static_cast<std::size_t>(i)] = pw[static_cast<std::size_t>(i - 1)] * p;
    qw[static_cast<std::size_t>(i)] = qw[static_cast<std::size_t>(i - 1)] * (1 - p);
  }
  CrossField f(n, m);
  Rational total = 0;
  for (std::uint32_t mask = 0; mask < (1u << cells); ++mask) {
    fill_from_mask(f, mask);
    const int c = __builtin_popcount(mask);
    total += pw[static_cast<std::size_t>(c)] * qw[static_cast<std::size_t>(cells - c)] *
             longest_chain(f, k);
  }
  return total;
}

StationarityReport stationarity_test(ModelKind k, int n, int m, double alpha, double p,
                                     int replicas, SeedSpec seed, double alpha_star_override) {
  if (n < 1 || m < 1) throw std::invalid_argument("grid sides must be positive");
  if (replicas < 2) throw std::invalid_argument("need at least two replicas");
  alpha_star(k, alpha, p);  // validates the parameter regime

  std::vector<long long> slice_sums(static_cast<std::size_t>(m) + 1, 0);
  long long top_sum = 0;
  long long top_sumsq = 0;
  int identity_failures = 0;
  int upper_failures = 0;

  for (int r = 0; r < replicas; ++r) {
    const auto rep = static_cast<std::uint64_t>(r);
    const BoundaryData b = sample_boundary(k, n, m, alpha, p, seed, rep, alpha_star_override);
    const CrossField f = sample_cross_field(n, m, p, seed, rep);
    const std::vector<ParticleState> traj = evolve(k, f, b);
    for (int t = 0; t <= m; ++t)
      slice_sums[static_cast<std::size_t>(t)] += particle_count(traj[static_cast<std::size_t>(t)]);
    const int top = particle_count(traj[static_cast<std::size_t>(m)]);
    top_sum += top;
    top_sumsq += static_cast<long long>(top) * top;
    const int len = boundary_chain_length(f, b, k);
    if (len != top + b.sink_total()) ++identity_failures;
    if (longest_chain(f, k) > len) ++upper_failures;
  }

  StationarityReport out;
  out.model = k;
  out.n = n;
  out.m = m;
  out.alpha = alpha;
  out.p = p;
  out.replicas = replicas;

  const double reps = static_cast<double>(replicas);
  const double mean_target = n * alpha;
  const double var_target = n * alpha * (1.0 - alpha);
  const double sigma_mean = std::sqrt(var_target / reps);

  out.worst_slice_sigmas = 0.0;
  for (int t = 0; t <= m; ++t) {
    const double mean_t = static_cast<double>(slice_sums[static_cast<std::size_t>(t)]) / reps;
    const double dev = std::abs(mean_t - mean_target) / sigma_mean;
    if (dev > out.worst_slice_sigmas) {
      out.worst_slice_sigmas = dev;
      out.worst_slice_t = t;
    }
  }
  out.slice_means_ok = out.worst_slice_sigmas <= kSigmaGate;

  out.top_mean = static_cast<double>(top_sum) / reps;
  out.top_mean_sigmas = std::abs(out.top_mean - mean_target) / sigma_mean;
  // Sample variance; counts are small integers so the textbook form is stable.
  out.top_var = (static_cast<double>(top_sumsq) -
                 static_cast<double>(top_sum) * static_cast<double>(top_sum) / reps) /
                (reps - 1.0);
  // Exact Binomial fourth central moment via cumulants gives Var(s^2).
  const double q = alpha;
  const double k2 = n * q * (1.0 - q);
  const double k4 = n * q * (1.0 - q) * (1.0 - 6.0 * q * (1.0 - q));
  const double mu4 = k4 + 3.0 * k2 * k2;
  const double var_s2 = (mu4 - k2 * k2 * (reps - 3.0) / (reps - 1.0)) / reps;
  out.top_var_sigmas = std::abs(out.top_var - var_target) / std::sqrt(var_s2);
  out.top_moments_ok =
      out.top_mean_sigmas <= kSigmaGate && out.top_var_sigmas <= kSigmaGate;

  out.count_identity_ok = identity_failures == 0;
  out.upper_bound_ok = upper_failures == 0;
  return out;
}

int lis_strict(std::vector<std::pair<double, double>> pts) {
  // Sort x ascending, y descending within equal x so equal-x points cannot
  // chain; then the longest strictly increasing y-subsequence is the answer.
  std::sort(pts.begin(), pts.end(), [](const auto& l, const auto& r) {
    if (l.first != r.first) return l.first < r.first;
    return l.second > r.second;
  });
  std::vector<double> tails;
  for (const auto& pt : pts) {
    auto it = std::lower_bound(tails.begin(), tails.end(), pt.second);
    if (it == tails.end())
      tails.push_back(pt.second);
    else
      *it = pt.second;
  }
  return static_cast<int>(tails.size());
}

ExperimentReport ulam_discretized(int k, double intensity, int reps, SeedSpec seed) {
  if (k < 1) throw std::invalid_argument("discretization level must be positive");
  if (!(intensity > 0.0)) throw std::invalid_argument("intensity must be positive");
  if (reps < 1) throw std::invalid_argument("reps must be positive");
  const double pk = 1.0 - std::exp(-1.0 / (static_cast<double>(k) * k));
  const int side = static_cast<int>(std::llround(k * std::sqrt(intensity)));
  if (side < 1) throw std::invalid_argument("grid side rounds to zero");
  const double root_n = std::sqrt(intensity);
  std::vector<double> vals(static_cast<std::size_t>(reps));
  for (int r = 0; r < reps; ++r) {
    const CrossField f = sample_cross_field(side, side, pk, seed, static_cast<std::uint64_t>(r));
    vals[static_cast<std::size_t>(r)] = longest_chain(f, ModelKind::model1) / root_n;
  }
  const MeanErr me = mean_and_stderr(vals);
  ExperimentReport rep;
  rep.model_label = "ulam-k" + std::to_string(k);
  rep.a = k;
  rep.b = k;
  rep.p = pk;
  rep.n = static_cast<int>(intensity);
  rep.reps = reps;
  rep.seed = seed.master_seed;
  rep.estimate = me.mean;
  rep.std_error = me.se;
  rep.target = 2.0 * k * std::sqrt(pk) / (1.0 + std::sqrt(pk));
  rep.tolerance = kUlamDiscTolerance;
  rep.pass = std::abs(rep.estimate - rep.target) <= rep.tolerance;
  return rep;
}

ExperimentReport ulam_direct(double intensity, int reps, SeedSpec seed) {
  if (!(intensity > 0.0)) throw std::invalid_argument("intensity must be positive");
  if (reps < 1) throw std::invalid_argument("reps must be positive");
  const double root_n = std::sqrt(intensity);
  std::vector<double> vals(static_cast<std::size_t>(reps));
  for (int r = 0; r < reps; ++r) {
    const RngStream rs(seed, Purpose::points, static_cast<std::uint64_t>(r));
    std::uint64_t c = 0;
    // Poisson(intensity) point count from unit-exponential spacings.
    int count = 0;
    double acc = 0.0;
    for (;;) {
      acc += -std::log1p(-rs.uniform01(c++));
      if (acc > intensity) break;
      ++count;
    }
    std::vector<std::pair<double, double>> pts(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
      pts[static_cast<std::size_t>(i)].first = rs.uniform01(c++);
      pts[static_cast<std::size_t>(i)].second = rs.uniform01(c++);
    }
    vals[static_cast<std::size_t>(r)] = lis_strict(std::move(pts)) / root_n;
  }
  const MeanErr me = mean_and_stderr(vals);
  ExperimentReport rep;
  rep.model_label = "poisson";
  rep.a = 1.0;
  rep.b = 1.0;
  rep.p = 0.0;
  rep.n = static_cast<int>(intensity);
  rep.reps = reps;
  rep.seed = seed.master_seed;
  rep.estimate = me.mean;
  rep.std_error = me.se;
  // The true limit 2 is not attainable at finite intensity; the pass band
  // [kUlamDirectLo, kUlamDirectHi] is encoded as center +/- half-width.
  rep.target = 0.5 * (kUlamDirectLo + kUlamDirectHi);
  rep.tolerance = 0.5 * (kUlamDirectHi - kUlamDirectLo);
  rep.pass = std::abs(rep.estimate - rep.target) <= rep.tolerance;
  return rep;
}

UlamReport ulam_estimate(int k, double intensity, int reps, SeedSpec seed) {
  UlamReport out;
  out.discretized = ulam_discretized(k, intensity, reps, seed);
  out.direct = ulam_direct(intensity, reps, seed);
  return out;
}

DecayReport source_usage_decay(ModelKind k, double a, double b, double p,
                               const std::vector<int>& sizes, int reps, SeedSpec seed) {
  if (sizes.empty()) throw std::invalid_argument("need at least one size");
  if (reps < 1) throw std::invalid_argument("reps must be positive");
  const OptimalBoundary ob = optimal_boundary(k, a, b, p);
  DecayReport out;
  out.sizes = sizes;
  for (std::size_t si = 0; si < sizes.size(); ++si) {
    const int n = sizes[si];
    if (n < 1) throw std::invalid_argument("sizes must be positive");
    const int cols = static_cast<int>(std::floor(a * n));
    const int rows = static_cast<int>(std::floor(b * n));
    if (cols < 1 || rows < 1) throw std::invalid_argument("box side rounds to zero");
    std::vector<double> vals(static_cast<std::size_t>(reps));
    for (int r = 0; r < reps; ++r) {
      const auto rep = static_cast<std::uint64_t>(si) * static_cast<std::uint64_t>(reps) +
                       static_cast<std::uint64_t>(r);
      const BoundaryData bd = sample_boundary(k, cols, rows, ob.alpha, p, seed, rep);
      const CrossField f = sample_cross_field(cols, rows, p, seed, rep);
      const ChainResult res = optimal_path(f, bd, k);
      vals[static_cast<std::size_t>(r)] = res.d_sources / static_cast<double>(n);
    }
    out.means.push_back(mean_and_stderr(vals).mean);
  }
  out.strictly_decreasing = true;
  for (std::size_t i = 1; i < out.means.size(); ++i)
    if (!(out.means[i] < out.means[i - 1])) out.strictly_decreasing = false;
  return out;
}

CouplingSweepReport coupling_sweep(int sites, int n, int j, int trials, double cross_p,
                                   double plant_fraction, int audit_every, SeedSpec seed,
                                   std::vector<std::string>* trace) {
  if (n < 2) throw std::invalid_argument("pattern span must be at least 2");
  if (j <= 0) j = sites / n - 1;
  if (j < 1 || static_cast<long long>(j) * n > static_cast<long long>(sites) - n)
    throw std::invalid_argument("window too small for the requested block count");
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  check_rate(cross_p);
  if (!(plant_fraction >= 0.0 && plant_fraction <= 1.0))
    throw std::invalid_argument("plant fraction must lie in [0,1]");

  CouplingSweepReport rep;
  rep.sites = sites;
  rep.n = n;
  rep.j = j;
  rep.trials = trials;

  const std::size_t sz = static_cast<std::size_t>(sites);
  CoupledPair pair;
  pair.x.occ.resize(sz);
  pair.y.occ.resize(sz);
  std::vector<std::uint8_t> row(sz);
  std::vector<std::uint8_t> one(sz);

  for (int trial = 0; trial < trials; ++trial) {
    const auto r = static_cast<std::uint64_t>(trial);
    const RngStream rx(seed, Purpose::coupled_x, r);
    const RngStream ry(seed, Purpose::coupled_y, r);
    const RngStream rc(seed, Purpose::field, r);
    for (int i = 1; i <= sites; ++i) {
      const auto c = static_cast<std::uint64_t>(i);
      pair.x.occ[static_cast<std::size_t>(i - 1)] = rx.bernoulli(c, 0.5);
      pair.y.occ[static_cast<std::size_t>(i - 1)] = ry.bernoulli(c, 0.5);
      row[static_cast<std::size_t>(i - 1)] = rc.bernoulli(c, cross_p);
    }
    if (plant_fraction > 0.0) {
      const RngStream rp(seed, Purpose::plant, r);
      if (rp.uniform01(0) < plant_fraction) {
        const int block = static_cast<int>(rp.word(1) % static_cast<std::uint64_t>(j));
        const bool mirror = (rp.word(2) & 1u) != 0;
        const int x0 = 1 + block * n;
        for (int i = 0; i < n; ++i) {
          pair.x.occ[static_cast<std::size_t>(x0 - 1 + i)] = 0;
          pair.y.occ[static_cast<std::size_t>(x0 - 1 + i)] = 0;
        }
        auto& head = mirror ? pair.y.occ : pair.x.occ;
        auto& tail = mirror ? pair.x.occ : pair.y.occ;
        head[static_cast<std::size_t>(x0 - 1)] = 1;
        tail[static_cast<std::size_t>(x0 - 1 + n - 1)] = 1;
      }
    }

    const PatternScan scan = forbidden_pattern_scan(pair, n, row);
    rep.patterns_seen += static_cast<long long>(scan.f_locations.size());
    rep.events_seen += scan.a_count;

    const LemmaCheck chk = lemma_inequality_check(pair, row, n, j);
    if (!chk.holds) ++rep.violations;
    if (trace) {
      char buf[128];
      std::snprintf(buf, sizeof buf, "%d,%d,%d,%d,%d,%d,%d", trial, n, j, chk.delta_before,
                    chk.delta_after, chk.a_count, chk.holds ? 1 : 0);
      trace->emplace_back(buf);
    }

    if (audit_every > 0 && trial % audit_every == 0) {
      ++rep.audit_trials;
      CoupledPair cur = pair;
      const int prefix = j * n;
      int delta = discrepancy(cur, prefix);
      bool bad = false;
      std::fill(one.begin(), one.end(), 0);
      for (int x = sites; x >= 1; --x) {
        if (!row[static_cast<std::size_t>(x - 1)]) continue;
        one[static_cast<std::size_t>(x - 1)] = 1;
        cur = coupled_step(cur, one);
        one[static_cast<std::size_t>(x - 1)] = 0;
        const int after = discrepancy(cur, prefix);
        if (after > delta) bad = true;
        delta = after;
      }
      const CoupledPair whole = coupled_step(pair, row);
      if (!(cur.x == whole.x && cur.y == whole.y)) bad = true;
      if (bad) ++rep.audit_violations;
    }
  }
  return rep;
}

OracleReport oracle_exhaustive_chains(int side) {
  if (side < 1 || side * side > 16)
    throw std::invalid_argument("side*side must stay within 16 cells");
  const int cells = side * side;
  OracleReport rep;
  CrossField f(side, side);
  for (std::uint32_t mask = 0; mask < (1u << cells); ++mask) {
    fill_from_mask(f, mask);
    for (ModelKind k : {ModelKind::model1, ModelKind::model2}) {
      const int dp = longest_chain(f, k);
      const int br = longest_chain_brute(f, k);
      const int lc = static_cast<int>(build_lines(f, k).lines.size());
      ++rep.cases_checked;
      if (dp != br || dp != lc) ++rep.mismatches;
    }
  }
  return rep;
}

namespace {

bool trajectory_matches_occupancy(ModelKind k, const CrossField& f, const BoundaryData& b) {
  const std::vector<ParticleState> traj = evolve(k, f, b);
  const LineDiagram d = build_lines_boundary(f, b, k);
  for (int t = 0; t <= f.m; ++t)
    if (edge_occupancy(d, t) != traj[static_cast<std::size_t>(t)]) return false;
  return true;
}

}  // namespace

OracleReport oracle_dynamics_exhaustive(ModelKind k, int side, int max_sink) {
  if (side < 1 || side * side > 16)
    throw std::invalid_argument("side*side must stay within 16 cells");
  if (max_sink < 0) throw std::invalid_argument("max_sink must be nonnegative");
  const int cells = side * side;
  const int sink_cap = k == ModelKind::model1 ? std::min(max_sink, 1) : max_sink;
  OracleReport rep;
  CrossField f(side, side);
  BoundaryData b = zero_boundary(k, side, side);
  for (std::uint32_t mask = 0; mask < (1u << cells); ++mask) {
    fill_from_mask(f, mask);
    for (std::uint32_t src = 0; src < (1u << side); ++src) {
      for (int x = 1; x <= side; ++x)
        b.sources[static_cast<std::size_t>(x - 1)] =
            static_cast<std::uint8_t>((src >> (x - 1)) & 1u);
      // Odometer over sink rows, each digit in 0..sink_cap.
      std::fill(b.sinks.begin(), b.sinks.end(), 0);
      for (;;) {
        ++rep.cases_checked;
        if (!trajectory_matches_occupancy(k, f, b)) ++rep.mismatches;
        int pos = 0;
        while (pos < side && b.sinks[static_cast<std::size_t>(pos)] == sink_cap)
          b.sinks[static_cast<std::size_t>(pos++)] = 0;
        if (pos == side) break;
        ++b.sinks[static_cast<std::size_t>(pos)];
      }
    }
  }
  return rep;
}

OracleReport oracle_dynamics_random(ModelKind k, int side, int count, SeedSpec seed) {
  if (side < 1 || count < 1) throw std::invalid_argument("side and count must be positive");
  const double alpha = k == ModelKind::model1 ? 0.5 : 0.6;
  const double p = k == ModelKind::model1 ? 0.25 : 0.3;
  OracleReport rep;
  for (int i = 0; i < count; ++i) {
    const auto r = static_cast<std::uint64_t>(i);
    const CrossField f = sample_cross_field(side, side, 0.5, seed, r);
    const BoundaryData b = sample_boundary(k, side, side, alpha, p, seed, r);
    ++rep.cases_checked;
    if (!trajectory_matches_occupancy(k, f, b)) ++rep.mismatches;
  }
  return rep;
}

}  // namespace hammersley
