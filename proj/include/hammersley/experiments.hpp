#pragma once
// Closed-form limits, Monte Carlo estimators, exact small-grid expectations,
// stationarity test batteries, the Ulam discretization, and the exhaustive
// oracle suites shared by the CLI and the acceptance harness.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hammersley/model.hpp"
#include "hammersley/rational.hpp"
#include "hammersley/rng.hpp"

namespace hammersley {

// Tolerances and gates, pinned once.
inline constexpr double kLlnTolerance = 0.02;   // |mean(L/n) - limit| at n = 2000
inline constexpr double kLppTolerance = 0.1;    // |mean(G/n) - limit| at n = 1000
inline constexpr double kSigmaGate = 5.0;       // statistical checks pass within 5 sigma
inline constexpr double kUlamDirectLo = 1.90;   // band for the direct Poisson estimate
inline constexpr double kUlamDirectHi = 2.00;

// Law-of-large-numbers limit of L/n on floor(an) x floor(bn) Bernoulli(p) fields:
//   model 1: sqrt(p)(2 sqrt(ab) - (a+b) sqrt(p)) / (1-p)   if p < min{a/b, b/a},
//            min{a,b} otherwise
//   model 2: 2 sqrt(ab p(1-p)) + (a-b) p                   if p < a/(a+b),
//            a otherwise
double limit_value(ModelKind k, double a, double b, double p);

// Limit of the geometric last-passage time over weak chains: 2 sqrt(p)/(1 - sqrt(p)).
double limit_value_lpp(double p);

// Stationary upper bound rate for model 1 on an (a n) x (b n) box with source
// intensity alpha: a*alpha + b*p(1-alpha)/(alpha + p(1-alpha)).
double phi1(double a, double b, double alpha, double p);

struct ExperimentReport {
  std::string model_label;  // "1", "2", "lpp", "ulam-k<k>", "poisson"
  double a = 0.0;
  double b = 0.0;
  double p = 0.0;
  int n = 0;
  int reps = 0;
  std::uint64_t seed = 0;
  double estimate = 0.0;
  double std_error = 0.0;
  double target = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// CSV plumbing; the header matches the report fields one-to-one.
std::string csv_header();
std::string csv_row(const ExperimentReport& r);

// Mean of longest_chain / n over reps independent floor(an) x floor(bn) fields,
// judged against limit_value with kLlnTolerance.
ExperimentReport mc_estimate(ModelKind k, double a, double b, double p, int n, int reps,
                             SeedSpec seed);

// Mean of geometric_lpp / n over reps independent n x m Geometric(p) weight
// fields, judged against limit_value_lpp with kLppTolerance.
ExperimentReport lpp_estimate(double p, int n, int m, int reps, SeedSpec seed);

// Exhaustive expectation of longest_chain over all 2^(nm) fields, exact in
// rationals.  Guarded to n*m <= 16.
Rational exact_expectation_small(ModelKind k, int n, int m, const Rational& p);

struct StationarityReport {
  ModelKind model = ModelKind::model1;
  int n = 0;
  int m = 0;
  double alpha = 0.0;
  double p = 0.0;
  int replicas = 0;
  bool slice_means_ok = false;    // every time slice mean within 5 sigma of n*alpha
  bool top_moments_ok = false;    // final-slice mean and variance vs Binomial(n, alpha)
  bool count_identity_ok = false; // lines = top exits + sinks, every replica
  bool upper_bound_ok = false;    // interior chain <= boundary chain, every replica
  int worst_slice_t = 0;
  double worst_slice_sigmas = 0.0;
  double top_mean = 0.0;
  double top_mean_sigmas = 0.0;
  double top_var = 0.0;
  double top_var_sigmas = 0.0;
  bool pass() const {
    return slice_means_ok && top_moments_ok && count_identity_ok && upper_bound_ok;
  }
};

// Evolves reps sampled stationary boundaries and checks slice occupation means,
// the Binomial(n, alpha) top-exit moments, and the per-replica count identity.
// alpha_star_override (in (0,1)) swaps in a non-stationary sink intensity.
StationarityReport stationarity_test(ModelKind k, int n, int m, double alpha, double p,
                                     int replicas, SeedSpec seed,
                                     double alpha_star_override = -1.0);

// Longest strictly-increasing subsequence (both coordinates strict) of a planar
// point set, O(N log N).
int lis_strict(std::vector<std::pair<double, double>> pts);

// Discretized lower bound: longest_chain (model 1) on a round(k sqrt(n)) square
// grid with p_k = 1 - exp(-1/k^2), reporting L / sqrt(n) against the closed
// form 2k sqrt(p_k)/(1 + sqrt(p_k)).
ExperimentReport ulam_discretized(int k, double intensity, int reps, SeedSpec seed);

// Direct estimate: Poisson(intensity) uniform points in the unit square,
// reporting LIS / sqrt(intensity); pass iff within [kUlamDirectLo, kUlamDirectHi].
ExperimentReport ulam_direct(double intensity, int reps, SeedSpec seed);

struct UlamReport {
  ExperimentReport discretized;
  ExperimentReport direct;
  bool pass() const { return discretized.pass && direct.pass; }
};

UlamReport ulam_estimate(int k, double intensity, int reps, SeedSpec seed);

struct DecayReport {
  std::vector<int> sizes;
  std::vector<double> means;  // mean d_sources / n per size
  bool strictly_decreasing = false;
};

// Mean fraction of sources consumed by the canonical optimal path at the
// optimal stationary boundary, across box sizes.
DecayReport source_usage_decay(ModelKind k, double a, double b, double p,
                               const std::vector<int>& sizes, int reps, SeedSpec seed);

struct CouplingSweepReport {
  int sites = 0;
  int n = 0;
  int j = 0;
  int trials = 0;
  int violations = 0;        // lemma inequality failures
  int audit_trials = 0;
  int audit_violations = 0;  // prefix discrepancy increased under a single cross
  long long patterns_seen = 0;
  long long events_seen = 0;
  bool ok() const { return trials > 0 && violations == 0 && audit_violations == 0; }
};

// Randomized one-step inequality sweep. Per trial: an i.i.d. Ber(1/2) coupled
// pair (a plant_fraction share carries a forbidden pattern at a random block),
// a Ber(cross_p) cross row, and lemma_inequality_check at (n, j); j <= 0 picks
// the maximal interior-guarded value. Every audit_every-th trial replays the
// row one cross at a time, right to left, requiring the prefix discrepancy
// never to increase and the replay to land on the one-shot step.
// trace, when given, receives "trial,n,j,delta_before,delta_after,a_count,holds" rows.
CouplingSweepReport coupling_sweep(int sites, int n, int j, int trials, double cross_p,
                                   double plant_fraction, int audit_every, SeedSpec seed,
                                   std::vector<std::string>* trace = nullptr);

struct OracleReport {
  long long cases_checked = 0;
  long long mismatches = 0;
  bool ok() const { return cases_checked > 0 && mismatches == 0; }
};

// All 2^(side*side) fields, both models: line count == DP length == brute length.
OracleReport oracle_exhaustive_chains(int side);

// All fields on a side x side grid crossed with every boundary whose source
// values are 0/1 and sink values are <= max_sink (model 1 sinks stay 0/1):
// evolve slices == edge occupancy at every time.
OracleReport oracle_dynamics_exhaustive(ModelKind k, int side, int max_sink);

// Random seeded instances of the same dynamics/occupancy equivalence.
OracleReport oracle_dynamics_random(ModelKind k, int side, int count, SeedSpec seed);

}  // namespace hammersley
