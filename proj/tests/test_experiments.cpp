#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hammersley/experiments.hpp"
#include "hammersley/rational.hpp"
#include "hammersley/sampling.hpp"
#include "hammersley/subseq.hpp"

using namespace hammersley;

TEST_CASE("closed-form limits at the worked parameter points") {
  CHECK(limit_value(ModelKind::model1, 1, 1, 0.25) == doctest::Approx(2.0 / 3).epsilon(1e-12));
  CHECK(limit_value(ModelKind::model1, 1, 2, 0.6) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(limit_value(ModelKind::model2, 1, 1, 0.25) ==
        doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-12));
  CHECK(limit_value_lpp(0.25) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(limit_value_lpp(1.0 / 9) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("the limit is continuous across the regime boundary") {
  const std::vector<std::pair<long, long>> pairs = {{1, 2}, {2, 3}, {1, 4}, {3, 5}, {2, 5},
                                                    {5, 7}, {3, 4}, {1, 3}, {4, 7}, {2, 7}};
  for (const auto& [an, bn] : pairs) {
    const Rational a(an), b(bn);
    const Rational r = an < bn ? a : b;
    const Rational s = an < bn ? b : a;
    {
      // strict-order model at p0 = min{a/b, b/a}: sqrt(a b p0) = r exactly,
      // so the nontrivial formula collapses to min{a,b}
      const Rational p0 = r / s;
      CHECK(a * b * p0 == r * r);
      CHECK(2 * r - (a + b) * p0 == r * (1 - p0));
    }
    {
      // weak-order model at p0 = a/(a+b): sqrt(a b p0 (1-p0)) = ab/(a+b)
      const Rational p0 = a / (a + b);
      CHECK(a * b * p0 * (1 - p0) == (a * b / (a + b)) * (a * b / (a + b)));
      CHECK(2 * (a * b / (a + b)) + (a - b) * p0 == a);
    }
    // the double implementation agrees from both sides of each boundary
    const double af = static_cast<double>(an), bf = static_cast<double>(bn);
    const double p1 = to_double(r / s);
    CHECK(limit_value(ModelKind::model1, af, bf, p1 - 1e-9) ==
          doctest::Approx(std::min(af, bf)).epsilon(1e-4));
    CHECK(limit_value(ModelKind::model1, af, bf, p1 + 1e-9) ==
          doctest::Approx(std::min(af, bf)).epsilon(1e-4));
    const double p2 = af / (af + bf);
    CHECK(limit_value(ModelKind::model2, af, bf, p2 - 1e-9) == doctest::Approx(af).epsilon(1e-4));
    CHECK(limit_value(ModelKind::model2, af, bf, p2 + 1e-9) == doctest::Approx(af).epsilon(1e-4));
  }
}

TEST_CASE("the stationary upper bound is minimized at the optimal intensity") {
  CHECK(phi1(1, 1, 1.0 / 3, 0.25) == doctest::Approx(2.0 / 3).epsilon(1e-12));
  CHECK(phi1(1, 1, 1.0, 0.37) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(phi1(2, 3, 1.0, 0.37) == doctest::Approx(2.0).epsilon(1e-12));

  std::mt19937 gen(71);
  std::uniform_real_distribution<double> scale(0.5, 2.0);
  int tested = 0;
  while (tested < 20) {
    const double a = scale(gen), b = scale(gen);
    const double cap = std::min(a / b, b / a);
    std::uniform_real_distribution<double> pd(0.02, 0.9 * cap);
    const double p = pd(gen);
    const double alpha_opt = optimal_boundary(ModelKind::model1, a, b, p).alpha;
    double best = 1e18, arg = -1.0;
    for (int i = 1; i <= 99; ++i) {
      const double alpha = i / 100.0;
      const double v = phi1(a, b, alpha, p);
      if (v < best) {
        best = v;
        arg = alpha;
      }
    }
    CHECK(std::abs(arg - alpha_opt) <= 0.015);
    CHECK(best >= limit_value(ModelKind::model1, a, b, p) - 1e-9);
    ++tested;
  }
}

TEST_CASE("exact small-grid expectations") {
  CHECK(exact_expectation_small(ModelKind::model1, 2, 2, Rational(1, 2)) == Rational(19, 16));
  CHECK(exact_expectation_small(ModelKind::model2, 2, 2, Rational(1, 2)) == Rational(23, 16));
  CHECK(exact_expectation_small(ModelKind::model1, 3, 2, Rational(1)) == Rational(2));
  CHECK(exact_expectation_small(ModelKind::model2, 3, 2, Rational(1)) == Rational(3));
  CHECK_THROWS_AS(exact_expectation_small(ModelKind::model1, 5, 4, Rational(1, 2)),
                  std::invalid_argument);
}

TEST_CASE("monte carlo agrees with the exact tiny expectation") {
  const ExperimentReport r = mc_estimate(ModelKind::model1, 1, 1, 0.5, 2, 20000, SeedSpec{501});
  const double exact = to_double(Rational(19, 16)) / 2.0;  // estimate is L/n with n = 2
  CHECK(std::abs(r.estimate - exact) <= 5.0 * r.std_error);
  CHECK(r.n == 2);
  CHECK(r.reps == 20000);
  CHECK(r.pass == (std::abs(r.estimate - r.target) <= r.tolerance));
}

TEST_CASE("reports serialize to the pinned csv schema") {
  CHECK(csv_header() == "model,a,b,p,n,reps,seed,estimate,stderr,target,tolerance,pass");
  ExperimentReport r;
  r.model_label = "1";
  r.a = 1;
  r.b = 1;
  r.p = 0.25;
  r.n = 10;
  r.reps = 5;
  r.seed = 7;
  r.estimate = 0.5;
  r.std_error = 0.01;
  r.target = 0.5;
  r.tolerance = 0.02;
  r.pass = true;
  CHECK(csv_row(r) == "1,1,1,0.25,10,5,7,0.5,0.01,0.5,0.02,1");
}

TEST_CASE("estimates are bit-identical across repeat runs") {
  const ExperimentReport a = mc_estimate(ModelKind::model2, 1, 1, 0.25, 40, 50, SeedSpec{502});
  const ExperimentReport b = mc_estimate(ModelKind::model2, 1, 1, 0.25, 40, 50, SeedSpec{502});
  CHECK(a.estimate == b.estimate);
  CHECK(a.std_error == b.std_error);
  const ExperimentReport c = lpp_estimate(0.25, 50, 50, 20, SeedSpec{503});
  const ExperimentReport d = lpp_estimate(0.25, 50, 50, 20, SeedSpec{503});
  CHECK(c.estimate == d.estimate);
}

TEST_CASE("strict planar subsequences match the chain oracle") {
  CHECK(lis_strict({}) == 0);
  CHECK(lis_strict({{0.3, 0.7}}) == 1);
  CHECK(lis_strict({{0.1, 0.1}, {0.2, 0.2}, {0.3, 0.3}}) == 3);
  CHECK(lis_strict({{0.1, 0.3}, {0.2, 0.2}, {0.3, 0.1}}) == 1);

  std::mt19937 gen(72);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<int> coord(1, 5);
    CrossField f(5, 5);
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i < 8; ++i) {
      const int x = coord(gen), t = coord(gen);
      if (f.at(x, t)) continue;
      f.set(x, t, 1);
      pts.push_back({static_cast<double>(x), static_cast<double>(t)});
    }
    CHECK(lis_strict(pts) == longest_chain_brute(f, ModelKind::model1));
  }
}

TEST_CASE("stationarity battery verdicts") {
  const StationarityReport ok =
      stationarity_test(ModelKind::model1, 10, 10, 1.0 / 3, 0.25, 4000, SeedSpec{504});
  CHECK(ok.slice_means_ok);
  CHECK(ok.top_moments_ok);
  CHECK(ok.count_identity_ok);
  CHECK(ok.upper_bound_ok);
  CHECK(ok.pass());

  const StationarityReport bad =
      stationarity_test(ModelKind::model1, 20, 20, 1.0 / 3, 0.25, 4000, SeedSpec{505}, 0.9);
  CHECK_FALSE(bad.slice_means_ok);
  CHECK_FALSE(bad.pass());
}

TEST_CASE("discretized targets rise toward the continuum constant") {
  double prev = 0.0;
  for (int k : {2, 5, 10, 20, 50}) {
    const ExperimentReport r = ulam_discretized(k, 100.0, 1, SeedSpec{506});
    CHECK(r.target > prev);
    CHECK(r.target < 2.0);
    prev = r.target;
  }
  const ExperimentReport k10 = ulam_discretized(10, 100.0, 1, SeedSpec{506});
  CHECK(k10.target == doctest::Approx(1.814).epsilon(3e-4));
  CHECK(k10.model_label == "ulam-k10");
}

TEST_CASE("direct scatter estimate carries the acceptance band") {
  const ExperimentReport r = ulam_direct(400.0, 5, SeedSpec{507});
  CHECK(r.model_label == "poisson");
  CHECK(r.target == doctest::Approx(0.5 * (kUlamDirectLo + kUlamDirectHi)));
  CHECK(r.tolerance == doctest::Approx(0.5 * (kUlamDirectHi - kUlamDirectLo)));
  CHECK(r.estimate > 1.0);
  CHECK(r.estimate < 2.2);
}

TEST_CASE("source usage report structure") {
  const DecayReport r =
      source_usage_decay(ModelKind::model1, 1, 1, 0.25, {30, 60}, 40, SeedSpec{508});
  REQUIRE(r.sizes == std::vector<int>{30, 60});
  REQUIRE(r.means.size() == 2);
  for (double m : r.means) {
    CHECK(m >= 0.0);
    CHECK(m <= 1.0);
  }
}

TEST_CASE("exhaustive oracle batteries on small grids") {
  const OracleReport chains = oracle_exhaustive_chains(2);
  CHECK(chains.ok());
  CHECK(chains.cases_checked == 32);  // 16 fields, both models

  const OracleReport dyn = oracle_dynamics_exhaustive(ModelKind::model1, 2, 1);
  CHECK(dyn.ok());
  const OracleReport dyn2 = oracle_dynamics_exhaustive(ModelKind::model2, 2, 1);
  CHECK(dyn2.ok());

  CHECK(oracle_dynamics_random(ModelKind::model1, 6, 50, SeedSpec{509}).ok());
  CHECK(oracle_dynamics_random(ModelKind::model2, 6, 50, SeedSpec{509}).ok());
}
