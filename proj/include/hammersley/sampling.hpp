#pragma once
// Stationary boundary parameters and seeded sampling of fields/boundaries.

#include "hammersley/model.hpp"
#include "hammersley/rational.hpp"
#include "hammersley/rng.hpp"

namespace hammersley {

// Sink intensity that makes the (alpha, alpha_star) boundary stationary:
//   model 1: alpha* = p(1-alpha) / (alpha + p(1-alpha))
//   model 2: alpha* = (alpha - p) / (alpha(1-p)),   requires alpha > p
// Domain: alpha in (0,1] (model 2 additionally alpha > p), p in (0,1).
double alpha_star(ModelKind k, double alpha, double p);
Rational alpha_star_exact(ModelKind k, const Rational& alpha, const Rational& p);

struct OptimalBoundary {
  double alpha = 0.0;
  double alpha_star = 0.0;
};

// The boundary intensities that make the stationary upper bound match the
// law-of-large-numbers limit for an (an) x (bn) box:
//   model 1: alpha = (sqrt(p b/a) - p)/(1-p), alpha* = (sqrt(p a/b) - p)/(1-p),
//            valid for p < min{a/b, b/a}
//   model 2: alpha = p + sqrt((b/a) p (1-p)), valid for p < a/(a+b)
// Outside those regimes the limit is trivial and no interior optimum exists;
// throws std::invalid_argument("trivial regime").
OptimalBoundary optimal_boundary(ModelKind k, double a, double b, double p);

// i.i.d. Bernoulli(p) cells, keyed per cell; deterministic given seed/replica.
CrossField sample_cross_field(int n, int m, double p, SeedSpec seed,
                              std::uint64_t replica = 0);

// Sources i.i.d. Ber(alpha); sinks i.i.d. Ber(alpha*) for model 1 and
// Geometric(alpha*)-1 for model 2 (P(k) = alpha*(1-alpha*)^k).
// alpha_star_override replaces the stationary alpha* with an arbitrary sink
// intensity in (0,1); used to build deliberately non-stationary boundaries.
BoundaryData sample_boundary(ModelKind k, int n, int m, double alpha, double p,
                             SeedSpec seed, std::uint64_t replica = 0,
                             double alpha_star_override = -1.0);

}  // namespace hammersley
