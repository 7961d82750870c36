#include "hammersley/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace hammersley {

namespace {

void check_alpha_p(ModelKind k, double alpha, double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must lie in (0,1)");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in (0,1]");
  if (k == ModelKind::model2 && !(alpha > p))
    throw std::invalid_argument("model 2 requires alpha > p");
}

}  // namespace

double alpha_star(ModelKind k, double alpha, double p) {
  check_alpha_p(k, alpha, p);
  if (k == ModelKind::model1) return p * (1.0 - alpha) / (alpha + p * (1.0 - alpha));
  return (alpha - p) / (alpha * (1.0 - p));
}

Rational alpha_star_exact(ModelKind k, const Rational& alpha, const Rational& p) {
  if (!(p > 0 && p < 1)) throw std::invalid_argument("p must lie in (0,1)");
  if (!(alpha > 0 && alpha <= 1)) throw std::invalid_argument("alpha must lie in (0,1]");
  if (k == ModelKind::model1) return p * (1 - alpha) / (alpha + p * (1 - alpha));
  if (!(alpha > p)) throw std::invalid_argument("model 2 requires alpha > p");
  return (alpha - p) / (alpha * (1 - p));
}

OptimalBoundary optimal_boundary(ModelKind k, double a, double b, double p) {
  if (!(a > 0.0 && b > 0.0)) throw std::invalid_argument("scales must be positive");
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must lie in (0,1)");
  OptimalBoundary ob;
  if (k == ModelKind::model1) {
    if (!(p < std::min(a / b, b / a)))
      throw std::invalid_argument("trivial regime: p >= min{a/b, b/a}");
    ob.alpha = (std::sqrt(p * b / a) - p) / (1.0 - p);
    ob.alpha_star = (std::sqrt(p * a / b) - p) / (1.0 - p);
  } else {
    if (!(p < a / (a + b)))
      throw std::invalid_argument("trivial regime: p >= a/(a+b)");
    ob.alpha = p + std::sqrt((b / a) * p * (1.0 - p));
    ob.alpha_star = alpha_star(ModelKind::model2, ob.alpha, p);
  }
  return ob;
}

CrossField sample_cross_field(int n, int m, double p, SeedSpec seed, std::uint64_t replica) {
  if (n < 1 || m < 1) throw std::invalid_argument("field dimensions must be positive");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0,1]");
  CrossField f(n, m);
  const RngStream rs(seed, Purpose::field, replica);
  for (int t = 1; t <= m; ++t)
    for (int x = 1; x <= n; ++x)
      if (rs.bernoulli(RngStream::cell(x, t), p)) f.set(x, t, 1);
  return f;
}

BoundaryData sample_boundary(ModelKind k, int n, int m, double alpha, double p,
                             SeedSpec seed, std::uint64_t replica, double alpha_star_override) {
  if (n < 1 || m < 1) throw std::invalid_argument("boundary dimensions must be positive");
  double astar;
  if (alpha_star_override >= 0.0) {
    if (!(alpha_star_override > 0.0 && alpha_star_override < 1.0))
      throw std::invalid_argument("alpha* override must lie in (0,1)");
    astar = alpha_star_override;
  } else {
    astar = alpha_star(k, alpha, p);
  }
  BoundaryData b = zero_boundary(k, n, m);
  const RngStream src(seed, Purpose::sources, replica);
  const RngStream snk(seed, Purpose::sinks, replica);
  for (int x = 1; x <= n; ++x)
    b.sources[static_cast<std::size_t>(x - 1)] = src.bernoulli(static_cast<std::uint64_t>(x), alpha);
  for (int t = 1; t <= m; ++t) {
    if (k == ModelKind::model1)
      b.sinks[static_cast<std::size_t>(t - 1)] = snk.bernoulli(static_cast<std::uint64_t>(t), astar);
    else
      b.sinks[static_cast<std::size_t>(t - 1)] =
          static_cast<int>(snk.geometric_count(static_cast<std::uint64_t>(t), 1.0 - astar));
  }
  return b;
}

}  // namespace hammersley
