#pragma once
// Longest-chain computations: quadratic dynamic programs, an exponential
// enumeration oracle, boundary-augmented variants with canonical witnesses,
// the eps-constrained split, and geometric last-passage percolation.

#include "hammersley/model.hpp"

#include <cstdint>
#include <vector>

namespace hammersley {

// A chain witness. Interior picks have x,t >= 1; a sink pick is (0,t) and a
// source pick is (x,0). Picks are listed in path order, which coincides with
// (t,x)-lexicographic order: an optional initial run of sink picks or source
// picks (never both), then interior points.
struct Path {
  std::vector<GridPoint> points;
};

struct ChainResult {
  int length = 0;
  Path witness;
  int d_sources = 0;  // source picks on the witness
  int d_sinks = 0;    // sink picks on the witness (with multiplicity)
};

// Longest chain through the field's points under the model order. O(nm).
int longest_chain(const CrossField& f, ModelKind k);

// Independent oracle: recursive enumeration of every maximal chain, no
// memoization, no prefix maxima. Guarded to n*m <= 25 cells.
int longest_chain_brute(const CrossField& f, ModelKind k);

// Longest chain allowed to start with boundary picks: an initial run of sink
// picks up the x=0 column (each site usable up to its multiplicity) or an
// initial run of source picks along the t=0 row. Returns the canonical
// maximizing witness (see optimal_path). O(nm).
ChainResult longest_chain_boundary(const CrossField& f, const BoundaryData& b, ModelKind k);

// Length-only variant of longest_chain_boundary; same value, O(m) extra space.
int boundary_chain_length(const CrossField& f, const BoundaryData& b, ModelKind k);

// Canonical maximizer: among all maximizing witnesses, the lexicographically
// smallest sequence of picks ordered by (t, x).
ChainResult optimal_path(const CrossField& f, const BoundaryData& b, ModelKind k);

// Longest chain whose source picks are confined to columns <= floor(n*eps)
// and whose interior points are confined to columns > floor(n*eps).
// Model 1 only.
int constrained_chain_eps(const CrossField& f, const std::vector<std::uint8_t>& sources,
                          double eps, ModelKind k);

// Nonnegative integer weights on {1..n} x {1..m}, stored row t=1 first.
struct WeightField {
  int n = 0;
  int m = 0;
  std::vector<int> weights;

  WeightField() = default;
  WeightField(int n_, int m_);
  std::size_t idx(int x, int t) const {
    return static_cast<std::size_t>(t - 1) * static_cast<std::size_t>(n) +
           static_cast<std::size_t>(x - 1);
  }
  int at(int x, int t) const { return weights[idx(x, t)]; }
  void set(int x, int t, int v) { weights[idx(x, t)] = v; }
};

// Last-passage time: maximal total weight over monotone (weakly increasing
// in both coordinates) point sequences. O(nm).
long long geometric_lpp(const WeightField& w);

// Full validity check of a ChainResult against its instance: chain order,
// boundary-run shape, multiplicity budgets, and score recomputation.
bool chain_result_valid(const ChainResult& r, const CrossField& f,
                        const BoundaryData& b, ModelKind k);

}  // namespace hammersley
