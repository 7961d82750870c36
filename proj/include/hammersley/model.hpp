#pragma once
// Model kinds, cross fields, boundary data, and their text formats.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hammersley {

enum class ModelKind : int { model1 = 1, model2 = 2 };

// Partial order on lattice points: Model 1 chains are strict in both
// coordinates, Model 2 chains are strict in x and weak in t.
inline bool precedes(ModelKind k, int x1, int t1, int x2, int t2) {
  if (k == ModelKind::model1) return x1 < x2 && t1 < t2;
  return x1 < x2 && t1 <= t2;
}

struct GridPoint {
  int x = 0;
  int t = 0;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

// Binary point configuration on {1..n} x {1..m}, stored row t=1 first.
// Coordinates are 1-based everywhere; t=0 and x=0 are boundary rows/columns
// and never live inside the field itself.
struct CrossField {
  int n = 0;
  int m = 0;
  std::vector<std::uint8_t> cells;

  CrossField() = default;
  CrossField(int n_, int m_);

  std::size_t idx(int x, int t) const {
    return static_cast<std::size_t>(t - 1) * static_cast<std::size_t>(n) +
           static_cast<std::size_t>(x - 1);
  }
  std::uint8_t at(int x, int t) const { return cells[idx(x, t)]; }
  void set(int x, int t, std::uint8_t v) { cells[idx(x, t)] = v; }
  long long count() const;

  friend bool operator==(const CrossField&, const CrossField&) = default;
};

// Boundary configuration: sources on the t=0 row, sinks on the x=0 column.
// Model 1 sinks are 0/1; Model 2 sinks are nonnegative multiplicities.
struct BoundaryData {
  ModelKind model = ModelKind::model1;
  std::vector<std::uint8_t> sources;  // index x-1, x in 1..n
  std::vector<int> sinks;             // index t-1, t in 1..m

  long long sink_total() const;
  int source_total() const;
};

BoundaryData zero_boundary(ModelKind model, int n, int m);

// Throws std::invalid_argument on shape or value violations.
void validate_boundary(const BoundaryData& b, int n, int m);

// Scale/intensity parameter bundle.
struct Params {
  double a = 1.0;
  double b = 1.0;
  double p = 0.0;
  double alpha = 1.0;
  double alpha_star = 0.0;

  // p in (0,1), a,b > 0, alpha in (0,1]; Model 2 needs alpha > p before
  // alpha_star can be derived.
  void validate(ModelKind model) const;
};

// --- text formats -----------------------------------------------------------
// Field: first line "n m", then m lines of n characters in {'.','x'}, row t=1
// first. Boundary: one line of n {0,1} sources, one line of m integer sinks.

std::string field_to_text(const CrossField& f);
CrossField field_from_text(std::istream& in);

std::string boundary_to_text(const BoundaryData& b);
BoundaryData boundary_from_text(std::istream& in, ModelKind model, int n, int m);

}  // namespace hammersley
