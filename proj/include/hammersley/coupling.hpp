#pragma once
// Windowed infinite-line dynamics and the two-trajectory coupling. Both
// components of a pair evolve under one shared cross row; discrepancy
// counting, forbidden-pattern scans, and the one-step inequality
//   Delta_{jn}(after) <= Delta_{jn}(before) + 1 - 2 A(n,j)
// live here.

#include "hammersley/model.hpp"

#include <cstdint>
#include <vector>

namespace hammersley {

// Sites 1..N with a conceptual permanent wall particle at site 0; the wall
// never moves, so every site always has a particle somewhere to its left.
struct WindowState {
  std::vector<std::uint8_t> occ;

  int size() const { return static_cast<int>(occ.size()); }
  friend bool operator==(const WindowState&, const WindowState&) = default;
};

struct CoupledPair {
  WindowState x;
  WindowState y;
};

// Crosses act right-to-left by the model 1 rule; no sinks, wall untouched.
WindowState z_step(const WindowState& s, const std::vector<std::uint8_t>& cross_row);

// z_step on both components with the same crosses.
CoupledPair coupled_step(const CoupledPair& pair, const std::vector<std::uint8_t>& cross_row);

// Delta_k: disagreement count over sites 1..k.
int discrepancy(const CoupledPair& pair, int k);

struct PatternScan {
  std::vector<int> f_locations;  // pattern locations among {1, 1+n, 1+2n, ...}
  int a_count = 0;               // members where the cross event E holds
};

// A forbidden pattern at x spans sites x..x+n-1 with components
// (1,0,...,0)/(0,...,0,1) or the mirror; E_{x,n} asks for a cross at x and
// none at x+1..x+n-1. Locations run over {1, 1+n, ...} with span inside 1..N.
PatternScan forbidden_pattern_scan(const CoupledPair& pair, int n,
                                   const std::vector<std::uint8_t>& cross_row);

struct LemmaCheck {
  int delta_before = 0;
  int delta_after = 0;
  int a_count = 0;
  bool holds = false;
};

// One coupled step, evaluated over the prefix of length j*n with the pattern
// scan restricted to the j block starts. Requires j >= 1 and j*n <= N-n.
LemmaCheck lemma_inequality_check(const CoupledPair& pair,
                                  const std::vector<std::uint8_t>& cross_row, int n, int j);

}  // namespace hammersley
