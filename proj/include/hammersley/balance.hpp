#pragma once
// Single-vertex balance: the deterministic input/output map at one lattice
// site and the exact-rational verification that the stationary boundary laws
// are preserved by its pushforward.

#include "hammersley/model.hpp"
#include "hammersley/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hammersley {

struct VertexIO {
  int x_in = 0;   // Ber(alpha) edge value (model 1/2: 0 or 1)
  int y_in = 0;   // sink-law edge value (model 1: 0/1, model 2: >= 0)
  int xi = 0;     // cross indicator
  int x_out = 0;
  int y_out = 0;
};

// The local update:
//   model 1: (x,y) -> (x,y) if x != y; (1,1) if x = y = 0 and xi = 1;
//            else (0,0)
//   model 2: (1,0) -> (1,0); otherwise (x,y) -> (xi, y - x + xi)
// Throws std::invalid_argument on domain violations.
VertexIO vertex_update(ModelKind k, int x_in, int y_in, int xi);

struct PushforwardAtom {
  int x = 0;
  int y = 0;
  Rational expected;
  Rational actual;
  bool ok = false;
};

struct PushforwardReport {
  bool exact_match = false;   // all comparable output atoms match exactly
  bool identity_ok = false;   // the alpha/alpha* compatibility identity
  std::vector<PushforwardAtom> atoms;
  std::string first_violation;
};

// Pushes the product law Ber(alpha) x sink-law(alpha*) x Ber(p) through
// vertex_update and compares, in exact rationals, against the same product
// law on the output pair. Model 2 sink values are enumerated up to y <= K;
// output atoms with y <= K-1 receive their full mass and are the ones
// compared. alpha_star_override replaces the stationary alpha* (negative
// controls); identity_ok checks p((1-a) + a(1-a*)) = a(1-a*) for model 2
// and the two-sided product identities for model 1.
PushforwardReport pushforward_check(ModelKind k, const Rational& alpha, const Rational& p,
                                    int K = 32,
                                    std::optional<Rational> alpha_star_override = std::nullopt);

}  // namespace hammersley
