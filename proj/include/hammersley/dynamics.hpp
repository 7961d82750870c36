#pragma once
// Particle dynamics driven by cross rows. A cross at x moves the leftmost
// particle of [x,n] to x, creating one when the interval is empty. Model 1
// applies the row's crosses right-to-left and lets the sink (at most one
// unit) remove the leftmost particle afterwards; Model 2 removes sink_units
// leftmost particles first and then applies crosses left-to-right.

#include "hammersley/model.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hammersley {

using ParticleState = std::vector<std::uint8_t>;  // index x-1, sites 1..n

// Single cross action, pure form.
ParticleState act_cross(const ParticleState& s, int x);

// One time step under a full cross row.
ParticleState step(ModelKind k, const ParticleState& s,
                   const std::vector<std::uint8_t>& cross_row, int sink_units);

// Full trajectory X_0..X_m; X_0 is the source row.
std::vector<ParticleState> evolve(ModelKind k, const CrossField& f, const BoundaryData& b);

// One line per time slice, t=0 first, '.'/'o' per site.
std::string trajectory_to_text(const std::vector<ParticleState>& traj);

}  // namespace hammersley
