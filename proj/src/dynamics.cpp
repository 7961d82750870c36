#include "hammersley/dynamics.hpp"

#include <stdexcept>

namespace hammersley {

ParticleState act_cross(const ParticleState& s, int x) {
  const int n = static_cast<int>(s.size());
  if (x < 1 || x > n) throw std::invalid_argument("cross position out of range");
  ParticleState out = s;
  for (int q = x; q <= n; ++q)
    if (out[static_cast<std::size_t>(q - 1)]) {
      out[static_cast<std::size_t>(q - 1)] = 0;
      out[static_cast<std::size_t>(x - 1)] = 1;
      return out;
    }
  out[static_cast<std::size_t>(x - 1)] = 1;
  return out;
}

namespace {

void remove_leftmost(ParticleState& s, int units) {
  int x = 0;
  const int n = static_cast<int>(s.size());
  while (units > 0) {
    while (x < n && !s[static_cast<std::size_t>(x)]) ++x;
    if (x == n) return;  // nothing left to remove
    s[static_cast<std::size_t>(x)] = 0;
    --units;
  }
}

// right-to-left sweep; equals folding act_cross over crosses in decreasing x
void apply_crosses_desc(ParticleState& s, const std::vector<std::uint8_t>& row) {
  const int n = static_cast<int>(s.size());
  int leftmost = 0;  // leftmost particle in [x, n] during the sweep, 0 if none
  for (int x = n; x >= 1; --x) {
    if (s[static_cast<std::size_t>(x - 1)]) leftmost = x;
    if (row[static_cast<std::size_t>(x - 1)]) {
      if (leftmost) s[static_cast<std::size_t>(leftmost - 1)] = 0;
      s[static_cast<std::size_t>(x - 1)] = 1;
      leftmost = x;
    }
  }
}

// left-to-right sweep; equals folding act_cross over crosses in increasing x
void apply_crosses_asc(ParticleState& s, const std::vector<std::uint8_t>& row) {
  const int n = static_cast<int>(s.size());
  int resume = 1;  // sites in [previous x+1, resume) are known empty
  for (int x = 1; x <= n; ++x) {
    if (!row[static_cast<std::size_t>(x - 1)]) continue;
    int q = 0;
    for (int sct = std::max(x, resume); sct <= n; ++sct)
      if (s[static_cast<std::size_t>(sct - 1)]) {
        q = sct;
        break;
      }
    if (q) {
      s[static_cast<std::size_t>(q - 1)] = 0;
      s[static_cast<std::size_t>(x - 1)] = 1;
      resume = q + 1;
    } else {
      s[static_cast<std::size_t>(x - 1)] = 1;
      resume = n + 1;
    }
  }
}

}  // namespace

ParticleState step(ModelKind k, const ParticleState& s,
                   const std::vector<std::uint8_t>& cross_row, int sink_units) {
  if (cross_row.size() != s.size()) throw std::invalid_argument("cross row length mismatch");
  if (sink_units < 0) throw std::invalid_argument("sink units must be nonnegative");
  if (k == ModelKind::model1 && sink_units > 1)
    throw std::invalid_argument("model 1 sinks carry at most one unit");
  ParticleState out = s;
  if (k == ModelKind::model1) {
    apply_crosses_desc(out, cross_row);
    remove_leftmost(out, sink_units);
  } else {
    remove_leftmost(out, sink_units);
    apply_crosses_asc(out, cross_row);
  }
  return out;
}

std::vector<ParticleState> evolve(ModelKind k, const CrossField& f, const BoundaryData& b) {
  if (b.model != k) throw std::invalid_argument("boundary model mismatch");
  validate_boundary(b, f.n, f.m);
  std::vector<ParticleState> traj;
  traj.reserve(static_cast<std::size_t>(f.m) + 1);
  traj.push_back(b.sources);
  std::vector<std::uint8_t> row(static_cast<std::size_t>(f.n));
  for (int t = 1; t <= f.m; ++t) {
    for (int x = 1; x <= f.n; ++x) row[static_cast<std::size_t>(x - 1)] = f.at(x, t);
    traj.push_back(step(k, traj.back(), row, b.sinks[static_cast<std::size_t>(t - 1)]));
  }
  return traj;
}

std::string trajectory_to_text(const std::vector<ParticleState>& traj) {
  std::string out;
  for (const auto& s : traj) {
    for (auto v : s) out += v ? 'o' : '.';
    out += '\n';
  }
  return out;
}

}  // namespace hammersley
