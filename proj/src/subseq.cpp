#include "hammersley/subseq.hpp"

#include <algorithm>
#include <stdexcept>

namespace hammersley {

int longest_chain(const CrossField& f, ModelKind k) {
  // H[x] = longest chain inside {1..x} x {1..t}; hp is the previous row.
  std::vector<int> hp(static_cast<std::size_t>(f.n) + 1, 0);
  std::vector<int> h(static_cast<std::size_t>(f.n) + 1, 0);
  for (int t = 1; t <= f.m; ++t) {
    h[0] = 0;
    for (int x = 1; x <= f.n; ++x) {
      int best = std::max(h[static_cast<std::size_t>(x - 1)], hp[static_cast<std::size_t>(x)]);
      if (f.at(x, t)) {
        const int base = (k == ModelKind::model1) ? hp[static_cast<std::size_t>(x - 1)]
                                                  : h[static_cast<std::size_t>(x - 1)];
        best = std::max(best, 1 + base);
      }
      h[static_cast<std::size_t>(x)] = best;
    }
    std::swap(h, hp);
  }
  return hp[static_cast<std::size_t>(f.n)];
}

namespace {

// Depth-first walk over every chain extension; deliberately naive so it
// shares no machinery with the quadratic program it cross-checks.
int extend_chain(const std::vector<GridPoint>& pts, ModelKind k, const GridPoint& last) {
  int best = 0;
  for (const auto& q : pts)
    if (precedes(k, last.x, last.t, q.x, q.t))
      best = std::max(best, 1 + extend_chain(pts, k, q));
  return best;
}

}  // namespace

int longest_chain_brute(const CrossField& f, ModelKind k) {
  if (static_cast<long long>(f.n) * f.m > 25)
    throw std::invalid_argument("brute-force oracle limited to n*m <= 25");
  std::vector<GridPoint> pts;
  for (int t = 1; t <= f.m; ++t)
    for (int x = 1; x <= f.n; ++x)
      if (f.at(x, t)) pts.push_back({x, t});
  int best = 0;
  for (const auto& q : pts) best = std::max(best, 1 + extend_chain(pts, k, q));
  return best;
}

int constrained_chain_eps(const CrossField& f, const std::vector<std::uint8_t>& sources,
                          double eps, ModelKind k) {
  if (k != ModelKind::model1)
    throw std::invalid_argument("eps-constrained chains are defined for model 1 only");
  if (!(eps >= 0.0 && eps <= 1.0)) throw std::invalid_argument("eps must lie in [0,1]");
  if (static_cast<int>(sources.size()) != f.n)
    throw std::invalid_argument("sources length mismatch");
  const int cut = static_cast<int>(eps * f.n);
  int from_sources = 0;
  for (int x = 1; x <= std::min(cut, f.n); ++x)
    from_sources += sources[static_cast<std::size_t>(x - 1)];
  if (cut >= f.n) return from_sources;
  CrossField east(f.n - cut, f.m);
  for (int t = 1; t <= f.m; ++t)
    for (int x = cut + 1; x <= f.n; ++x)
      east.set(x - cut, t, f.at(x, t));
  return from_sources + longest_chain(east, k);
}

WeightField::WeightField(int n_, int m_) : n(n_), m(m_) {
  if (n_ < 1 || m_ < 1) throw std::invalid_argument("weight field dimensions must be positive");
  weights.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(m_), 0);
}

long long geometric_lpp(const WeightField& w) {
  std::vector<long long> g(static_cast<std::size_t>(w.n) + 1, 0);
  for (int t = 1; t <= w.m; ++t)
    for (int x = 1; x <= w.n; ++x)
      g[static_cast<std::size_t>(x)] =
          w.at(x, t) + std::max(g[static_cast<std::size_t>(x)], g[static_cast<std::size_t>(x - 1)]);
  return g[static_cast<std::size_t>(w.n)];
}

bool chain_result_valid(const ChainResult& r, const CrossField& f,
                        const BoundaryData& b, ModelKind k) {
  if (b.model != k) return false;
  if (static_cast<int>(r.witness.points.size()) != r.length) return false;

  std::size_t i = 0;
  const auto& pts = r.witness.points;
  int sink_picks = 0, source_picks = 0;

  // optional initial boundary run: sinks up the x=0 column xor sources along t=0
  if (i < pts.size() && pts[i].x == 0) {
    std::vector<int> used(b.sinks.size(), 0);
    int prev_t = 0;
    while (i < pts.size() && pts[i].x == 0) {
      const int t = pts[i].t;
      if (t < 1 || t > f.m) return false;
      if (t < prev_t) return false;
      if (k == ModelKind::model1 && t == prev_t) return false;
      prev_t = t;
      if (++used[static_cast<std::size_t>(t - 1)] > b.sinks[static_cast<std::size_t>(t - 1)])
        return false;
      ++sink_picks;
      ++i;
    }
  } else if (i < pts.size() && pts[i].t == 0) {
    int prev_x = 0;
    while (i < pts.size() && pts[i].t == 0) {
      const int x = pts[i].x;
      if (x < 1 || x > f.n) return false;
      if (x <= prev_x) return false;
      prev_x = x;
      if (!b.sources[static_cast<std::size_t>(x - 1)]) return false;
      ++source_picks;
      ++i;
    }
  }

  // interior picks: chain-ordered distinct field points, compatible with the
  // last boundary pick
  GridPoint prev{-1, -1};
  if (i > 0) prev = pts[i - 1];
  for (; i < pts.size(); ++i) {
    const auto& q = pts[i];
    if (q.x < 1 || q.x > f.n || q.t < 1 || q.t > f.m) return false;
    if (!f.at(q.x, q.t)) return false;
    if (prev.x >= 0 && !precedes(k, prev.x, prev.t, q.x, q.t)) return false;
    prev = q;
  }

  return sink_picks == r.d_sinks && source_picks == r.d_sources;
}

}  // namespace hammersley
