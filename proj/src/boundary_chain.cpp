// Boundary-augmented longest chains.
//
// A valid path may open with a run of sink picks up the x=0 column or a run
// of source picks along the t=0 row (never both), then climbs through
// interior points under the model order. Two independent routes compute the
// value: a forward prefix-maximum program (boundary_chain_length) and a
// suffix value-to-go table driving the canonical greedy walk (optimal_path).
// optimal_path cross-checks the two and returns, among all maximizers, the
// lexicographically smallest pick sequence ordered by (t, x); path order and
// (t, x) order coincide for valid paths, sources sorting first via t = 0.

#include "hammersley/subseq.hpp"

#include <algorithm>
#include <stdexcept>

namespace hammersley {

namespace {

void check_instance(const CrossField& f, const BoundaryData& b, ModelKind k) {
  if (b.model != k) throw std::invalid_argument("boundary model mismatch");
  validate_boundary(b, f.n, f.m);
}

int sink_at(const BoundaryData& b, int t) { return b.sinks[static_cast<std::size_t>(t - 1)]; }
int src_at(const BoundaryData& b, int x) { return b.sources[static_cast<std::size_t>(x - 1)]; }

}  // namespace

int boundary_chain_length(const CrossField& f, const BoundaryData& b, ModelKind k) {
  check_instance(f, b, k);
  const int n = f.n, m = f.m;

  // S[t] = sink units at heights <= t, P[x] = sources at columns <= x
  std::vector<int> S(static_cast<std::size_t>(m) + 1, 0);
  for (int t = 1; t <= m; ++t) S[static_cast<std::size_t>(t)] = S[static_cast<std::size_t>(t - 1)] + sink_at(b, t);
  std::vector<int> P(static_cast<std::size_t>(n) + 1, 0);
  for (int x = 1; x <= n; ++x) P[static_cast<std::size_t>(x)] = P[static_cast<std::size_t>(x - 1)] + src_at(b, x);

  // pm[x] = best value of a path ending at an interior pick within
  // {1..x} x {1..t}; boundary prefixes enter through S/P at the pick.
  std::vector<int> pm_prev(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> pm_cur(static_cast<std::size_t>(n) + 1, 0);
  for (int t = 1; t <= m; ++t) {
    pm_cur[0] = 0;
    for (int x = 1; x <= n; ++x) {
      int val = 0;
      if (f.at(x, t)) {
        int base = (k == ModelKind::model1) ? pm_prev[static_cast<std::size_t>(x - 1)]
                                            : pm_cur[static_cast<std::size_t>(x - 1)];
        base = std::max(base, (k == ModelKind::model1) ? S[static_cast<std::size_t>(t - 1)]
                                                       : S[static_cast<std::size_t>(t)]);
        base = std::max(base, P[static_cast<std::size_t>(x - 1)]);
        val = 1 + base;
      }
      pm_cur[static_cast<std::size_t>(x)] =
          std::max({pm_cur[static_cast<std::size_t>(x - 1)], pm_prev[static_cast<std::size_t>(x)], val});
    }
    std::swap(pm_prev, pm_cur);
  }
  return std::max({pm_prev[static_cast<std::size_t>(n)], S[static_cast<std::size_t>(m)],
                   P[static_cast<std::size_t>(n)]});
}

namespace {

// Suffix table and value-to-go helpers shared by the canonical walk.
struct WalkTables {
  int n = 0, m = 0;
  ModelKind k = ModelKind::model1;
  const CrossField* f = nullptr;
  const BoundaryData* b = nullptr;
  std::vector<int> best;      // (n+2) x (m+2), best[x][t] = top chain in [x..n] x [t..m]
  std::vector<int> vg_sink;   // value-to-go standing at (0,t) after collecting there
  std::vector<int> vg_src;    // value-to-go standing at (x,0) after collecting there
  std::vector<int> next_sink; // first t' >= t with sink > 0, else m+1
  std::vector<int> next_src;  // first x' >= x with source 1, else n+1

  int& best_at(int x, int t) {
    return best[static_cast<std::size_t>(x) * static_cast<std::size_t>(m + 2) +
                static_cast<std::size_t>(t)];
  }
  int best_v(int x, int t) const {
    return best[static_cast<std::size_t>(x) * static_cast<std::size_t>(m + 2) +
                static_cast<std::size_t>(t)];
  }
  // value remaining after an interior pick at (x,t)
  int after(int x, int t) const {
    return (k == ModelKind::model1) ? best_v(x + 1, t + 1) : best_v(x + 1, t);
  }
  // value remaining after a jump from (0,t) into the interior
  int jump_from_sink(int t) const {
    return (k == ModelKind::model1) ? best_v(1, t + 1) : best_v(1, t);
  }
};

WalkTables build_tables(const CrossField& f, const BoundaryData& b, ModelKind k) {
  WalkTables w;
  w.n = f.n;
  w.m = f.m;
  w.k = k;
  w.f = &f;
  w.b = &b;
  const int n = f.n, m = f.m;

  w.best.assign(static_cast<std::size_t>(n + 2) * static_cast<std::size_t>(m + 2), 0);
  for (int x = n; x >= 1; --x)
    for (int t = m; t >= 1; --t) {
      int v = std::max(w.best_v(x + 1, t), w.best_v(x, t + 1));
      if (f.at(x, t)) v = std::max(v, 1 + w.after(x, t));
      w.best_at(x, t) = v;
    }

  w.vg_sink.assign(static_cast<std::size_t>(m) + 2, 0);
  for (int t = m; t >= 1; --t) {
    int v = w.jump_from_sink(t);
    if (t < m) v = std::max(v, sink_at(b, t + 1) + w.vg_sink[static_cast<std::size_t>(t + 1)]);
    w.vg_sink[static_cast<std::size_t>(t)] = v;
  }

  w.vg_src.assign(static_cast<std::size_t>(n) + 2, 0);
  for (int x = n; x >= 1; --x) {
    int v = w.best_v(x + 1, 1);
    if (x < n) v = std::max(v, src_at(b, x + 1) + w.vg_src[static_cast<std::size_t>(x + 1)]);
    w.vg_src[static_cast<std::size_t>(x)] = v;
  }

  w.next_sink.assign(static_cast<std::size_t>(m) + 2, m + 1);
  for (int t = m; t >= 1; --t)
    w.next_sink[static_cast<std::size_t>(t)] =
        sink_at(b, t) > 0 ? t : w.next_sink[static_cast<std::size_t>(t + 1)];
  w.next_src.assign(static_cast<std::size_t>(n) + 2, n + 1);
  for (int x = n; x >= 1; --x)
    w.next_src[static_cast<std::size_t>(x)] =
        src_at(b, x) > 0 ? x : w.next_src[static_cast<std::size_t>(x + 1)];
  return w;
}

// Lex-smallest interior pick (t,x) with t in [t_min, t_limit), x > x_low,
// carrying exactly the wanted value-to-go. Returns {0,0} if none.
GridPoint find_interior(const WalkTables& w, int x_low, int t_min, int t_limit, int wanted) {
  for (int t = t_min; t < t_limit; ++t)
    for (int x = x_low + 1; x <= w.n; ++x)
      if (w.f->at(x, t) && 1 + w.after(x, t) == wanted) return {x, t};
  return {0, 0};
}

}  // namespace

ChainResult optimal_path(const CrossField& f, const BoundaryData& b, ModelKind k) {
  check_instance(f, b, k);
  WalkTables w = build_tables(f, b, k);
  const int n = f.n, m = f.m;
  const int strict = (k == ModelKind::model1) ? 1 : 0;

  const int sink_first = w.next_sink[1];
  const int src_first = w.next_src[1];
  int total = w.best_v(1, 1);
  if (sink_first <= m)
    total = std::max(total, sink_at(b, sink_first) + w.vg_sink[static_cast<std::size_t>(sink_first)]);
  if (src_first <= n)
    total = std::max(total, 1 + w.vg_src[static_cast<std::size_t>(src_first)]);

  ChainResult r;
  r.length = total;
  int remaining = total;

  enum class State { start, sinks, sources, interior };
  State st = State::start;
  int cx = 0, ct = 0;  // last pick

  while (remaining > 0) {
    if (st == State::start || st == State::sources) {
      // a valid source pick has key (0,x): nothing can beat it
      const int xs = (st == State::start) ? src_first
                                          : w.next_src[static_cast<std::size_t>(cx + 1)];
      if (xs <= n && 1 + w.vg_src[static_cast<std::size_t>(xs)] == remaining) {
        r.witness.points.push_back({xs, 0});
        ++r.d_sources;
        --remaining;
        st = State::sources;
        cx = xs;
        continue;
      }
      if (st == State::sources) {
        const GridPoint g = find_interior(w, cx, 1, m + 1, remaining);
        if (g.x == 0) throw std::logic_error("walk lost the maximizer");
        r.witness.points.push_back(g);
        --remaining;
        st = State::interior;
        cx = g.x;
        ct = g.t;
        continue;
      }
    }
    if (st == State::start || st == State::sinks) {
      const int ts = (st == State::start) ? sink_first
                                          : w.next_sink[static_cast<std::size_t>(ct + 1)];
      const bool sink_ok =
          ts <= m && sink_at(b, ts) + w.vg_sink[static_cast<std::size_t>(ts)] == remaining;
      const int t_min = (st == State::start) ? 1 : ct + strict;
      const int t_limit = sink_ok ? ts : m + 1;  // interior wins only below the sink pick
      const GridPoint g = find_interior(w, 0, t_min, t_limit, remaining);
      if (g.x != 0) {
        r.witness.points.push_back(g);
        --remaining;
        st = State::interior;
        cx = g.x;
        ct = g.t;
        continue;
      }
      if (!sink_ok) throw std::logic_error("walk lost the maximizer");
      const int units = sink_at(b, ts);
      for (int u = 0; u < units; ++u) r.witness.points.push_back({0, ts});
      r.d_sinks += units;
      remaining -= units;
      st = State::sinks;
      ct = ts;
      continue;
    }
    // interior state
    const GridPoint g = find_interior(w, cx, ct + strict, m + 1, remaining);
    if (g.x == 0) throw std::logic_error("walk lost the maximizer");
    r.witness.points.push_back(g);
    --remaining;
    cx = g.x;
    ct = g.t;
  }

  if (static_cast<int>(r.witness.points.size()) != total)
    throw std::logic_error("walk emitted a wrong pick count");
  return r;
}

ChainResult longest_chain_boundary(const CrossField& f, const BoundaryData& b, ModelKind k) {
  ChainResult r = optimal_path(f, b, k);
  if (boundary_chain_length(f, b, k) != r.length)
    throw std::logic_error("forward and suffix chain programs disagree");
  return r;
}

}  // namespace hammersley
