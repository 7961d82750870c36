// Line diagram construction.
//
// One round of peeling builds one line. The round works on the remaining
// point set and the remaining boundary: it takes u = the minimal height
// holding sink units and v = the leftmost column holding a source (when
// present), connects the minimal points of the remaining set that are
// compatible with that sink and source (x <= v when a source is consumed;
// t <= u for model 1, t < u for model 2 when a sink is consumed), consumes
// one sink unit at u and the source at v, removes the connected points, and
// repeats until points, sinks, and sources are all gone.
//
// A point (x,t) is minimal when no remaining point lies strictly southwest
// (model 1) or weakly-south strictly-west (model 2); columns are scanned
// west to east with a running minimum height, so minima of a column are the
// points at heights <= that minimum (model 1) or < it (model 2).
//
// Geometry: the line is the highest non-increasing staircase through its
// points. It starts at (0,u) when a sink is consumed, else enters from the
// top of the box in its first point's column (or the source's column when
// there is nothing else); it runs east at its current height, drops as late
// as possible at each point's column, and finally either drops to (v,0) at
// the consumed source or runs out the right side at its last height. The
// vertical edges crossed by these drops define the particle states X_t; a
// top entry crosses the edge above row m, so X_m reads off the top count.

#include "hammersley/lines.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace hammersley {

namespace {

void check_instance(const CrossField& f, const BoundaryData& b, ModelKind k) {
  if (b.model != k) throw std::invalid_argument("boundary model mismatch");
  validate_boundary(b, f.n, f.m);
}

struct Peeler {
  const CrossField& f;
  ModelKind k;
  int n, m;
  // remaining points per column, ascending heights; col_pos marks consumption
  std::vector<std::vector<int>> col;
  std::vector<std::size_t> col_pos;
  long long points_left = 0;
  std::vector<int> sinks;
  std::vector<std::uint8_t> sources;
  int sink_cursor = 1;  // minimal height with remaining sink units
  int src_cursor = 1;   // leftmost column with a remaining source

  Peeler(const CrossField& f_, const BoundaryData& b, ModelKind k_)
      : f(f_), k(k_), n(f_.n), m(f_.m), sinks(b.sinks), sources(b.sources) {
    col.resize(static_cast<std::size_t>(n) + 1);
    col_pos.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int x = 1; x <= n; ++x)
      for (int t = 1; t <= m; ++t)
        if (f.at(x, t)) {
          col[static_cast<std::size_t>(x)].push_back(t);
          ++points_left;
        }
  }

  int take_sink_height() {
    while (sink_cursor <= m && sinks[static_cast<std::size_t>(sink_cursor - 1)] == 0) ++sink_cursor;
    return sink_cursor <= m ? sink_cursor : 0;
  }
  int take_source_column() {
    while (src_cursor <= n && sources[static_cast<std::size_t>(src_cursor - 1)] == 0) ++src_cursor;
    return src_cursor <= n ? src_cursor : 0;
  }

  bool exhausted() const { return points_left == 0 && sink_cursor_done() && src_cursor_done(); }
  bool sink_cursor_done() const {
    for (int t = sink_cursor; t <= m; ++t)
      if (sinks[static_cast<std::size_t>(t - 1)] > 0) return false;
    return true;
  }
  bool src_cursor_done() const {
    for (int x = src_cursor; x <= n; ++x)
      if (sources[static_cast<std::size_t>(x - 1)] > 0) return false;
    return true;
  }

  DiagramLine round() {
    const int u = take_sink_height();    // 0 when no sinks remain
    const int v = take_source_column();  // 0 when no sources remain

    // collect compatible minimal points
    DiagramLine line;
    const int x_max = v ? v : n;
    int running_min = std::numeric_limits<int>::max();
    for (int x = 1; x <= x_max; ++x) {
      auto& c = col[static_cast<std::size_t>(x)];
      std::size_t& pos = col_pos[static_cast<std::size_t>(x)];
      const std::size_t begin = pos;
      std::size_t take = pos;
      while (take < c.size()) {
        const int t = c[take];
        const bool minimal = (k == ModelKind::model1) ? t <= running_min : t < running_min;
        if (!minimal) break;
        const bool sink_ok = !u || ((k == ModelKind::model1) ? t <= u : t < u);
        if (!sink_ok) break;
        ++take;
      }
      // staircase order within a column is top-down
      for (std::size_t i = take; i > begin; --i) line.points.push_back({x, c[i - 1]});
      points_left -= static_cast<long long>(take - begin);
      pos = take;
      if (begin < c.size()) running_min = std::min(running_min, c[begin]);
    }

    // geometry: entry, eastward runs with late drops, exit
    if (u) {
      line.entry = LineEntry::sink;
      line.entry_pos = u;
      line.corners.push_back({0, u});
    } else {
      line.entry = LineEntry::top;
      line.entry_pos = line.points.empty() ? v : line.points.front().x;
      line.corners.push_back({line.entry_pos, m + 1});
    }
    int cur_x = line.corners.back().x;
    int cur_t = line.corners.back().t;
    for (const auto& pt : line.points) {
      if (pt.x > cur_x) {
        line.corners.push_back({pt.x, cur_t});
        cur_x = pt.x;
      }
      if (pt.t < cur_t) {
        line.corners.push_back({pt.x, pt.t});
        cur_t = pt.t;
      }
    }
    if (v) {
      line.exit = LineExit::source;
      line.exit_pos = v;
      if (v > cur_x) line.corners.push_back({v, cur_t});
      line.corners.push_back({v, 0});
      sources[static_cast<std::size_t>(v - 1)] = 0;
    } else {
      line.exit = LineExit::right;
      line.exit_pos = cur_t;
      if (cur_x < n) line.corners.push_back({n, cur_t});
    }
    if (u) --sinks[static_cast<std::size_t>(u - 1)];
    return line;
  }
};

LineDiagram build(const CrossField& f, const BoundaryData& b, ModelKind k) {
  LineDiagram d;
  d.n = f.n;
  d.m = f.m;
  d.model = k;
  Peeler peel(f, b, k);
  while (!peel.exhausted()) d.lines.push_back(peel.round());
  return d;
}

}  // namespace

LineDiagram build_lines(const CrossField& f, ModelKind k) {
  return build(f, zero_boundary(k, f.n, f.m), k);
}

LineDiagram build_lines_boundary(const CrossField& f, const BoundaryData& b, ModelKind k) {
  check_instance(f, b, k);
  return build(f, b, k);
}

int top_exit_count(const LineDiagram& d) {
  int c = 0;
  for (const auto& line : d.lines) c += line.entry == LineEntry::top;
  return c;
}

std::vector<std::uint8_t> edge_occupancy(const LineDiagram& d, int t) {
  if (t < 0 || t > d.m) throw std::invalid_argument("time slice out of range");
  std::vector<std::uint8_t> occ(static_cast<std::size_t>(d.n), 0);
  for (const auto& line : d.lines)
    for (std::size_t i = 1; i < line.corners.size(); ++i) {
      const auto& a = line.corners[i - 1];
      const auto& c = line.corners[i];
      // vertical segment from a down to c crosses edges t in [c.t, a.t)
      if (a.x == c.x && c.t <= t && t < a.t) occ[static_cast<std::size_t>(a.x - 1)] = 1;
    }
  return occ;
}

}  // namespace hammersley
