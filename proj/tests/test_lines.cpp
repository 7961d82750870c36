#include "doctest.h"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "hammersley/lines.hpp"
#include "hammersley/sampling.hpp"
#include "hammersley/subseq.hpp"

using namespace hammersley;

namespace {

CrossField from_mask(int side, unsigned mask) {
  CrossField f(side, side);
  int bit = 0;
  for (int t = 1; t <= side; ++t)
    for (int x = 1; x <= side; ++x, ++bit)
      if (mask & (1u << bit)) f.set(x, t, 1);
  return f;
}

int ones(const std::vector<std::uint8_t>& v) {
  int c = 0;
  for (auto b : v) c += b;
  return c;
}

// unit edges swept by a corner polyline; verticals keyed (x, s) for the edge
// (x,s)-(x,s+1), horizontals keyed (x, t) for (x,t)-(x+1,t)
void collect_edges(const DiagramLine& line, std::map<std::pair<int, int>, int>& vertical,
                   std::map<std::pair<int, int>, int>& horizontal) {
  for (std::size_t i = 1; i < line.corners.size(); ++i) {
    const GridPoint a = line.corners[i - 1];
    const GridPoint b = line.corners[i];
    if (a.x == b.x) {
      for (int s = std::min(a.t, b.t); s < std::max(a.t, b.t); ++s) ++vertical[{a.x, s}];
    } else {
      REQUIRE(a.t == b.t);
      for (int x = std::min(a.x, b.x); x < std::max(a.x, b.x); ++x) ++horizontal[{x, a.t}];
    }
  }
}

bool same_diagram(const LineDiagram& a, const LineDiagram& b) {
  if (a.lines.size() != b.lines.size()) return false;
  for (std::size_t i = 0; i < a.lines.size(); ++i) {
    const DiagramLine& u = a.lines[i];
    const DiagramLine& v = b.lines[i];
    if (u.entry != v.entry || u.entry_pos != v.entry_pos) return false;
    if (u.exit != v.exit || u.exit_pos != v.exit_pos) return false;
    if (u.points != v.points || u.corners != v.corners) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("single-point diagrams") {
  CHECK(build_lines(CrossField(4, 4), ModelKind::model1).lines.empty());

  CrossField f(4, 4);
  f.set(2, 3, 1);
  const LineDiagram d = build_lines(f, ModelKind::model1);
  REQUIRE(d.lines.size() == 1);
  CHECK(d.lines[0].entry == LineEntry::top);
  CHECK(d.lines[0].entry_pos == 2);
  CHECK(d.lines[0].exit == LineExit::right);
  CHECK(d.lines[0].exit_pos == 3);

  const std::vector<std::uint8_t> at3 = edge_occupancy(d, 3);
  CHECK(at3 == std::vector<std::uint8_t>{0, 1, 0, 0});
  CHECK(ones(edge_occupancy(d, 2)) == 0);
  CHECK(ones(edge_occupancy(d, 4)) == 1);
  CHECK(top_exit_count(d) == 1);
}

TEST_CASE("line count equals the chain length on all 3x3 fields") {
  for (unsigned mask = 0; mask < 512u; ++mask) {
    const CrossField f = from_mask(3, mask);
    for (ModelKind k : {ModelKind::model1, ModelKind::model2}) {
      CHECK(static_cast<int>(build_lines(f, k).lines.size()) == longest_chain(f, k));
    }
  }
}

TEST_CASE("line count equals the chain length on larger random fields") {
  for (int trial = 0; trial < 10; ++trial) {
    const CrossField f = sample_cross_field(50, 50, 0.15, SeedSpec{201}, trial);
    for (ModelKind k : {ModelKind::model1, ModelKind::model2}) {
      CHECK(static_cast<int>(build_lines(f, k).lines.size()) == longest_chain(f, k));
    }
  }
}

TEST_CASE("the zero boundary reproduces the free diagram") {
  for (int trial = 0; trial < 20; ++trial) {
    const CrossField f = sample_cross_field(7, 7, 0.3, SeedSpec{202}, trial);
    for (ModelKind k : {ModelKind::model1, ModelKind::model2}) {
      const LineDiagram free = build_lines(f, k);
      const LineDiagram zb = build_lines_boundary(f, zero_boundary(k, 7, 7), k);
      CHECK(same_diagram(free, zb));
    }
  }
}

TEST_CASE("sink multiplicity spawns one line per unit") {
  const CrossField f(3, 2);
  BoundaryData b = zero_boundary(ModelKind::model2, 3, 2);
  b.sinks = {2, 0};
  const LineDiagram d = build_lines_boundary(f, b, ModelKind::model2);
  REQUIRE(d.lines.size() == 2);
  for (const DiagramLine& line : d.lines) {
    CHECK(line.entry == LineEntry::sink);
    CHECK(line.entry_pos == 1);
    CHECK(line.exit == LineExit::right);
    CHECK(line.exit_pos == 1);
  }
  CHECK(top_exit_count(d) == 0);
  for (int t = 0; t <= 2; ++t) CHECK(ones(edge_occupancy(d, t)) == 0);
}

TEST_CASE("boundary diagrams match the boundary chain length") {
  for (int trial = 0; trial < 1000; ++trial) {
    const CrossField f = sample_cross_field(6, 6, 0.3, SeedSpec{203}, trial);
    for (ModelKind k : {ModelKind::model1, ModelKind::model2}) {
      const double alpha = k == ModelKind::model1 ? 1.0 / 3 : 0.683;
      const BoundaryData b = sample_boundary(k, 6, 6, alpha, 0.25, SeedSpec{204}, trial);
      const LineDiagram d = build_lines_boundary(f, b, k);
      const int count = static_cast<int>(d.lines.size());
      CHECK(count == boundary_chain_length(f, b, k));
      CHECK(count - top_exit_count(d) == b.sink_total());
      CHECK(ones(edge_occupancy(d, 6)) == top_exit_count(d));
      CHECK(edge_occupancy(d, 0) == b.sources);
    }
  }
}

TEST_CASE("restriction to a sub-box commutes with construction") {
  for (int trial = 0; trial < 10; ++trial) {
    const CrossField f = sample_cross_field(8, 8, 0.3, SeedSpec{205}, trial);
    for (ModelKind k : {ModelKind::model1, ModelKind::model2}) {
      const LineDiagram full = build_lines(f, k);
      for (int n2 : {4, 6, 8}) {
        for (int m2 : {3, 8}) {
          CrossField sub(n2, m2);
          for (int t = 1; t <= m2; ++t)
            for (int x = 1; x <= n2; ++x) sub.set(x, t, f.at(x, t));
          const LineDiagram small = build_lines(sub, k);
          for (int t = 0; t <= m2; ++t) {
            const auto inner = edge_occupancy(small, t);
            const auto outer = edge_occupancy(full, t);
            for (int x = 1; x <= n2; ++x)
              CHECK(inner[static_cast<std::size_t>(x - 1)] ==
                    outer[static_cast<std::size_t>(x - 1)]);
          }
        }
      }
    }
  }
}

TEST_CASE("model 1 lines are edge-disjoint; vertical edges never shared") {
  for (int trial = 0; trial < 20; ++trial) {
    const CrossField f = sample_cross_field(8, 8, 0.4, SeedSpec{206}, trial);
    {
      const LineDiagram d = build_lines(f, ModelKind::model1);
      std::map<std::pair<int, int>, int> vertical, horizontal;
      for (const DiagramLine& line : d.lines) collect_edges(line, vertical, horizontal);
      for (const auto& [edge, count] : vertical) CHECK(count == 1);
      for (const auto& [edge, count] : horizontal) CHECK(count == 1);
    }
    {
      const LineDiagram d = build_lines(f, ModelKind::model2);
      std::map<std::pair<int, int>, int> vertical, horizontal;
      for (const DiagramLine& line : d.lines) collect_edges(line, vertical, horizontal);
      for (const auto& [edge, count] : vertical) CHECK(count == 1);
    }
  }
}

TEST_CASE("every point lies on exactly one line") {
  for (int trial = 0; trial < 20; ++trial) {
    const CrossField f = sample_cross_field(7, 7, 0.35, SeedSpec{207}, trial);
    for (ModelKind k : {ModelKind::model1, ModelKind::model2}) {
      const LineDiagram d = build_lines(f, k);
      std::map<std::pair<int, int>, int> seen;
      for (const DiagramLine& line : d.lines)
        for (const GridPoint& p : line.points) ++seen[{p.x, p.t}];
      long long covered = 0;
      for (const auto& [pt, count] : seen) {
        CHECK(count == 1);
        CHECK(f.at(pt.first, pt.second) == 1);
        ++covered;
      }
      CHECK(covered == f.count());
    }
  }
}

TEST_CASE("svg output is deterministic and well formed") {
  const CrossField f = sample_cross_field(6, 6, 0.3, SeedSpec{208});
  const BoundaryData b = sample_boundary(ModelKind::model2, 6, 6, 0.7, 0.25, SeedSpec{209});
  const LineDiagram d = build_lines_boundary(f, b, ModelKind::model2);
  const std::string svg = render_svg(d);
  CHECK(svg == render_svg(d));
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.rfind("</svg>") != std::string::npos);
  std::size_t polylines = 0;
  for (std::size_t at = svg.find("<polyline"); at != std::string::npos;
       at = svg.find("<polyline", at + 1))
    ++polylines;
  CHECK(polylines == d.lines.size());
}
