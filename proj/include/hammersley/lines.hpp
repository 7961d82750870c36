#pragma once
// Hammersley line diagrams: recursive peeling of minimal points into
// non-increasing staircase lines, with or without boundary sources/sinks,
// plus the vertical-edge occupancy view that links lines to particle states.

#include "hammersley/model.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hammersley {

enum class LineEntry { top, sink };
// A line either leaves through the right side of the box at its final height
// or swallows a source and drops to the bottom at that source's column.
enum class LineExit { right, source };

struct DiagramLine {
  LineEntry entry = LineEntry::top;
  int entry_pos = 0;  // top: column; sink: height
  LineExit exit = LineExit::right;
  int exit_pos = 0;  // right: height; source: column
  std::vector<GridPoint> points;   // connected field points, west to east
  std::vector<GridPoint> corners;  // polyline vertices from entry to exit;
                                   // top entries start one unit above the box
};

struct LineDiagram {
  int n = 0;
  int m = 0;
  ModelKind model = ModelKind::model1;
  std::vector<DiagramLine> lines;  // in peeling order
};

LineDiagram build_lines(const CrossField& f, ModelKind k);
LineDiagram build_lines_boundary(const CrossField& f, const BoundaryData& b, ModelKind k);

// Lines touching the top side of the box.
int top_exit_count(const LineDiagram& d);

// Particle state at time t in [0,m]: entry x holds 1 iff some line crosses
// the vertical edge between (x,t) and (x,t+1).
std::vector<std::uint8_t> edge_occupancy(const LineDiagram& d, int t);

// Deterministic standalone SVG rendering of the diagram.
std::string render_svg(const LineDiagram& d);

}  // namespace hammersley
