#include "hammersley/lines.hpp"

#include <cstdarg>
#include <cstdio>
#include <string>

namespace hammersley {

namespace {

constexpr int kCell = 40;
constexpr int kMargin = 60;

const char* const kPalette[12] = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
    "#e377c2", "#17becf", "#bcbd22", "#7f7f7f", "#aec7e8", "#98df8a",
};

int sx(int x) { return kMargin + x * kCell; }

// t grows upward in the model, downward in SVG coordinates.
int sy(int t, int m) { return kMargin + (m + 1 - t) * kCell; }

void appendf(std::string& out, const char* fmt, ...) {
  char buf[256];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  out += buf;
}

}  // namespace

std::string render_svg(const LineDiagram& d) {
  const int n = d.n;
  const int m = d.m;
  const int width = 2 * kMargin + (n + 1) * kCell;
  const int height = 2 * kMargin + (m + 1) * kCell;

  std::string out;
  appendf(out,
          "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" "
          "viewBox=\"0 0 %d %d\">\n",
          width, height, width, height);
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (int x = 0; x <= n; ++x)
    appendf(out,
            "<line x1=\"%d\" y1=\"%d\" x2=\"%d\" y2=\"%d\" stroke=\"#dddddd\" "
            "stroke-width=\"1\"/>\n",
            sx(x), sy(m + 1, m), sx(x), sy(0, m));
  for (int t = 0; t <= m + 1; ++t)
    appendf(out,
            "<line x1=\"%d\" y1=\"%d\" x2=\"%d\" y2=\"%d\" stroke=\"#dddddd\" "
            "stroke-width=\"1\"/>\n",
            sx(0), sy(t, m), sx(n), sy(t, m));

  for (std::size_t li = 0; li < d.lines.size(); ++li) {
    const DiagramLine& ln = d.lines[li];
    const char* color = kPalette[li % 12];
    if (ln.corners.size() < 2) continue;
    std::string pts;
    for (const GridPoint& c : ln.corners) {
      if (!pts.empty()) pts += ' ';
      char buf[48];
      std::snprintf(buf, sizeof buf, "%d,%d", sx(c.x), sy(c.t, m));
      pts += buf;
    }
    appendf(out,
            "<polyline points=\"%s\" fill=\"none\" stroke=\"%s\" "
            "stroke-width=\"3\" stroke-linejoin=\"round\"/>\n",
            pts.c_str(), color);
  }

  for (std::size_t li = 0; li < d.lines.size(); ++li) {
    const DiagramLine& ln = d.lines[li];
    const char* color = kPalette[li % 12];
    for (const GridPoint& p : ln.points) {
      const int cx = sx(p.x);
      const int cy = sy(p.t, m);
      const int r = 7;
      appendf(out,
              "<line x1=\"%d\" y1=\"%d\" x2=\"%d\" y2=\"%d\" stroke=\"%s\" "
              "stroke-width=\"3\"/>\n",
              cx - r, cy - r, cx + r, cy + r, color);
      appendf(out,
              "<line x1=\"%d\" y1=\"%d\" x2=\"%d\" y2=\"%d\" stroke=\"%s\" "
              "stroke-width=\"3\"/>\n",
              cx - r, cy + r, cx + r, cy - r, color);
    }
    if (ln.entry == LineEntry::sink)
      appendf(out,
              "<circle cx=\"%d\" cy=\"%d\" r=\"6\" fill=\"none\" stroke=\"%s\" "
              "stroke-width=\"3\"/>\n",
              sx(0), sy(ln.entry_pos, m), color);
    if (ln.exit == LineExit::source)
      appendf(out, "<circle cx=\"%d\" cy=\"%d\" r=\"6\" fill=\"%s\"/>\n", sx(ln.exit_pos),
              sy(0, m), color);
  }

  for (int x = 1; x <= n; ++x)
    appendf(out,
            "<text x=\"%d\" y=\"%d\" font-family=\"monospace\" font-size=\"14\" "
            "text-anchor=\"middle\" fill=\"#444444\">%d</text>\n",
            sx(x), sy(0, m) + 32, x);
  for (int t = 1; t <= m; ++t)
    appendf(out,
            "<text x=\"%d\" y=\"%d\" font-family=\"monospace\" font-size=\"14\" "
            "text-anchor=\"end\" fill=\"#444444\">%d</text>\n",
            sx(0) - 28, sy(t, m) + 5, t);

  out += "</svg>\n";
  return out;
}

}  // namespace hammersley
