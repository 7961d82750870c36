#include "hammersley/model.hpp"

#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hammersley {

CrossField::CrossField(int n_, int m_) : n(n_), m(m_) {
  if (n_ < 1 || m_ < 1) throw std::invalid_argument("field dimensions must be positive");
  cells.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(m_), 0);
}

long long CrossField::count() const {
  long long c = 0;
  for (auto v : cells) c += v;
  return c;
}

long long BoundaryData::sink_total() const {
  return std::accumulate(sinks.begin(), sinks.end(), 0ll);
}

int BoundaryData::source_total() const {
  int c = 0;
  for (auto v : sources) c += v;
  return c;
}

BoundaryData zero_boundary(ModelKind model, int n, int m) {
  BoundaryData b;
  b.model = model;
  b.sources.assign(static_cast<std::size_t>(n), 0);
  b.sinks.assign(static_cast<std::size_t>(m), 0);
  return b;
}

void validate_boundary(const BoundaryData& b, int n, int m) {
  if (static_cast<int>(b.sources.size()) != n || static_cast<int>(b.sinks.size()) != m)
    throw std::invalid_argument("boundary size mismatch");
  for (auto s : b.sources)
    if (s > 1) throw std::invalid_argument("source values must be 0 or 1");
  for (auto s : b.sinks) {
    if (s < 0) throw std::invalid_argument("sink values must be nonnegative");
    if (b.model == ModelKind::model1 && s > 1)
      throw std::invalid_argument("model 1 sink values must be 0 or 1");
  }
}

void Params::validate(ModelKind model) const {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must lie in (0,1)");
  if (!(a > 0.0 && b > 0.0)) throw std::invalid_argument("scales must be positive");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in (0,1]");
  if (model == ModelKind::model2 && !(alpha > p))
    throw std::invalid_argument("model 2 requires alpha > p");
}

std::string field_to_text(const CrossField& f) {
  std::string out;
  out.reserve(static_cast<std::size_t>(f.m + 1) * (static_cast<std::size_t>(f.n) + 1) + 16);
  out += std::to_string(f.n);
  out += ' ';
  out += std::to_string(f.m);
  out += '\n';
  for (int t = 1; t <= f.m; ++t) {
    for (int x = 1; x <= f.n; ++x) out += f.at(x, t) ? 'x' : '.';
    out += '\n';
  }
  return out;
}

CrossField field_from_text(std::istream& in) {
  int n = 0, m = 0;
  if (!(in >> n >> m)) throw std::invalid_argument("field header: expected \"n m\"");
  CrossField f(n, m);
  std::string row;
  for (int t = 1; t <= m; ++t) {
    if (!(in >> row)) throw std::invalid_argument("field body: missing row");
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("field body: row length mismatch");
    for (int x = 1; x <= n; ++x) {
      const char c = row[static_cast<std::size_t>(x - 1)];
      if (c == 'x')
        f.set(x, t, 1);
      else if (c != '.')
        throw std::invalid_argument("field body: cells must be '.' or 'x'");
    }
  }
  return f;
}

std::string boundary_to_text(const BoundaryData& b) {
  std::ostringstream out;
  for (std::size_t i = 0; i < b.sources.size(); ++i) {
    if (i) out << ' ';
    out << static_cast<int>(b.sources[i]);
  }
  out << '\n';
  for (std::size_t i = 0; i < b.sinks.size(); ++i) {
    if (i) out << ' ';
    out << b.sinks[i];
  }
  out << '\n';
  return out.str();
}

BoundaryData boundary_from_text(std::istream& in, ModelKind model, int n, int m) {
  BoundaryData b;
  b.model = model;
  b.sources.resize(static_cast<std::size_t>(n));
  b.sinks.resize(static_cast<std::size_t>(m));
  for (int x = 0; x < n; ++x) {
    int v = 0;
    if (!(in >> v)) throw std::invalid_argument("boundary: missing source value");
    if (v != 0 && v != 1) throw std::invalid_argument("boundary: sources must be 0 or 1");
    b.sources[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(v);
  }
  for (int t = 0; t < m; ++t) {
    int v = 0;
    if (!(in >> v)) throw std::invalid_argument("boundary: missing sink value");
    b.sinks[static_cast<std::size_t>(t)] = v;
  }
  validate_boundary(b, n, m);
  return b;
}

}  // namespace hammersley
