#include "hammersley/coupling.hpp"

#include "hammersley/dynamics.hpp"

#include <stdexcept>

namespace hammersley {

WindowState z_step(const WindowState& s, const std::vector<std::uint8_t>& cross_row) {
  if (cross_row.size() != s.occ.size()) throw std::invalid_argument("cross row length mismatch");
  WindowState out = s;
  out.occ = step(ModelKind::model1, s.occ, cross_row, 0);
  return out;
}

CoupledPair coupled_step(const CoupledPair& pair, const std::vector<std::uint8_t>& cross_row) {
  if (pair.x.size() != pair.y.size()) throw std::invalid_argument("pair size mismatch");
  return {z_step(pair.x, cross_row), z_step(pair.y, cross_row)};
}

int discrepancy(const CoupledPair& pair, int k) {
  if (k < 0 || k > pair.x.size() || pair.x.size() != pair.y.size())
    throw std::invalid_argument("bad prefix length");
  int d = 0;
  for (int i = 0; i < k; ++i)
    d += pair.x.occ[static_cast<std::size_t>(i)] != pair.y.occ[static_cast<std::size_t>(i)];
  return d;
}

namespace {

bool pattern_at(const CoupledPair& pair, int x, int n) {
  const auto& a = pair.x.occ;
  const auto& b = pair.y.occ;
  const auto v = [&](const std::vector<std::uint8_t>& s, int site) {
    return s[static_cast<std::size_t>(site - 1)];
  };
  const bool head_xy = v(a, x) == 1 && v(b, x) == 0;
  const bool head_yx = v(a, x) == 0 && v(b, x) == 1;
  if (!head_xy && !head_yx) return false;
  for (int i = x + 1; i <= x + n - 2; ++i)
    if (v(a, i) != 0 || v(b, i) != 0) return false;
  const int last = x + n - 1;
  if (head_xy) return v(a, last) == 0 && v(b, last) == 1;
  return v(a, last) == 1 && v(b, last) == 0;
}

bool event_e(const std::vector<std::uint8_t>& cross_row, int x, int n) {
  if (!cross_row[static_cast<std::size_t>(x - 1)]) return false;
  for (int i = x + 1; i <= x + n - 1; ++i)
    if (cross_row[static_cast<std::size_t>(i - 1)]) return false;
  return true;
}

}  // namespace

PatternScan forbidden_pattern_scan(const CoupledPair& pair, int n,
                                   const std::vector<std::uint8_t>& cross_row) {
  if (n < 2) throw std::invalid_argument("pattern span must be at least 2");
  const int N = pair.x.size();
  if (pair.y.size() != N || static_cast<int>(cross_row.size()) != N)
    throw std::invalid_argument("size mismatch");
  PatternScan scan;
  for (int x = 1; x + n - 1 <= N; x += n)
    if (pattern_at(pair, x, n)) {
      scan.f_locations.push_back(x);
      scan.a_count += event_e(cross_row, x, n);
    }
  return scan;
}

LemmaCheck lemma_inequality_check(const CoupledPair& pair,
                                  const std::vector<std::uint8_t>& cross_row, int n, int j) {
  if (n < 2) throw std::invalid_argument("pattern span must be at least 2");
  if (j < 1) throw std::invalid_argument("j must be positive");
  const int N = pair.x.size();
  if (static_cast<long long>(j) * n > static_cast<long long>(N) - n)
    throw std::invalid_argument("interior guard violated: j*n must stay <= N-n");
  LemmaCheck chk;
  chk.delta_before = discrepancy(pair, j * n);
  for (int block = 0; block < j; ++block) {
    const int x = 1 + block * n;
    if (pattern_at(pair, x, n) && event_e(cross_row, x, n)) ++chk.a_count;
  }
  const CoupledPair after = coupled_step(pair, cross_row);
  chk.delta_after = discrepancy(after, j * n);
  chk.holds = chk.delta_after <= chk.delta_before + 1 - 2 * chk.a_count;
  return chk;
}

}  // namespace hammersley
