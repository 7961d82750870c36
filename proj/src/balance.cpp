#include "hammersley/balance.hpp"

#include "hammersley/sampling.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace hammersley {

VertexIO vertex_update(ModelKind k, int x_in, int y_in, int xi) {
  if (x_in != 0 && x_in != 1) throw std::invalid_argument("x_in must be 0 or 1");
  if (xi != 0 && xi != 1) throw std::invalid_argument("xi must be 0 or 1");
  if (y_in < 0 || (k == ModelKind::model1 && y_in > 1))
    throw std::invalid_argument("y_in out of domain");
  VertexIO io;
  io.x_in = x_in;
  io.y_in = y_in;
  io.xi = xi;
  if (k == ModelKind::model1) {
    if (x_in != y_in) {
      io.x_out = x_in;
      io.y_out = y_in;
    } else if (x_in == 0 && xi == 1) {
      io.x_out = 1;
      io.y_out = 1;
    } else {
      io.x_out = 0;
      io.y_out = 0;
    }
  } else {
    if (x_in == 1 && y_in == 0) {
      io.x_out = 1;
      io.y_out = 0;
    } else {
      io.x_out = xi;
      io.y_out = y_in - x_in + xi;
    }
  }
  return io;
}

namespace {

Rational rat_pow(const Rational& base, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

std::string atom_text(int x, int y, const Rational& expected, const Rational& actual) {
  std::ostringstream os;
  os << "atom (x=" << x << ", y=" << y << "): expected " << expected << ", got " << actual;
  return os.str();
}

}  // namespace

PushforwardReport pushforward_check(ModelKind k, const Rational& alpha, const Rational& p,
                                    int K, std::optional<Rational> alpha_star_override) {
  if (!(p > 0 && p < 1)) throw std::invalid_argument("p must lie in (0,1)");
  if (!(alpha > 0 && alpha <= 1)) throw std::invalid_argument("alpha must lie in (0,1]");
  if (K < 2) throw std::invalid_argument("K must be at least 2");
  const Rational astar =
      alpha_star_override ? *alpha_star_override : alpha_star_exact(k, alpha, p);
  if (!(astar >= 0 && astar <= 1)) throw std::invalid_argument("alpha* out of [0,1]");

  PushforwardReport rep;
  const auto a_fac = [&](int x) { return x ? alpha : 1 - alpha; };
  const auto p_fac = [&](int xi) { return xi ? p : 1 - p; };

  std::map<std::pair<int, int>, Rational> out;
  if (k == ModelKind::model1) {
    const auto s_fac = [&](int y) { return y ? astar : 1 - astar; };
    for (int x = 0; x <= 1; ++x)
      for (int y = 0; y <= 1; ++y)
        for (int xi = 0; xi <= 1; ++xi) {
          const VertexIO io = vertex_update(k, x, y, xi);
          out[{io.x_out, io.y_out}] += a_fac(x) * s_fac(y) * p_fac(xi);
        }
    rep.exact_match = true;
    for (int x = 0; x <= 1; ++x)
      for (int y = 0; y <= 1; ++y) {
        PushforwardAtom atom;
        atom.x = x;
        atom.y = y;
        atom.expected = a_fac(x) * s_fac(y);
        atom.actual = out[{x, y}];
        atom.ok = atom.expected == atom.actual;
        if (!atom.ok && rep.first_violation.empty())
          rep.first_violation = atom_text(x, y, atom.expected, atom.actual);
        rep.exact_match = rep.exact_match && atom.ok;
        rep.atoms.push_back(atom);
      }
    // stationarity identity behind the map: creation mass equals (1,1) mass
    rep.identity_ok = p * (1 - alpha) * (1 - astar) == alpha * astar;
  } else {
    // sink law P(y) = astar (1-astar)^y, enumerated to y <= K; an output atom
    // with y' <= K-1 only draws on inputs with y <= y'+1, so its mass is full
    for (int x = 0; x <= 1; ++x)
      for (int y = 0; y <= K; ++y)
        for (int xi = 0; xi <= 1; ++xi) {
          const VertexIO io = vertex_update(k, x, y, xi);
          out[{io.x_out, io.y_out}] += a_fac(x) * astar * rat_pow(1 - astar, y) * p_fac(xi);
        }
    rep.exact_match = true;
    for (int x = 0; x <= 1; ++x)
      for (int y = 0; y + 1 <= K; ++y) {
        PushforwardAtom atom;
        atom.x = x;
        atom.y = y;
        atom.expected = a_fac(x) * astar * rat_pow(1 - astar, y);
        atom.actual = out[{x, y}];
        atom.ok = atom.expected == atom.actual;
        if (!atom.ok && rep.first_violation.empty())
          rep.first_violation = atom_text(x, y, atom.expected, atom.actual);
        rep.exact_match = rep.exact_match && atom.ok;
        rep.atoms.push_back(atom);
      }
    // the requirement the geometric tail imposes at every y' >= 1
    rep.identity_ok = p * ((1 - alpha) + alpha * (1 - astar)) == alpha * (1 - astar);
  }
  return rep;
}

}  // namespace hammersley
