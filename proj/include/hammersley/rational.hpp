#pragma once
// Exact rational arithmetic for the stationarity identities. Floating point
// is reserved for Monte Carlo; everything asserted exactly goes through here.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace hammersley {

using Rational = boost::multiprecision::cpp_rational;

// Parses "num/den" or a plain integer. Throws std::invalid_argument.
inline Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos)
      return Rational(boost::multiprecision::cpp_int(text));
    const boost::multiprecision::cpp_int num(text.substr(0, slash));
    const boost::multiprecision::cpp_int den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("rational: expected \"num/den\" or integer, got \"" + text + "\"");
  }
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace hammersley
