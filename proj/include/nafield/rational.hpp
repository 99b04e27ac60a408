#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace nafield {

/// Exact rational scalar used wherever the algebra must be free of rounding:
/// normal-form coefficients and identity certification runs.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

}  // namespace nafield
