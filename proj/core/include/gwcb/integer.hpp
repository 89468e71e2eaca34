#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace gwcb {

/// Exact integers and rationals. Every coefficient, rank and degree in the
/// library is carried in these types; nothing is ever rounded.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Integer& value) { return value.str(); }

inline std::string to_string(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace gwcb
