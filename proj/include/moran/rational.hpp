#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace moran {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt ipow(BigInt base, unsigned exp) {
  BigInt r = 1;
  while (exp) {
    if (exp & 1) r *= base;
    base *= base;
    exp >>= 1;
  }
  return r;
}

inline double to_double(const Rational& r) {
  return static_cast<double>(r);
}

}  // namespace moran
