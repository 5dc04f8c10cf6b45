#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hypercx {

// All coefficient arithmetic is exact. Structure constants are +-1, so the
// only source of growth is user-supplied rational coefficients; cpp_rational
// never rounds.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace hypercx
