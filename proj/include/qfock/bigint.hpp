#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qfock {

// Exactness is non-negotiable here: Gaussian-binomial coefficients overflow
// fixed-width integers quickly, so every scalar is arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

} // namespace qfock
