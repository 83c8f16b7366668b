#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace polygram {

// Exact arithmetic substrate. Counts are arbitrary-precision integers;
// truncated Dirichlet sums are arbitrary-precision rationals. cpp_rational
// keeps values in lowest terms with positive denominator on every operation,
// and comparisons on both types are exact.
using BigInt = boost::multiprecision::cpp_int;
using BigCount = BigInt;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt int_pow(const BigInt& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

}  // namespace polygram
