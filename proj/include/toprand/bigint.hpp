#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace toprand {

using BigInt = boost::multiprecision::cpp_int;

// Always normalized: gcd(num, den) = 1 and den > 0.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt ipow(const BigInt& base, std::uint64_t exponent)
{
    BigInt result = 1;
    BigInt b = base;
    while (exponent) {
        if (exponent & 1u) result *= b;
        exponent >>= 1;
        if (exponent) b *= b;
    }
    return result;
}

} // namespace toprand
