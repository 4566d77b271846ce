#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace g2c {

using Int = boost::multiprecision::cpp_int;

// Exact rational, always in reduced canonical form (gcd(num,den)=1, den>0).
using Scalar = boost::multiprecision::cpp_rational;

inline Int num(const Scalar& s) { return boost::multiprecision::numerator(s); }
inline Int den(const Scalar& s) { return boost::multiprecision::denominator(s); }

inline Scalar frac(std::int64_t p, std::int64_t q) { return Scalar(p, q); }

// "p/q" (or just "p" when q = 1); the report format relies on this.
inline std::string to_string(const Scalar& s) {
    if (den(s) == 1) return num(s).str();
    return num(s).str() + "/" + den(s).str();
}

}  // namespace g2c
