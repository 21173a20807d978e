#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace domavg {

// All tallies and averages are exact: arbitrary-precision integers and
// reduced rationals, never floating point.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rational_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rational_den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline std::string to_decimal(const BigInt& x) { return x.str(); }

// floor/ceil for nonnegative rationals.
inline BigInt floor_of(const Rational& r) { return rational_num(r) / rational_den(r); }
inline BigInt ceil_of(const Rational& r) {
    const BigInt f = floor_of(r);
    return rational_num(r) % rational_den(r) == 0 ? f : f + 1;
}

// C(n, k) with C(n, k) = 0 outside 0 <= k <= n.
const BigInt& binomial(int n, int k);

} // namespace domavg
