#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace wcifano {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q" (or just "p" when q == 1).
std::string rat_str(const Rational& r);

// Accepts "p" and "p/q"; throws ParseError on anything else.
Rational rat_parse(const std::string& s);

inline Rational rat(long long num, long long den = 1) {
    return Rational(Int(num), Int(den));
}

// True iff r is an integer.
inline bool is_integer(const Rational& r) {
    return boost::multiprecision::denominator(r) == 1;
}

inline Int numer(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int denom(const Rational& r) { return boost::multiprecision::denominator(r); }

} // namespace wcifano
