// Exact arithmetic primitives shared by every module: arbitrary-precision
// integers and rationals, binomials, floors and small helpers.  Everything
// downstream is pure integer/rational arithmetic; no floating point anywhere.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace birclass {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Binomial coefficient, total on all integers: C(m,j) = 0 for j < 0 or j > m.
inline Int binomial(const Int& m, const Int& j) {
    if (j < 0 || j > m) return 0;
    Int k = j;
    if (m - j < k) k = m - j;
    Int num = 1, den = 1;
    for (Int i = 0; i < k; ++i) {
        num *= m - i;
        den *= i + 1;
    }
    return num / den;  // exact: den | num for consecutive products
}

inline Int factorial(const Int& r) {
    Int out = 1;
    for (Int i = 2; i <= r; ++i) out *= i;
    return out;
}

/// Floor of an exact rational.
inline Int floor_rat(const Rat& q) {
    const Int num = boost::multiprecision::numerator(q);
    const Int den = boost::multiprecision::denominator(q);  // den > 0
    Int quo = num / den;
    if (quo * den != num && num < 0) --quo;
    return quo;
}

/// Ceiling of an exact rational.
inline Int ceil_rat(const Rat& q) {
    const Int num = boost::multiprecision::numerator(q);
    const Int den = boost::multiprecision::denominator(q);
    Int quo = num / den;
    if (quo * den != num && num > 0) ++quo;
    return quo;
}

inline bool is_integer(const Rat& q) {
    return boost::multiprecision::denominator(q) == 1;
}

/// Exact integer value of a rational known to be integral.
inline Int as_integer(const Rat& q) {
    if (!is_integer(q)) throw std::invalid_argument("as_integer: value is not integral");
    return boost::multiprecision::numerator(q);
}

/// Floor division on integers (round toward -infinity).
inline Int floor_div(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("floor_div: zero divisor");
    Int quo = num / den;
    if (quo * den != num && ((num < 0) != (den < 0))) --quo;
    return quo;
}

}  // namespace birclass
