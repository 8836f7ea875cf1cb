#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace sdpdeg {

// Exact arbitrary-precision integer and rational types. cpp_rational keeps
// gcd(|num|, den) = 1 and den >= 1 after every operation.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return rat_den(q) == 1; }

/// Converts an exact rational to Int, throwing if it is not integral.
inline Int to_int(const Rat& q, const char* context = "value") {
    if (!is_integer(q))
        throw std::runtime_error(std::string(context) + ": expected integer, got " +
                                 q.str());
    return rat_num(q);
}

/// Binomial coefficient via the falling factorial a(a-1)...(a-k+1)/k!,
/// defined for any integer a (including negative) and k >= 0.
/// binomial(a, k) = 0 for 0 <= a < k; binomial(a, 0) = 1.
inline Int binomial(const Int& a, int k) {
    if (k < 0) throw std::invalid_argument("binomial: k must be nonnegative");
    Int r = 1;
    for (int i = 0; i < k; ++i) {
        r *= a - i;
        r /= i + 1;  // exact: product of i+1 consecutive integers
    }
    return r;
}

inline Int binomial(long a, int k) { return binomial(Int(a), k); }

inline Int pow2(int e) {
    if (e < 0) throw std::invalid_argument("pow2: negative exponent");
    return Int(1) << e;
}

}  // namespace sdpdeg
