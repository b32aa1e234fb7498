#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace mzeta {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int factorial(int n) {
    if (n < 0) throw usage_error("factorial: negative argument");
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i; // always exact at this point
    }
    return r;
}

/// Exact integer extraction; throws if q is not integral.
inline Int as_integer(const Rational& q, const char* what) {
    if (boost::multiprecision::denominator(q) != 1)
        throw domain_error(std::string("expected an integer value in ") + what);
    return boost::multiprecision::numerator(q);
}

} // namespace mzeta
