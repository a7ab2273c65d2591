#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace wigloc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt b = 1;
    for (unsigned i = 0; i < k; ++i) {
        b *= n - i;
        b /= i + 1;
    }
    return b;
}

}  // namespace wigloc
