#pragma once

// Independent test oracles.  Nothing here goes through the Sturm machinery
// or the norm engine; each oracle certifies signs by plain rational
// comparison or interval bisection, so the library can be checked against
// values it did not itself produce.

#include <vector>

#include "knorm/rational.hpp"

namespace knorm::test {

// Sign of sqrt(m) - b for a non-square integer m >= 2 and rational b, by
// bisecting x^2 - m on [0, max(m, 1)] until b leaves the bracket.
inline int bisect_sign_sqrt_minus(long m, const Rational& b) {
    if (b.sign() <= 0) return 1; // sqrt(m) > 0 >= b
    Rational lo(0), hi(m > 1 ? m : 1);
    while (lo < b && b < hi) {
        const Rational mid = (lo + hi) / Rational(2);
        if (mid * mid < Rational(m))
            lo = mid;
        else
            hi = mid;
    }
    return b <= lo ? 1 : -1; // b is rational, sqrt(m) is not, so never 0
}

// Sign of -sqrt(m) - b.
inline int bisect_sign_neg_sqrt_minus(long m, const Rational& b) {
    return -bisect_sign_sqrt_minus(m, -b);
}

// Sign of cbrt(m) - c: the cube is strictly increasing, so compare m
// against c^3 exactly.
inline int sign_cbrt_minus(long m, const Rational& c) {
    const Rational diff = Rational(m) - c * c * c;
    return diff.sign();
}

// Sign of u*sqrt(m) + w at the embedding sending sqrt(m) to +sqrt(m)
// (plus_root = true) or to -sqrt(m).
inline int sign_linear_in_sqrt(long m, const Rational& u, const Rational& w, bool plus_root) {
    if (u.is_zero()) return w.sign();
    const Rational threshold = -w / u; // u*s + w vs 0  <=>  s vs -w/u (sign of u decides)
    const int cmp = plus_root ? bisect_sign_sqrt_minus(m, threshold)
                              : bisect_sign_neg_sqrt_minus(m, threshold);
    return u.sign() > 0 ? cmp : -cmp;
}

} // namespace knorm::test
