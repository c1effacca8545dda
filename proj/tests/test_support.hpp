#pragma once

#include <random>
#include <vector>

#include "knorm/number_field.hpp"
#include "knorm/polynomial.hpp"
#include "knorm/rational.hpp"

namespace knorm::test {

using Rng = std::mt19937_64;

inline Polynomial<Rational> poly(std::vector<long> coeffs) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (long a : coeffs) c.emplace_back(a);
    return Polynomial<Rational>(std::move(c));
}

inline Rational frac(long n, long d = 1) { return Rational(n, d); }

inline Rational random_rational(Rng& rng, long lo = -20, long hi = 20, long den_max = 6) {
    std::uniform_int_distribution<long> num(lo, hi);
    std::uniform_int_distribution<long> den(1, den_max);
    return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(Rng& rng, long lo = -20, long hi = 20,
                                        long den_max = 6) {
    while (true) {
        Rational r = random_rational(rng, lo, hi, den_max);
        if (!r.is_zero()) return r;
    }
}

inline Polynomial<Rational> random_poly(Rng& rng, std::size_t max_deg, long lo = -9,
                                        long hi = 9) {
    std::uniform_int_distribution<std::size_t> deg(0, max_deg);
    const std::size_t d = deg(rng);
    std::vector<Rational> c;
    c.reserve(d + 1);
    for (std::size_t i = 0; i <= d; ++i) c.push_back(random_rational(rng, lo, hi, 4));
    return Polynomial<Rational>(std::move(c));
}

inline Polynomial<Rational> random_nonzero_poly(Rng& rng, std::size_t max_deg, long lo = -9,
                                                long hi = 9) {
    while (true) {
        auto p = random_poly(rng, max_deg, lo, hi);
        if (!p.is_zero()) return p;
    }
}

inline FieldElement random_nonzero_element(Rng& rng, const NumberField& F, long lo = -9,
                                           long hi = 9) {
    while (true) {
        std::vector<Rational> c;
        c.reserve(F.degree());
        for (std::size_t i = 0; i < F.degree(); ++i) c.push_back(random_rational(rng, lo, hi, 3));
        FieldElement e = F.element(std::move(c));
        if (!e.is_zero()) return e;
    }
}

} // namespace knorm::test
