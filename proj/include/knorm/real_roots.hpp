#pragma once

#include <cstddef>
#include <vector>

#include "knorm/errors.hpp"
#include "knorm/polynomial.hpp"
#include "knorm/rational.hpp"

namespace knorm {

// Rational-endpoint interval whose open interior contains exactly one real
// root of the polynomial it was produced for; neither endpoint is a root.
struct IsolatingInterval {
    Rational low;
    Rational high;

    IsolatingInterval(Rational lo, Rational hi) : low(std::move(lo)), high(std::move(hi)) {
        if (!(low < high))
            throw precondition_error("IsolatingInterval: low must be < high");
    }

    Rational width() const { return high - low; }
    Rational midpoint() const { return (low + high) / Rational(2); }
    bool contains(const Rational& x) const { return low < x && x < high; }
};

// Canonical Sturm chain: s0 = p, s1 = p', s_{i+1} = -rem(s_{i-1}, s_i),
// truncated before the zero remainder.  Throws if p is zero or the chain
// fails to end in a nonzero constant (p not squarefree).
template <ExactField K>
std::vector<Polynomial<K>> sturm_chain(const Polynomial<K>& p) {
    if (p.is_zero()) throw precondition_error("sturm_chain: zero polynomial");
    std::vector<Polynomial<K>> chain;
    chain.push_back(p);
    Polynomial<K> d = p.derivative();
    if (!d.is_zero()) {
        chain.push_back(std::move(d));
        while (true) {
            auto [q, r] = poly_divrem(chain[chain.size() - 2], chain.back());
            if (r.is_zero()) break;
            chain.push_back(-r);
        }
    }
    if (*chain.back().degree() != 0)
        throw precondition_error("sturm_chain: polynomial is not squarefree");
    return chain;
}

// Number of sign changes in a sequence, zeros skipped.
int sign_variations(const std::vector<int>& signs);

// Sign variations of the chain at -inf or +inf.  The sign of each member's
// leading coefficient is read through `lc_sign`, so the same chain serves
// every real embedding of its coefficient field.
template <class K, class SignFn>
int sign_variations_at_infinity(const std::vector<Polynomial<K>>& chain,
                                bool at_plus_infinity, SignFn lc_sign) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& s : chain) {
        int sg = lc_sign(s.leading());
        if (!at_plus_infinity && (*s.degree() % 2 == 1)) sg = -sg;
        signs.push_back(sg);
    }
    return sign_variations(signs);
}

// Exact count of distinct real roots of a squarefree rational polynomial,
// over all of R or inside an open interval with non-root endpoints.
int count_real_roots(const Polynomial<Rational>& p);
int count_real_roots(const Polynomial<Rational>& p, const Rational& lo, const Rational& hi);

// Pairwise-disjoint isolating intervals, one per real root, in increasing
// root order.  Consecutive intervals have disjoint closures.
std::vector<IsolatingInterval> isolate_real_roots(const Polynomial<Rational>& p);

// Shrink `box` (which must isolate a root of p) by bisection until its
// width is at most `width_bound`, still isolating the same root.
IsolatingInterval refine_interval(const Polynomial<Rational>& p, const IsolatingInterval& box,
                                  const Rational& width_bound);

// Exact sign of q at the algebraic number isolated by `box` (a root of the
// squarefree polynomial p).  Returns 0 iff gcd(p, q) is nonconstant, which
// for irreducible p means p | q.
int sign_at_root(const Polynomial<Rational>& p, const IsolatingInterval& box,
                 const Polynomial<Rational>& q);

// Cauchy bound: every real root of p lies strictly inside (-B, B).
Rational cauchy_root_bound(const Polynomial<Rational>& p);

} // namespace knorm
