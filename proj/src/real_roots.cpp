#include "knorm/real_roots.hpp"

namespace knorm {

namespace {

int rational_sign(const Rational& r) { return r.sign(); }

// Sign variations of a rational chain at a point.
int variations_at(const std::vector<Polynomial<Rational>>& chain, const Rational& x) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& s : chain) signs.push_back(s(x).sign());
    return sign_variations(signs);
}

// Roots of the chain's polynomial in (lo, hi]; with non-root endpoints this
// is the open-interval count.
int chain_count(const std::vector<Polynomial<Rational>>& chain, const Rational& lo,
                const Rational& hi) {
    return variations_at(chain, lo) - variations_at(chain, hi);
}

int chain_count_all(const std::vector<Polynomial<Rational>>& chain) {
    return sign_variations_at_infinity(chain, false, rational_sign) -
           sign_variations_at_infinity(chain, true, rational_sign);
}

// Tight interval around a known rational root m of p, holding only that
// root and avoiding roots at its endpoints.
IsolatingInterval box_around_rational_root(const Polynomial<Rational>& p,
                                           const std::vector<Polynomial<Rational>>& chain,
                                           const Rational& m, Rational delta) {
    while (true) {
        const Rational lo = m - delta, hi = m + delta;
        if (!p(lo).is_zero() && !p(hi).is_zero() && chain_count(chain, lo, hi) == 1)
            return {lo, hi};
        delta = delta / Rational(2);
    }
}

IsolatingInterval refine_with_chain(const Polynomial<Rational>& p,
                                    const std::vector<Polynomial<Rational>>& chain,
                                    IsolatingInterval box, const Rational& width_bound) {
    while (box.width() > width_bound) {
        const Rational m = box.midpoint();
        if (p(m).is_zero()) {
            // The isolated root is exactly m; m is simple since p is squarefree.
            return box_around_rational_root(p, chain, m, width_bound / Rational(4));
        }
        if (chain_count(chain, box.low, m) == 1)
            box = IsolatingInterval(box.low, m);
        else
            box = IsolatingInterval(m, box.high);
    }
    return box;
}

void require_isolating(const Polynomial<Rational>& p,
                       const std::vector<Polynomial<Rational>>& chain,
                       const IsolatingInterval& box) {
    if (p(box.low).is_zero() || p(box.high).is_zero())
        throw precondition_error("interval endpoint is a root");
    if (chain_count(chain, box.low, box.high) != 1)
        throw precondition_error("interval does not isolate exactly one root");
}

void isolate_in(const Polynomial<Rational>& p, const std::vector<Polynomial<Rational>>& chain,
                const Rational& lo, const Rational& hi, std::vector<IsolatingInterval>& out) {
    const int n = chain_count(chain, lo, hi);
    if (n == 0) return;
    if (n == 1) {
        out.emplace_back(lo, hi);
        return;
    }
    const Rational m = (lo + hi) / Rational(2);
    if (p(m).is_zero()) {
        const Rational delta0 = (hi - lo) / Rational(4);
        IsolatingInterval pin = box_around_rational_root(p, chain, m, delta0);
        isolate_in(p, chain, lo, pin.low, out);
        out.push_back(pin);
        isolate_in(p, chain, pin.high, hi, out);
        return;
    }
    isolate_in(p, chain, lo, m, out);
    isolate_in(p, chain, m, hi, out);
}

} // namespace

int sign_variations(const std::vector<int>& signs) {
    int count = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

Rational cauchy_root_bound(const Polynomial<Rational>& p) {
    if (p.is_zero()) throw precondition_error("cauchy_root_bound: zero polynomial");
    Rational max;
    const Rational lead_abs = p.leading().abs();
    for (std::size_t i = 0; i + 1 < p.coeffs().size(); ++i) {
        Rational q = p[i].abs() / lead_abs;
        if (q > max) max = q;
    }
    return Rational(1) + max;
}

int count_real_roots(const Polynomial<Rational>& p) {
    return chain_count_all(sturm_chain(p));
}

int count_real_roots(const Polynomial<Rational>& p, const Rational& lo, const Rational& hi) {
    if (!(lo < hi)) throw precondition_error("count_real_roots: empty range");
    auto chain = sturm_chain(p);
    if (p(lo).is_zero() || p(hi).is_zero())
        throw precondition_error("count_real_roots: range endpoint is a root");
    return chain_count(chain, lo, hi);
}

std::vector<IsolatingInterval> isolate_real_roots(const Polynomial<Rational>& p) {
    auto chain = sturm_chain(p);
    std::vector<IsolatingInterval> out;
    if (*p.degree() == 0) return out;
    const Rational bound = cauchy_root_bound(p);
    isolate_in(p, chain, -bound, bound, out);
    // Split shared endpoints so consecutive closures are disjoint.
    for (std::size_t i = 1; i < out.size(); ++i) {
        while (out[i - 1].high == out[i].low)
            out[i - 1] = refine_with_chain(p, chain, out[i - 1],
                                           out[i - 1].width() / Rational(2));
    }
    return out;
}

IsolatingInterval refine_interval(const Polynomial<Rational>& p, const IsolatingInterval& box,
                                  const Rational& width_bound) {
    if (width_bound <= Rational(0))
        throw precondition_error("refine_interval: width bound must be positive");
    auto chain = sturm_chain(p);
    require_isolating(p, chain, box);
    return refine_with_chain(p, chain, box, width_bound);
}

int sign_at_root(const Polynomial<Rational>& p, const IsolatingInterval& box,
                 const Polynomial<Rational>& q) {
    auto chain = sturm_chain(p);
    require_isolating(p, chain, box);
    if (q.is_zero()) return 0;
    if (*q.degree() >= 1 || *p.degree() == 0) {
        // Nonconstant q: a common factor with irreducible p means p | q.
        if (*poly_gcd(p, q).degree() >= 1) return 0;
    }
    if (*p.degree() == 1) {
        const Rational root = -p[0] / p[1];
        return q(root).sign();
    }
    const Polynomial<Rational> q_sf = poly_squarefree_part(q);
    const auto q_chain = *q_sf.degree() >= 1 ? sturm_chain(q_sf)
                                             : std::vector<Polynomial<Rational>>{};
    IsolatingInterval cur = box;
    while (true) {
        const int sl = q(cur.low).sign();
        const int sh = q(cur.high).sign();
        if (sl != 0 && sl == sh &&
            (q_chain.empty() || chain_count(q_chain, cur.low, cur.high) == 0))
            return sl;
        const Rational m = cur.midpoint();
        if (p(m).is_zero()) return q(m).sign(); // the isolated root is m itself
        if (chain_count(chain, cur.low, m) == 1)
            cur = IsolatingInterval(cur.low, m);
        else
            cur = IsolatingInterval(m, cur.high);
    }
}

} // namespace knorm
