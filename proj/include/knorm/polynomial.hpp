#pragma once

#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "knorm/errors.hpp"
#include "knorm/rational.hpp"

namespace knorm {

// An exact coefficient field: rationals, or number-field elements.  The
// *_like hooks construct constants tied to the same field instance as the
// sample argument.
template <class K>
concept ExactField = requires(const K& a, const K& b) {
    { a + b } -> std::convertible_to<K>;
    { a - b } -> std::convertible_to<K>;
    { a * b } -> std::convertible_to<K>;
    { a / b } -> std::convertible_to<K>;
    { -a } -> std::convertible_to<K>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { zero_like(a) } -> std::convertible_to<K>;
    { one_like(a) } -> std::convertible_to<K>;
};

// Dense univariate polynomial over an exact field, coefficients in
// ascending degree order.  The trailing coefficient is nonzero; the zero
// polynomial is the empty list and its degree is the distinguished
// "minus infinity" value std::nullopt.
template <ExactField K>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial monomial(const K& coeff, std::size_t degree) {
        if (coeff.is_zero()) return Polynomial{};
        std::vector<K> c(degree + 1, zero_like(coeff));
        c[degree] = coeff;
        return Polynomial(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    std::optional<std::size_t> degree() const {
        if (c_.empty()) return std::nullopt;
        return c_.size() - 1;
    }
    const std::vector<K>& coeffs() const { return c_; }
    const K& operator[](std::size_t i) const { return c_[i]; }
    const K& leading() const {
        if (c_.empty()) throw precondition_error("leading coefficient of the zero polynomial");
        return c_.back();
    }

    bool operator==(const Polynomial& o) const { return c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial operator-() const {
        std::vector<K> c;
        c.reserve(c_.size());
        for (const K& a : c_) c.push_back(-a);
        return Polynomial(std::move(c));
    }

    Polynomial operator+(const Polynomial& o) const {
        const auto& lo = c_.size() <= o.c_.size() ? c_ : o.c_;
        const auto& hi = c_.size() <= o.c_.size() ? o.c_ : c_;
        std::vector<K> c(hi);
        for (std::size_t i = 0; i < lo.size(); ++i) c[i] = c[i] + lo[i];
        return Polynomial(std::move(c));
    }
    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

    Polynomial operator*(const Polynomial& o) const {
        if (c_.empty() || o.c_.empty()) return Polynomial{};
        std::vector<K> c(c_.size() + o.c_.size() - 1, zero_like(c_[0]));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                c[i + j] = c[i + j] + c_[i] * o.c_[j];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const Polynomial& p, const K& s) {
        if (s.is_zero()) return Polynomial{};
        std::vector<K> c;
        c.reserve(p.c_.size());
        for (const K& a : p.c_) c.push_back(a * s);
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const K& s, const Polynomial& p) { return p * s; }

    // Exact value at a point (Horner).  The point may live in an extension
    // of the coefficient field; see eval_at in number_field.hpp.
    K operator()(const K& x) const {
        K acc = zero_like(x);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial{};
        std::vector<K> c;
        c.reserve(c_.size() - 1);
        K k = one_like(c_[0]);
        const K one = k;
        for (std::size_t i = 1; i < c_.size(); ++i) {
            c.push_back(c_[i] * k);
            k = k + one;
        }
        return Polynomial(std::move(c));
    }

    Polynomial monic() const {
        if (c_.empty()) throw precondition_error("monic(): zero polynomial");
        return *this * (one_like(c_.back()) / c_.back());
    }

    bool is_monic() const { return !c_.empty() && c_.back() == one_like(c_.back()); }

    // this(inner): polynomial composition by Horner.
    Polynomial compose(const Polynomial& inner) const {
        Polynomial acc;
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc = acc * inner + Polynomial(std::vector<K>{c_[i]});
        }
        return acc;
    }

    std::string to_string(const std::string& var) const
        requires requires(const K& k) { { k.to_string() } -> std::convertible_to<std::string>; }
    {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero()) continue;
            std::string cs = c_[i].to_string();
            bool negated = false;
            if (!out.empty()) {
                if (cs.size() > 1 && cs[0] == '-' && cs.find_first_of("+- ", 1) == std::string::npos) {
                    negated = true;
                    cs = cs.substr(1);
                }
                out += negated ? " - " : " + ";
            }
            const bool compound = cs.find_first_of("+- ", 1) != std::string::npos;
            if (compound) cs = "(" + cs + ")";
            if (i == 0) {
                out += cs;
            } else {
                if (cs == "1") cs.clear();
                else if (cs == "-1") cs = "-";
                else cs += "*";
                out += cs + var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<K> c_;
};

// --- free operations ------------------------------------------------------

// Euclidean division: dividend = quotient*divisor + remainder,
// deg remainder < deg divisor.  Exact.
template <ExactField K>
std::pair<Polynomial<K>, Polynomial<K>> poly_divrem(const Polynomial<K>& dividend,
                                                    const Polynomial<K>& divisor) {
    if (divisor.is_zero())
        throw precondition_error("poly_divrem: division by the zero polynomial");
    if (dividend.is_zero()) return {Polynomial<K>{}, Polynomial<K>{}};
    const std::size_t db = *divisor.degree();
    if (*dividend.degree() < db) return {Polynomial<K>{}, dividend};

    std::vector<K> r = dividend.coeffs();
    std::vector<K> q(r.size() - db, zero_like(divisor.leading()));
    const K& lead = divisor.leading();
    for (std::size_t i = r.size(); i-- > db;) {
        if (r[i].is_zero()) continue;
        K f = r[i] / lead;
        q[i - db] = f;
        for (std::size_t j = 0; j <= db; ++j)
            r[i - db + j] = r[i - db + j] - f * divisor[j];
    }
    r.erase(r.begin() + static_cast<std::ptrdiff_t>(db), r.end());
    return {Polynomial<K>(std::move(q)), Polynomial<K>(std::move(r))};
}

// Monic gcd by the Euclidean algorithm, each remainder normalized monic
// to keep coefficients tame.
template <ExactField K>
Polynomial<K> poly_gcd(const Polynomial<K>& a, const Polynomial<K>& b) {
    if (a.is_zero() && b.is_zero())
        throw precondition_error("poly_gcd: both inputs are zero");
    Polynomial<K> r0 = a, r1 = b;
    if (r0.is_zero()) return r1.monic();
    while (!r1.is_zero()) {
        auto [q, r2] = poly_divrem(r0, r1);
        r0 = std::move(r1);
        r1 = r2.is_zero() ? std::move(r2) : r2.monic();
    }
    return r0.monic();
}

// Extended Euclid: returns (g, u, v) with u*a + v*b = g, g monic.
template <ExactField K>
std::tuple<Polynomial<K>, Polynomial<K>, Polynomial<K>>
poly_extended_gcd(const Polynomial<K>& a, const Polynomial<K>& b) {
    if (a.is_zero() && b.is_zero())
        throw precondition_error("poly_extended_gcd: both inputs are zero");
    const K one = one_like((a.is_zero() ? b : a).leading());
    Polynomial<K> r0 = a, r1 = b;
    Polynomial<K> u0(std::vector<K>{one}), u1;
    Polynomial<K> v0, v1(std::vector<K>{one});
    while (!r1.is_zero()) {
        auto [q, r2] = poly_divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r2);
        Polynomial<K> u2 = u0 - q * u1;
        u0 = std::move(u1);
        u1 = std::move(u2);
        Polynomial<K> v2 = v0 - q * v1;
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    const K scale = one / r0.leading();
    return {r0 * scale, u0 * scale, v0 * scale};
}

// Monic p / gcd(p, p'): same roots as p, all simple.
template <ExactField K>
Polynomial<K> poly_squarefree_part(const Polynomial<K>& p) {
    if (p.is_zero()) throw precondition_error("poly_squarefree_part: zero input");
    Polynomial<K> d = p.derivative();
    if (d.is_zero()) return p.monic(); // nonzero constant
    Polynomial<K> g = poly_gcd(p, d);
    auto [q, r] = poly_divrem(p, g);
    return q.monic();
}

// Interpolating polynomial through (xs[i], ys[i]); nodes must be distinct.
template <ExactField K>
Polynomial<K> lagrange_interpolant(const std::vector<K>& xs, const std::vector<K>& ys) {
    if (xs.size() != ys.size())
        throw precondition_error("lagrange_interpolant: node/value count mismatch");
    if (xs.empty()) return Polynomial<K>{};
    const K one = one_like(xs[0]);
    Polynomial<K> acc;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Polynomial<K> num(std::vector<K>{one});
        K denom = one;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            if (xs[i] == xs[j])
                throw precondition_error("lagrange_interpolant: duplicate node");
            num = num * Polynomial<K>(std::vector<K>{-xs[j], one});
            denom = denom * (xs[i] - xs[j]);
        }
        acc = acc + num * (ys[i] / denom);
    }
    return acc;
}

} // namespace knorm
