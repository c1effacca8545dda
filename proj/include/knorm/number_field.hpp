#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "knorm/errors.hpp"
#include "knorm/polynomial.hpp"
#include "knorm/rational.hpp"
#include "knorm/real_roots.hpp"

namespace knorm {

class FieldElement;

enum class IrreducibilityStatus { verified, asserted };

// A number field F = Q[x]/(p(x)) for monic squarefree p, presented as an
// immutable shared handle.  Field identity is handle identity: elements and
// places only combine within one handle.
class NumberField {
public:
    const std::string& name() const { return d_->name; }
    const std::string& var() const { return d_->var; }
    const Polynomial<Rational>& min_poly() const { return d_->min_poly; }
    std::size_t degree() const { return d_->degree; }
    IrreducibilityStatus status() const { return d_->status; }
    // Nonempty exactly when status() == asserted.
    const std::string& warning() const { return d_->warning; }

    bool same_as(const NumberField& o) const { return d_ == o.d_; }

    // Isolating intervals of the real roots of min_poly, increasing order.
    const std::vector<IsolatingInterval>& real_root_boxes() const { return d_->real_root_boxes; }

    FieldElement zero() const;
    FieldElement one() const;
    // The residue class of the defining variable (the chosen root).
    FieldElement generator() const;
    FieldElement from_rational(const Rational& r) const;
    // Element from coefficients in ascending degree order; lists shorter
    // than the degree are zero-padded, longer ones reduced mod min_poly.
    FieldElement element(std::vector<Rational> coeffs) const;
    FieldElement element_from_poly(const Polynomial<Rational>& p) const;

private:
    struct Data {
        std::string name;
        std::string var;
        Polynomial<Rational> min_poly;
        std::size_t degree;
        IrreducibilityStatus status;
        std::string warning;
        std::vector<IsolatingInterval> real_root_boxes; // increasing root order
    };
    explicit NumberField(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    std::shared_ptr<const Data> d_;

    friend NumberField make_number_field(const Polynomial<Rational>&, std::string, std::string);
};

// An element of F, canonical as a coefficient vector of length degree(F)
// (its representative polynomial of degree < deg min_poly).
class FieldElement {
public:
    FieldElement(NumberField field, std::vector<Rational> coeffs);

    const NumberField& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Polynomial<Rational> repr_poly() const { return Polynomial<Rational>(c_); }

    bool is_zero() const;
    bool is_one() const;
    // The rational value of a constant element, if it is one.
    bool is_rational() const;
    const Rational& rational_part() const { return c_[0]; }

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    FieldElement operator-() const;
    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const { return *this * o.inverse(); }

    // Multiplicative inverse by extended Euclid against min_poly.  A
    // nontrivial gcd on the way is a reducibility witness.
    FieldElement inverse() const;

    std::string to_string() const;

private:
    void check_same_field(const FieldElement& o) const;
    NumberField field_;
    std::vector<Rational> c_; // size == field degree
};

inline FieldElement zero_like(const FieldElement& a) { return a.field().zero(); }
inline FieldElement one_like(const FieldElement& a) { return a.field().one(); }

// A real place of F: the embedding determined by one real root of
// min_poly, identified by its 0-based position in increasing root order.
struct RealPlace {
    NumberField field;
    std::size_t index;
    IsolatingInterval box;
};

// Validates monic + squarefree exactly, rejects polynomials with a rational
// root, and probes irreducibility mod small primes; when the probes cannot
// settle it the field is built with status `asserted` and a warning.
NumberField make_number_field(const Polynomial<Rational>& min_poly, std::string name = "F",
                              std::string var = "x");

// All real places in increasing root order; stable indices.
std::vector<RealPlace> real_places(const NumberField& F);

// (r1, r2) with r1 + 2*r2 = degree.
std::pair<int, int> signature(const NumberField& F);

// Exact sign of the element under the embedding at v; 0 iff the element is
// zero.  A certified zero sign for a nonzero element throws
// inconsistency_error (it witnesses a reducible min_poly).
int sign_at_place(const FieldElement& a, const RealPlace& v);

// Weak approximation at the real places: a nonzero element whose sign at
// place i equals targets[i] (each +1 or -1, one per real place).
FieldElement element_with_signs(const NumberField& F, const std::vector<int>& targets);

// Value of a rational polynomial at a field element (Horner over F).
FieldElement eval_at(const Polynomial<Rational>& p, const FieldElement& point);

} // namespace knorm
