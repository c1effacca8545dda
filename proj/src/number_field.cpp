#include "knorm/number_field.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace knorm {

namespace {

// --- polynomial arithmetic over F_p (small p), for irreducibility probes ---

using FpPoly = std::vector<std::uint64_t>; // ascending coefficients mod p

void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t fp_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

std::uint64_t fp_inv(std::uint64_t a, std::uint64_t p) { return fp_pow(a, p - 2, p); }

FpPoly fp_rem(FpPoly a, const FpPoly& b, std::uint64_t p) {
    const std::uint64_t lead_inv = fp_inv(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint64_t f = a.back() * lead_inv % p;
        const std::size_t off = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j)
            a[off + j] = (a[off + j] + p * p - f * b[j] % p) % p;
        fp_trim(a);
        if (a.size() < b.size()) break;
    }
    return a;
}

FpPoly fp_divexact(FpPoly a, const FpPoly& b, std::uint64_t p) {
    FpPoly q(a.size() - b.size() + 1, 0);
    const std::uint64_t lead_inv = fp_inv(b.back(), p);
    for (std::size_t off = q.size(); off-- > 0;) {
        const std::uint64_t f = a[off + b.size() - 1] * lead_inv % p;
        q[off] = f;
        for (std::size_t j = 0; j < b.size(); ++j)
            a[off + j] = (a[off + j] + p * p - f * b[j] % p) % p;
    }
    return q;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        FpPoly r = fp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        const std::uint64_t s = fp_inv(a.back(), p);
        for (auto& c : a) c = c * s % p;
    }
    return a;
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    fp_trim(c);
    if (c.size() >= m.size()) c = fp_rem(std::move(c), m, p);
    return c;
}

FpPoly fp_powmod(FpPoly base, std::uint64_t e, const FpPoly& m, std::uint64_t p) {
    FpPoly r{1};
    if (base.size() >= m.size()) base = fp_rem(std::move(base), m, p);
    while (e) {
        if (e & 1) r = fp_mulmod(r, base, m, p);
        base = fp_mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

FpPoly fp_derivative(const FpPoly& a, std::uint64_t p) {
    FpPoly d;
    for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * (i % p) % p);
    fp_trim(d);
    return d;
}

// Image of a monic rational polynomial mod p, or empty if some coefficient
// denominator vanishes mod p.
FpPoly reduce_mod_p(const Polynomial<Rational>& f, std::uint64_t p) {
    FpPoly out;
    out.reserve(f.coeffs().size());
    for (const Rational& c : f.coeffs()) {
        const std::uint64_t den = mpz_fdiv_ui(c.denominator().get_mpz_t(), p);
        if (den == 0) return {};
        const std::uint64_t num = mpz_fdiv_ui(c.numerator().get_mpz_t(), p);
        out.push_back(num * fp_inv(den, p) % p);
    }
    return out; // monic f: leading coefficient is 1, never trimmed away
}

// Multiset of irreducible-factor degrees of monic squarefree f mod p
// (distinct-degree factorization).
std::vector<std::pair<std::size_t, std::size_t>> fp_factor_degrees(FpPoly f, std::uint64_t p) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    FpPoly h{0, 1}; // x
    std::size_t d = 0;
    while (f.size() > 1) {
        ++d;
        if (2 * d > f.size() - 1) {
            out.emplace_back(f.size() - 1, 1);
            break;
        }
        h = fp_powmod(std::move(h), p, f, p);
        FpPoly hx = h;
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = (hx[1] + p - 1) % p; // h - x
        fp_trim(hx);
        FpPoly g = fp_gcd(hx, f, p);
        if (g.size() > 1) {
            out.emplace_back(d, (g.size() - 1) / d);
            f = fp_divexact(std::move(f), g, p);
            if (h.size() >= f.size()) h = fp_rem(std::move(h), f, p);
        }
    }
    return out;
}

// Bitmask of degrees realizable as sums over a sub-multiset of the factor
// degrees: the possible degrees of a monic factor over Q.
std::uint64_t subset_sum_mask(const std::vector<std::pair<std::size_t, std::size_t>>& degs) {
    std::uint64_t mask = 1;
    for (auto [d, count] : degs)
        for (std::size_t k = 0; k < count; ++k) mask |= mask << d;
    return mask;
}

constexpr std::uint64_t kProbePrimes[] = {2,  3,  5,  7,  11, 13, 17, 19,
                                          23, 29, 31, 37, 41, 43, 47};
constexpr int kMaxUsableProbes = 6;

// Any rational root of p must be k/c with c = lcm of the coefficient
// denominators (p is monic).  Refine each isolating interval until it can
// contain at most one such candidate, then test it exactly.
void reject_rational_roots(const Polynomial<Rational>& p,
                           const std::vector<IsolatingInterval>& boxes, const std::string& name) {
    Integer c(1);
    for (const Rational& a : p.coeffs()) c = lcm(c, a.denominator());
    const Rational narrow = Rational(Integer(1), Integer(2) * c * c);
    for (const IsolatingInterval& box : boxes) {
        const IsolatingInterval tight = refine_interval(p, box, narrow);
        const Rational k((tight.high * Rational(c)).floor());
        const Rational candidate = k / Rational(c);
        if (tight.contains(candidate) && p(candidate).is_zero())
            throw precondition_error("field " + name + ": min_poly is reducible (rational root " +
                                     candidate.to_string() + ")");
    }
}

} // namespace

NumberField make_number_field(const Polynomial<Rational>& min_poly, std::string name,
                              std::string var) {
    if (min_poly.is_zero() || *min_poly.degree() < 1)
        throw precondition_error("field " + name + ": min_poly must have degree >= 1");
    if (!min_poly.is_monic())
        throw precondition_error("field " + name + ": min_poly must be monic");
    if (*poly_gcd(min_poly, min_poly.derivative()).degree() != 0)
        throw precondition_error("field " + name + ": min_poly is not squarefree");

    const std::size_t n = *min_poly.degree();
    auto boxes = isolate_real_roots(min_poly);

    IrreducibilityStatus status = IrreducibilityStatus::verified;
    std::string warning;
    if (n >= 64) {
        // no bit-mask room for the degree-pattern argument at such sizes
        status = IrreducibilityStatus::asserted;
        warning = "field " + name + ": irreducibility of min_poly not verified " +
                  "(degree too large for modular probing); results assume it is irreducible";
        reject_rational_roots(min_poly, boxes, name);
    } else if (n >= 2) {
        reject_rational_roots(min_poly, boxes, name);

        // Degrees a rational factor could have, narrowed by factor patterns
        // mod several good primes; an empty set proves irreducibility.
        std::uint64_t allowed = 0;
        for (std::size_t d = 1; d < n; ++d) allowed |= std::uint64_t(1) << d;
        int probes = 0;
        for (std::uint64_t p : kProbePrimes) {
            if (allowed == 0 || probes >= kMaxUsableProbes) break;
            FpPoly image = reduce_mod_p(min_poly, p);
            if (image.empty()) continue;
            if (fp_gcd(image, fp_derivative(image, p), p).size() > 1) continue;
            allowed &= subset_sum_mask(fp_factor_degrees(image, p));
            ++probes;
        }
        if (allowed != 0) {
            status = IrreducibilityStatus::asserted;
            std::ostringstream w;
            w << "field " << name << ": irreducibility of min_poly not verified"
              << " (modular probes leave possible factor degrees";
            for (std::size_t d = 1; d < n; ++d)
                if (allowed & (std::uint64_t(1) << d)) w << ' ' << d;
            w << "); results assume it is irreducible";
            warning = w.str();
        }
    }

    auto data = std::make_shared<NumberField::Data>(NumberField::Data{
        std::move(name), std::move(var), min_poly, n, status, std::move(warning),
        std::move(boxes)});
    return NumberField(std::move(data));
}

FieldElement NumberField::zero() const { return from_rational(Rational(0)); }
FieldElement NumberField::one() const { return from_rational(Rational(1)); }

FieldElement NumberField::from_rational(const Rational& r) const {
    std::vector<Rational> c(degree(), Rational(0));
    c[0] = r;
    return FieldElement(*this, std::move(c));
}

FieldElement NumberField::generator() const {
    return element_from_poly(Polynomial<Rational>::monomial(Rational(1), 1));
}

FieldElement NumberField::element(std::vector<Rational> coeffs) const {
    return element_from_poly(Polynomial<Rational>(std::move(coeffs)));
}

FieldElement NumberField::element_from_poly(const Polynomial<Rational>& p) const {
    Polynomial<Rational> rep = p;
    if (!rep.is_zero() && *rep.degree() >= degree())
        rep = poly_divrem(rep, min_poly()).second;
    std::vector<Rational> c(degree(), Rational(0));
    for (std::size_t i = 0; i < rep.coeffs().size(); ++i) c[i] = rep[i];
    return FieldElement(*this, std::move(c));
}

FieldElement::FieldElement(NumberField field, std::vector<Rational> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
    if (c_.size() != field_.degree())
        throw precondition_error("FieldElement: coefficient vector has wrong length");
}

bool FieldElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& a) { return a.is_zero(); });
}

bool FieldElement::is_one() const {
    if (!c_[0].is_one()) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& a) { return a.is_zero(); });
}

bool FieldElement::is_rational() const {
    return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& a) { return a.is_zero(); });
}

void FieldElement::check_same_field(const FieldElement& o) const {
    if (!field_.same_as(o.field_))
        throw precondition_error("field elements belong to different fields");
}

bool FieldElement::operator==(const FieldElement& o) const {
    check_same_field(o);
    return c_ == o.c_;
}

FieldElement FieldElement::operator-() const {
    std::vector<Rational> c;
    c.reserve(c_.size());
    for (const Rational& a : c_) c.push_back(-a);
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same_field(o);
    std::vector<Rational> c(c_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c_[i];
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same_field(o);
    return field_.element_from_poly(repr_poly() * o.repr_poly());
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw precondition_error("inverse of the zero element");
    auto [g, u, v] = poly_extended_gcd(repr_poly(), field_.min_poly());
    if (*g.degree() != 0)
        throw inconsistency_error(
            "field " + field_.name() + ": element " + to_string() +
            " shares the factor " + g.to_string(field_.var()) +
            " with min_poly, which is therefore reducible");
    return field_.element_from_poly(u);
}

std::string FieldElement::to_string() const { return repr_poly().to_string(field_.var()); }

std::vector<RealPlace> real_places(const NumberField& F) {
    std::vector<RealPlace> out;
    const auto& boxes = F.real_root_boxes();
    out.reserve(boxes.size());
    for (std::size_t i = 0; i < boxes.size(); ++i) out.push_back(RealPlace{F, i, boxes[i]});
    return out;
}

std::pair<int, int> signature(const NumberField& F) {
    const std::size_t r1 = F.real_root_boxes().size();
    return {static_cast<int>(r1), static_cast<int>((F.degree() - r1) / 2)};
}

int sign_at_place(const FieldElement& a, const RealPlace& v) {
    if (!a.field().same_as(v.field))
        throw precondition_error("sign_at_place: place belongs to a different field");
    if (a.is_zero()) return 0;
    if (a.is_rational()) return a.rational_part().sign();
    const int s = sign_at_root(v.field.min_poly(), v.box, a.repr_poly());
    if (s == 0)
        throw inconsistency_error(
            "field " + v.field.name() + ": nonzero element " + a.to_string() +
            " vanishes at a real place, so min_poly is reducible (irreducibility was " +
            (v.field.status() == IrreducibilityStatus::asserted ? "asserted" : "verified") + ")");
    return s;
}

FieldElement element_with_signs(const NumberField& F, const std::vector<int>& targets) {
    const auto places = real_places(F);
    if (targets.size() != places.size())
        throw precondition_error("element_with_signs: need one target per real place");
    for (int t : targets)
        if (t != 1 && t != -1)
            throw precondition_error("element_with_signs: targets must be +1 or -1");
    if (places.empty()) return F.one();

    std::vector<IsolatingInterval> boxes;
    boxes.reserve(places.size());
    for (const auto& v : places) boxes.push_back(v.box);

    while (true) {
        std::vector<Rational> xs, ys;
        xs.reserve(boxes.size());
        ys.reserve(boxes.size());
        for (std::size_t i = 0; i < boxes.size(); ++i) {
            xs.push_back(boxes[i].midpoint());
            ys.push_back(Rational(targets[i]));
        }
        const FieldElement cand = F.element_from_poly(lagrange_interpolant(xs, ys));
        bool ok = !cand.is_zero();
        for (std::size_t i = 0; ok && i < places.size(); ++i)
            ok = sign_at_place(cand, places[i]) == targets[i];
        if (ok) return cand;
        for (std::size_t i = 0; i < boxes.size(); ++i)
            boxes[i] = refine_interval(F.min_poly(), boxes[i], boxes[i].width() / Rational(2));
    }
}

FieldElement eval_at(const Polynomial<Rational>& p, const FieldElement& point) {
    FieldElement acc = point.field().zero();
    for (std::size_t i = p.coeffs().size(); i-- > 0;)
        acc = acc * point + point.field().from_rational(p[i]);
    return acc;
}

} // namespace knorm
