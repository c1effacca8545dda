#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "knorm/errors.hpp"

namespace knorm {

using Integer = mpz_class;

// Exact arbitrary-precision rational, always in lowest terms with positive
// denominator.  Zero is 0/1.  All operations are exact; there is no
// floating point anywhere in this library.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {} // NOLINT: implicit by design, rationals embed integers
    Rational(const Integer& n) : q_(n) {}

    Rational(long n, long d) : Rational(Integer(n), Integer(d)) {}
    Rational(const Integer& n, const Integer& d) {
        if (d == 0) throw precondition_error("Rational: zero denominator");
        q_ = mpq_class(n, d);
        q_.canonicalize();
    }

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw precondition_error("Rational: division by zero");
        return Rational(mpq_class(q_ / o.q_));
    }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return q_ == o.q_; }
    bool operator!=(const Rational& o) const { return q_ != o.q_; }
    bool operator<(const Rational& o) const { return q_ < o.q_; }
    bool operator<=(const Rational& o) const { return q_ <= o.q_; }
    bool operator>(const Rational& o) const { return q_ > o.q_; }
    bool operator>=(const Rational& o) const { return q_ >= o.q_; }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    // Largest integer <= *this.
    Integer floor() const {
        Integer f;
        mpz_fdiv_q(f.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
        return f;
    }

    // Text form: optional sign, decimal integer, optionally "/" and a
    // positive decimal integer.  "-7/3", "4".  Anything else (including a
    // zero denominator) is malformed.
    static Rational parse(std::string_view s);

    // Canonical text form; parse(to_string(x)) == x, byte-identical both ways.
    std::string to_string() const {
        std::string out = q_.get_num().get_str();
        if (q_.get_den() != 1) {
            out += '/';
            out += q_.get_den().get_str();
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_; // invariant: canonical (lowest terms, positive denominator)
};

inline Rational Rational::parse(std::string_view s) {
    const auto fail = [&]() -> Rational {
        throw malformed_input("invalid rational \"" + std::string(s) + "\"");
    };
    std::size_t i = 0;
    bool negative = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        negative = s[i] == '-';
        ++i;
    }
    std::size_t num_begin = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i == num_begin) return fail();
    Integer num(std::string(s.substr(num_begin, i - num_begin)), 10);
    if (negative) num = -num;
    if (i == s.size()) return Rational(num);
    if (s[i] != '/') return fail();
    ++i;
    std::size_t den_begin = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i == den_begin || i != s.size()) return fail();
    Integer den(std::string(s.substr(den_begin)), 10);
    if (den == 0) return fail(); // grammar requires a *positive* denominator
    return Rational(num, den);
}

// Hooks used by the generic polynomial code (a coefficient field must
// provide these; for number-field elements they carry the parent field).
inline Rational zero_like(const Rational&) { return Rational(); }
inline Rational one_like(const Rational&) { return Rational(1); }

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

} // namespace knorm
