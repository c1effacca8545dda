#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "knorm/relative_ext.hpp"

namespace knorm {

// The archimedean ramification convention used throughout: a real place of
// F counts as ramified in L when no real place of L lies above it.  Every
// machine-readable verdict carries this string.
inline constexpr std::string_view kRamifiedConvention = "ramified = no real place above";

// {f, g} with f, g nonzero elements of one number field.
class SteinbergSymbol {
public:
    SteinbergSymbol(FieldElement f, FieldElement g);
    const FieldElement& f() const { return f_; }
    const FieldElement& g() const { return g_; }
    const NumberField& field() const { return f_.field(); }

private:
    FieldElement f_;
    FieldElement g_;
};

struct SymbolFactor {
    SteinbergSymbol symbol;
    long exponent;
};

// A formal product of Steinberg symbols with integer exponents; the input
// shape is preserved verbatim for reporting, exponents are only reduced
// mod 2 at parity time.
class SymbolProduct {
public:
    SymbolProduct() = default;
    explicit SymbolProduct(std::vector<SymbolFactor> factors);

    static SymbolProduct single(SteinbergSymbol s) {
        return SymbolProduct({SymbolFactor{std::move(s), 1}});
    }

    const std::vector<SymbolFactor>& factors() const { return factors_; }
    bool empty() const { return factors_.empty(); }

    SymbolProduct& append(SteinbergSymbol s, long exponent);

private:
    std::vector<SymbolFactor> factors_;
};

// 2-rank of the torsion of K_{2n}(R): 1 when n = 1 (mod 4), else 0.  A
// theorem constant, not data.
int torsion_rank_at_real(long n);

// Image of the symbol in K_2(R)_tor = Z/2 under the embedding at v: 1 iff
// both entries are negative there (the real Hilbert symbol).
int local_symbol_sign(const SteinbergSymbol& s, const RealPlace& v);

// Image of x under l = (l_v)_{v in S_r} in (Z/2)^{S_r}, S_r order.
struct ParityVector {
    std::vector<int> bits; // one per element of S_r
    bool is_zero() const {
        for (int b : bits)
            if (b) return false;
        return true;
    }
};

ParityVector parity_vector(const RelativeExtension& ext, const SymbolProduct& x);

enum class NormReason { trivial_torsion, empty_Sr, parity_zero, parity_nonzero };

std::string_view to_string(NormReason r);

struct NormVerdict {
    bool is_norm;
    long n;
    std::optional<ParityVector> parity;  // absent when torsion is trivial
    std::vector<RealPlace> failing_places; // nonempty iff !is_norm
    NormReason reason;
    // Set for n > 1 with n = 1 (mod 4): the sign criterion is applied to
    // the symbolic input verbatim, though general K_{2n} classes need not
    // be symbol products.
    bool caveat;
};

// Decides whether x is a norm from K_{2n}(L): automatic when n != 1 (mod 4)
// or S_r is empty, otherwise exactly when the parity vector vanishes.
NormVerdict is_norm(const RelativeExtension& ext, const SymbolProduct& x, long n);

// Single-symbol criterion at n = 1: true iff at every ramified real place
// at least one of the two entries is non-negative.
bool is_norm_single(const RelativeExtension& ext, const SteinbergSymbol& s);

// coker(N_{L/F}) = (Z/2)^rank with rank = |S_r| when n = 1 (mod 4), else 0.
struct ObstructionGroup {
    long n;
    std::size_t rank;
    std::vector<RealPlace> places; // S_r when rank > 0, empty otherwise
    std::string to_string() const;
};

ObstructionGroup obstruction_group(const RelativeExtension& ext, long n);

// A symbol product {f, f} certified non-norm at exactly the given ramified
// place: f is negative at v and positive at every other real place.
SymbolProduct witness_non_norm(const RelativeExtension& ext, const RealPlace& v);

} // namespace knorm
