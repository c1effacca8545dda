#include "knorm/k_theory.hpp"

#include <stdexcept>

namespace knorm {

SteinbergSymbol::SteinbergSymbol(FieldElement f, FieldElement g)
    : f_(std::move(f)), g_(std::move(g)) {
    if (!f_.field().same_as(g_.field()))
        throw precondition_error("Steinberg symbol: entries belong to different fields");
    if (f_.is_zero() || g_.is_zero())
        throw precondition_error("Steinberg symbol: entries must be nonzero");
}

SymbolProduct::SymbolProduct(std::vector<SymbolFactor> factors) : factors_(std::move(factors)) {
    for (std::size_t i = 1; i < factors_.size(); ++i)
        if (!factors_[i].symbol.field().same_as(factors_[0].symbol.field()))
            throw precondition_error("symbol product: symbols belong to different fields");
}

SymbolProduct& SymbolProduct::append(SteinbergSymbol s, long exponent) {
    if (!factors_.empty() && !s.field().same_as(factors_[0].symbol.field()))
        throw precondition_error("symbol product: symbols belong to different fields");
    factors_.push_back(SymbolFactor{std::move(s), exponent});
    return *this;
}

int torsion_rank_at_real(long n) {
    if (n < 1) throw precondition_error("torsion_rank_at_real: n must be >= 1");
    return n % 4 == 1 ? 1 : 0;
}

int local_symbol_sign(const SteinbergSymbol& s, const RealPlace& v) {
    return sign_at_place(s.f(), v) < 0 && sign_at_place(s.g(), v) < 0 ? 1 : 0;
}

namespace {

void check_over_base(const RelativeExtension& ext, const SymbolProduct& x) {
    for (const SymbolFactor& f : x.factors())
        if (!f.symbol.field().same_as(ext.base()))
            throw precondition_error("symbol product is not over the extension's base field");
}

} // namespace

ParityVector parity_vector(const RelativeExtension& ext, const SymbolProduct& x) {
    check_over_base(ext, x);
    ParityVector out;
    for (const RealPlace& v : ramified_real_places(ext)) {
        long bit = 0;
        for (const SymbolFactor& f : x.factors())
            bit += f.exponent * local_symbol_sign(f.symbol, v);
        out.bits.push_back(static_cast<int>(((bit % 2) + 2) % 2));
    }
    return out;
}

std::string_view to_string(NormReason r) {
    switch (r) {
    case NormReason::trivial_torsion: return "trivial_torsion";
    case NormReason::empty_Sr: return "empty_Sr";
    case NormReason::parity_zero: return "parity_zero";
    case NormReason::parity_nonzero: return "parity_nonzero";
    }
    throw std::logic_error("unreachable");
}

NormVerdict is_norm(const RelativeExtension& ext, const SymbolProduct& x, long n) {
    check_over_base(ext, x);
    const int rank = torsion_rank_at_real(n); // validates n
    if (rank == 0)
        return NormVerdict{true, n, std::nullopt, {}, NormReason::trivial_torsion, false};

    const bool caveat = n > 1;
    const auto sr = ramified_real_places(ext);
    if (sr.empty())
        return NormVerdict{true, n, ParityVector{}, {}, NormReason::empty_Sr, caveat};

    ParityVector parity = parity_vector(ext, x);
    std::vector<RealPlace> failing;
    for (std::size_t i = 0; i < sr.size(); ++i)
        if (parity.bits[i]) failing.push_back(sr[i]);
    if (failing.empty())
        return NormVerdict{true, n, std::move(parity), {}, NormReason::parity_zero, caveat};
    return NormVerdict{false, n, std::move(parity), std::move(failing),
                       NormReason::parity_nonzero, caveat};
}

bool is_norm_single(const RelativeExtension& ext, const SteinbergSymbol& s) {
    for (const RealPlace& v : ramified_real_places(ext))
        if (local_symbol_sign(s, v) != 0) return false;
    return true;
}

std::string ObstructionGroup::to_string() const {
    return "(Z/2)^" + std::to_string(rank);
}

ObstructionGroup obstruction_group(const RelativeExtension& ext, long n) {
    const int rank_at_real = torsion_rank_at_real(n);
    auto sr = ramified_real_places(ext);
    if (rank_at_real == 0) return ObstructionGroup{n, 0, {}};
    return ObstructionGroup{n, sr.size(), std::move(sr)};
}

SymbolProduct witness_non_norm(const RelativeExtension& ext, const RealPlace& v) {
    if (!v.field.same_as(ext.base()))
        throw precondition_error("witness_non_norm: place does not belong to the base field");
    const auto sr = ramified_real_places(ext);
    bool v_ramified = false;
    for (const RealPlace& w : sr) v_ramified = v_ramified || w.index == v.index;
    if (!v_ramified)
        throw precondition_error("witness_non_norm: place " + std::to_string(v.index) +
                                 " is not ramified in the extension");

    // {f, f} maps to 1 at w exactly when f < 0 there, so sign prescriptions
    // become parity prescriptions directly.
    const std::size_t r1 = real_places(ext.base()).size();
    std::vector<int> targets(r1, 1);
    targets[v.index] = -1;
    const FieldElement f = element_with_signs(ext.base(), targets);
    SymbolProduct witness = SymbolProduct::single(SteinbergSymbol(f, f));

    const ParityVector parity = parity_vector(ext, witness);
    for (std::size_t i = 0; i < sr.size(); ++i)
        if (parity.bits[i] != (sr[i].index == v.index ? 1 : 0))
            throw std::logic_error("witness_non_norm: constructed witness failed verification");
    return witness;
}

} // namespace knorm
