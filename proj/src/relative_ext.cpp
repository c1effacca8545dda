#include "knorm/relative_ext.hpp"

namespace knorm {

RelativeExtension make_relative_extension(const NumberField& base,
                                          const Polynomial<FieldElement>& g, std::string var) {
    if (g.is_zero() || *g.degree() < 1)
        throw precondition_error("relative extension: defining polynomial must have degree >= 1");
    for (const FieldElement& c : g.coeffs())
        if (!c.field().same_as(base))
            throw precondition_error(
                "relative extension: coefficient does not belong to the base field");
    if (!g.leading().is_one())
        throw precondition_error("relative extension: defining polynomial must be monic");
    if (*poly_gcd(g, g.derivative()).degree() != 0)
        throw precondition_error(
            "relative extension: defining polynomial is not squarefree over the base, "
            "so it does not define a field");

    const std::size_t n = *g.degree();
    // Degree 1 is trivially irreducible; beyond that irreducibility over F
    // is recorded as the caller's assertion.
    const IrreducibilityStatus status =
        n == 1 ? IrreducibilityStatus::verified : IrreducibilityStatus::asserted;
    auto chain = sturm_chain(g);
    auto data = std::make_shared<RelativeExtension::Data>(
        RelativeExtension::Data{base, std::move(var), g, n, status, std::move(chain)});
    return RelativeExtension(std::move(data));
}

RealPlaceFiber fiber(const RelativeExtension& ext, const RealPlace& v) {
    if (!v.field.same_as(ext.base()))
        throw precondition_error("fiber: place does not belong to the extension's base field");
    // sigma_v maps the chain to the Sturm chain of sigma_v(g) over R, so
    // Sturm's theorem applies with signs read through the embedding.
    const auto lc_sign = [&v](const FieldElement& c) { return sign_at_place(c, v); };
    const int real_above = sign_variations_at_infinity(ext.sturm(), false, lc_sign) -
                           sign_variations_at_infinity(ext.sturm(), true, lc_sign);
    const int pairs = (static_cast<int>(ext.rel_degree()) - real_above) / 2;
    return RealPlaceFiber{v, real_above, pairs, real_above == 0};
}

std::vector<RealPlaceFiber> fibers(const RelativeExtension& ext) {
    std::vector<RealPlaceFiber> out;
    for (const RealPlace& v : real_places(ext.base())) out.push_back(fiber(ext, v));
    return out;
}

std::vector<RealPlace> ramified_real_places(const RelativeExtension& ext) {
    std::vector<RealPlace> out;
    for (const RealPlaceFiber& f : fibers(ext))
        if (f.ramified) out.push_back(f.place);
    return out;
}

} // namespace knorm
