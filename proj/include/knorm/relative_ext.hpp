#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "knorm/number_field.hpp"

namespace knorm {

// A finite extension L = F[y]/(g(y)) of a number field F, g monic and
// squarefree over F (verified exactly); irreducibility of g over F is the
// caller's assertion.  Immutable shared handle, like NumberField.
class RelativeExtension {
public:
    const NumberField& base() const { return d_->base; }
    const std::string& var() const { return d_->var; }
    const Polynomial<FieldElement>& min_poly_over_base() const { return d_->g; }
    std::size_t rel_degree() const { return d_->rel_degree; }
    IrreducibilityStatus status() const { return d_->status; }

    // Sturm chain of g computed once in F[y]; per-place fiber counts only
    // re-read leading-coefficient signs through the embedding.
    const std::vector<Polynomial<FieldElement>>& sturm() const { return d_->sturm; }

    bool same_as(const RelativeExtension& o) const { return d_ == o.d_; }

private:
    struct Data {
        NumberField base;
        std::string var;
        Polynomial<FieldElement> g;
        std::size_t rel_degree;
        IrreducibilityStatus status;
        std::vector<Polynomial<FieldElement>> sturm;
    };
    explicit RelativeExtension(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    std::shared_ptr<const Data> d_;

    friend RelativeExtension make_relative_extension(const NumberField&,
                                                     const Polynomial<FieldElement>&,
                                                     std::string);
};

// The places of L above one real place v of F: how many are real, how many
// are conjugate complex pairs.  v is (archimedean) ramified in L exactly
// when no real place of L lies above it.
struct RealPlaceFiber {
    RealPlace place;
    int real_above;
    int complex_pairs_above;
    bool ramified;
};

RelativeExtension make_relative_extension(const NumberField& base,
                                          const Polynomial<FieldElement>& g,
                                          std::string var = "y");

RealPlaceFiber fiber(const RelativeExtension& ext, const RealPlace& v);

// Fibers of all real places of the base, in place order.
std::vector<RealPlaceFiber> fibers(const RelativeExtension& ext);

// S_r: the base real places ramified in L, base ordering preserved.
std::vector<RealPlace> ramified_real_places(const RelativeExtension& ext);

} // namespace knorm
