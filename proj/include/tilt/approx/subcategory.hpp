#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tilt/quiver/operations.hpp"
#include "tilt/quiver/representation.hpp"

namespace tilt::approx {

using ff::Elem;
using ff::Matrix;
using quiver::Morphism;
using quiver::PathAlgebra;
using quiver::Representation;

// An object of add(M) as a direct sum of chosen summands (repetition allowed).
struct XObject {
    std::vector<std::size_t> parts;
    quiver::DirectSum sum;
    const Representation& module() const { return sum.module; }
};

struct XMorphism {
    XObject source;
    XObject target;
    Morphism map;
};

// X = add(M), held as a list of pairwise non-isomorphic indecomposables with all Hom spaces
// between them precomputed. Immutable after construction.
class SubcategoryX {
public:
    SubcategoryX() = default;
    // Summands must be indecomposable and pairwise non-isomorphic.
    SubcategoryX(PathAlgebra::Ptr alg, std::vector<Representation> summands, std::vector<std::size_t> multiplicities = {});
    // Decomposes each generator and keeps one representative per isomorphism class.
    static SubcategoryX from_modules(const PathAlgebra::Ptr& alg, const std::vector<Representation>& generators,
                                     std::uint64_t seed = 42);

    const PathAlgebra::Ptr& algebra() const { return alg_; }
    std::uint32_t p() const { return alg_->p(); }
    std::size_t size() const { return summands_.size(); }
    const Representation& summand(std::size_t i) const { return summands_[i]; }
    const std::vector<Representation>& summands() const { return summands_; }
    std::size_t multiplicity(std::size_t i) const { return mult_[i]; }
    const std::vector<Morphism>& hom(std::size_t i, std::size_t j) const { return hom_[i * size() + j]; }
    // rad(X_i, X_j): everything when i != j, the radical of End(X_i) when i == j.
    const std::vector<Morphism>& radical_hom(std::size_t i, std::size_t j) const { return rad_[i * size() + j]; }

    Representation basic_module() const;
    XObject object(std::vector<std::size_t> parts) const;
    XObject single(std::size_t i) const { return object({i}); }
    XObject zero_object() const { return object({}); }
    XObject concat(const XObject& a, const XObject& b) const;

    // Basis of Hom(a, b) assembled from the summand Hom spaces.
    std::vector<Morphism> hom_basis(const XObject& a, const XObject& b) const;
    std::vector<Morphism> hom_from_summand(std::size_t i, const XObject& b) const;
    std::vector<Morphism> hom_to_summand(const XObject& a, std::size_t i) const;

    // y in add(X), by factoring the identity through the summands.
    bool contains(const Representation& y) const;

    // add(D M) over the opposite algebra.
    SubcategoryX dual() const;

private:
    PathAlgebra::Ptr alg_;
    std::vector<Representation> summands_;
    std::vector<std::size_t> mult_;
    std::vector<std::vector<Morphism>> hom_;
    std::vector<std::vector<Morphism>> rad_;
};

// Maps between a concatenated object and the consecutive run of parts starting at first_part.
Morphism block_projection(const XObject& whole, const XObject& piece, std::size_t first_part);
Morphism block_injection(const XObject& piece, const XObject& whole, std::size_t first_part);

// y in add(generators): id_y lies in the span of all composites y -> G -> y.
bool in_add(const Representation& y, const std::vector<Representation>& generators);

// Rank of h -> f h on the span of `basis` (maps into f's source).
std::size_t rank_after(const std::vector<Morphism>& basis, const Morphism& f);
// Rank of h -> h f on the span of `basis` (maps out of f's target).
std::size_t rank_before(const std::vector<Morphism>& basis, const Morphism& f);

struct Violation {
    enum class Kind { NonzeroComposite, NotExact };
    Kind kind;
    std::size_t test_object;  // summand index; unused for NonzeroComposite
};

// f: A -> B, g: B -> C. Weak kernel: Hom(X_i, -) exact at B for every summand.
std::optional<Violation> weak_kernel_violation(const SubcategoryX& x, const XMorphism& f, const XMorphism& g);
// Weak cokernel: Hom(-, X_i) exact at B for every summand.
std::optional<Violation> weak_cokernel_violation(const SubcategoryX& x, const XMorphism& f, const XMorphism& g);

// Hom(f, X_i) injective for all i.
std::optional<std::size_t> epi_in_x_violation(const SubcategoryX& x, const XMorphism& f);
// Hom(X_i, f) injective for all i.
std::optional<std::size_t> mono_in_x_violation(const SubcategoryX& x, const XMorphism& f);
inline bool is_epi_in_x(const SubcategoryX& x, const XMorphism& f) { return !epi_in_x_violation(x, f); }
inline bool is_mono_in_x(const SubcategoryX& x, const XMorphism& f) { return !mono_in_x_violation(x, f); }

// Dualizes a morphism between objects of X into one between objects of x.dual().
XMorphism dual_morphism(const SubcategoryX& dual_x, const XMorphism& f);

}  // namespace tilt::approx
