#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tilt/approx/subcategory.hpp"

namespace tilt::functors {

using approx::SubcategoryX;
using approx::XMorphism;
using approx::XObject;
using ff::Elem;
using ff::Matrix;
using quiver::Morphism;
using quiver::Representation;

// F = Coker(X(-, X1) -> X(-, X0)) for the presentation f: X1 -> X0.
struct CoherentFunctor {
    XMorphism presentation;
    const XObject& x1() const { return presentation.source; }
    const XObject& x0() const { return presentation.target; }
};

CoherentFunctor yoneda(const SubcategoryX& x, const XObject& obj);
CoherentFunctor zero_functor(const SubcategoryX& x);

// dim F(X_i).
std::size_t evaluate_dim(const SubcategoryX& x, const CoherentFunctor& f, std::size_t i);

// Natural transformation given by a: X0 -> Y0 with a f = g b for some b.
struct FunctorMorphism {
    CoherentFunctor source;
    CoherentFunctor target;
    Morphism lift;
};

bool is_liftable(const SubcategoryX& x, const FunctorMorphism& phi);
// phi and psi define the same natural transformation: their difference factors through g.
bool same_transformation(const SubcategoryX& x, const FunctorMorphism& phi, const FunctorMorphism& psi);
// Basis of Hom(F, G) as coset representatives.
std::vector<FunctorMorphism> hom_functors(const SubcategoryX& x, const CoherentFunctor& f, const CoherentFunctor& g);

// Rank of phi at X_i as a linear map F(X_i) -> G(X_i).
std::size_t evaluate_rank(const SubcategoryX& x, const FunctorMorphism& phi, std::size_t i);

struct FunctorKernel {
    CoherentFunctor functor;
    FunctorMorphism inclusion;
};
struct FunctorCokernel {
    CoherentFunctor functor;
    FunctorMorphism projection;
};
FunctorKernel kernel_functor(const SubcategoryX& x, const FunctorMorphism& phi);
FunctorCokernel cokernel_functor(const SubcategoryX& x, const FunctorMorphism& phi);

// F is effaceable iff its presentation map is an epimorphism in X. Returns the first summand
// X_i with Hom(f, X_i) not injective, if any.
std::optional<std::size_t> effaceable_witness(const SubcategoryX& x, const CoherentFunctor& f);
inline bool is_effaceable(const SubcategoryX& x, const CoherentFunctor& f) { return !effaceable_witness(x, f); }

// Coker f in mod Lambda.
Representation psi_tilde(const CoherentFunctor& f);

// F* and Tr F over dual_x = x.dual(): the kernel and cokernel of X(X0, -) -> X(X1, -).
struct StarData {
    CoherentFunctor star;
    CoherentFunctor transpose;
    Morphism star_inclusion;  // K -> D X0, whose image is F*
};
StarData star(const SubcategoryX& dual_x, const CoherentFunctor& f);

// Moves a functor over a subcategory to an equal one (same summands in the same order).
CoherentFunctor transport(const SubcategoryX& to, const CoherentFunctor& f);

// dim Ext^i(G, X(-, X_j)) in mod X, from a resolution of G by representables built with weak kernels.
std::size_t ext_to_representable(const SubcategoryX& x, const CoherentFunctor& g, std::size_t j, std::size_t i);

class SequenceCheckFailed : public std::runtime_error {
public:
    SequenceCheckFailed(const std::string& what, std::size_t point) : std::runtime_error(what), point_(point) {}
    std::size_t evaluation_point() const { return point_; }

private:
    std::size_t point_;
};

// Terms of 0 -> Ext^1(Tr F, X^op) -> F -> F** -> Ext^2(Tr F, X^op) -> 0 at X_i, with the
// kernel and cokernel of the unit F(X_i) -> F**(X_i).
struct AdjunctionPoint {
    std::size_t point;
    std::size_t ext1;
    std::size_t f;
    std::size_t f_star_star;
    std::size_t ext2;
    std::size_t unit_kernel;
    std::size_t unit_cokernel;
    bool exact() const { return unit_kernel == ext1 && unit_cokernel == ext2 && f + ext2 == f_star_star + ext1; }
};

std::vector<AdjunctionPoint> star_adjunction_terms(const SubcategoryX& x, const SubcategoryX& dual_x,
                                                   const CoherentFunctor& f);
// Throws SequenceCheckFailed at the first inexact evaluation point.
std::vector<AdjunctionPoint> verify_star_adjunction_sequence(const SubcategoryX& x, const SubcategoryX& dual_x,
                                                             const CoherentFunctor& f);

}  // namespace tilt::functors
