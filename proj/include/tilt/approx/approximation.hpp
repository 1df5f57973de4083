#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "tilt/approx/subcategory.hpp"

namespace tilt::approx {

// Right approximation: map from `object` onto A. Left approximation: map from A into `object`.
struct Approximation {
    XObject object;
    Morphism map;
};

// Evaluation map from sum_i X_i^{dim Hom(X_i, A)}. With minimal set, only summands that do not
// factor through rad_X are kept, giving a right-minimal approximation.
Approximation right_approximation(const SubcategoryX& x, const Representation& a, bool minimal = false);
Approximation left_approximation(const SubcategoryX& x, const Representation& a, bool minimal = false);

// Kernel inclusion after a right approximation of Ker g; returns f with target g.source.
XMorphism weak_kernel(const SubcategoryX& x, const XMorphism& g, bool minimal = false);
// Left approximation of Coker f after the cokernel projection; returns g with source f.target.
XMorphism weak_cokernel(const SubcategoryX& x, const XMorphism& f, bool minimal = false);

// chain[0] is the input f; chain[k] is the k-th constructed map.
struct ApproxSequence {
    std::vector<XMorphism> chain;
    std::vector<bool> is_weak_kernel;
    std::vector<bool> is_weak_cokernel;
};

class DKernelNotLeftExact : public std::runtime_error {
public:
    DKernelNotLeftExact(std::string what, std::size_t witness) : std::runtime_error(std::move(what)), witness_(witness) {}
    std::size_t witness_summand() const { return witness_; }

private:
    std::size_t witness_;
};

// X_{d+1} -> ... -> X_1 -> X_0 with 0 -> Hom(X', X_{d+1}) -> ... -> Hom(X', X_0) exact.
ApproxSequence d_kernel(const SubcategoryX& x, const XMorphism& f, std::size_t d);
ApproxSequence d_cokernel(const SubcategoryX& x, const XMorphism& f, std::size_t d);

// Random F_p-combination of the Hom basis between two objects of X.
template <class Rng>
XMorphism random_morphism(const SubcategoryX& x, const XObject& a, const XObject& b, Rng& rng) {
    auto basis = x.hom_basis(a, b);
    std::vector<Elem> c(basis.size());
    for (auto& e : c) e = static_cast<Elem>(rng() % x.p());
    return {a, b, quiver::combine(basis, c, a.module(), b.module())};
}

}  // namespace tilt::approx
