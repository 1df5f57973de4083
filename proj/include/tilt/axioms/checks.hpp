#pragma once

#include <optional>

#include "tilt/axioms/sampling.hpp"
#include "tilt/axioms/verdict.hpp"

namespace tilt::axioms {

struct VerdictPair {
    Verdict plain;
    Verdict op;
};

// Lambda in add(M) and D Lambda in add(M).
struct GenCogenCertificate {
    std::optional<std::size_t> missing_projective;
    std::optional<std::size_t> missing_injective;
    bool generating() const { return !missing_projective; }
    bool cogenerating() const { return !missing_injective; }
    bool holds() const { return generating() && cogenerating(); }
};
GenCogenCertificate gen_cogen_certificate(const SubcategoryX& x);

// l with h l = f, searched in Hom(f.source, h.source).
std::optional<Morphism> factor_through_target(const SubcategoryX& x, const XMorphism& f, const XMorphism& h);
// l with l h = f, searched in Hom(h.target, f.target).
std::optional<Morphism> factor_through_source(const SubcategoryX& x, const XMorphism& f, const XMorphism& h);

// Single-morphism definitional tests; each returns a witness when f breaks the axiom.
std::optional<Witness> test_A1(const SubcategoryX& x, const XMorphism& g);
std::optional<Witness> test_A1op(const SubcategoryX& x, const XMorphism& f);
std::optional<Witness> test_A2(const SubcategoryX& x, const XMorphism& f);    // skips f not epi in X
std::optional<Witness> test_A2op(const SubcategoryX& x, const XMorphism& f);  // skips f not mono in X
std::optional<Witness> test_A3(const SubcategoryX& x, const XMorphism& f);
std::optional<Witness> test_A3op(const SubcategoryX& x, const XMorphism& f);
std::optional<Witness> test_d_rigid(const SubcategoryX& x, const XMorphism& f1, std::size_t d);  // skips f1 not epi
std::optional<Witness> test_A4(const SubcategoryX& x, const XMorphism& f0, std::size_t d);
std::optional<Witness> test_A4op(const SubcategoryX& x, const XMorphism& f, std::size_t d);
std::optional<Witness> test_d_kernel(const SubcategoryX& x, const XMorphism& f, std::size_t d);
std::optional<Witness> test_d_cokernel(const SubcategoryX& x, const XMorphism& f, std::size_t d);
std::optional<Witness> test_idempotent(const SubcategoryX& x, const XMorphism& e);

Verdict check_A0(const SubcategoryX& x, const SampleOptions& opt = {});
VerdictPair check_A1_A1op(const SubcategoryX& x, const SampleOptions& opt = {});
// Cross-route: when the gen-cogen certificate holds the axioms are theorems, so a sampled
// failure raises RouteDisagreement; otherwise the sampled route decides.
VerdictPair check_A2_A2op(const SubcategoryX& x, const SampleOptions& opt = {});
VerdictPair check_A3_A3op(const SubcategoryX& x, const SampleOptions& opt = {});

// Ext^i(X_a, X_b) = 0 for all summands and 0 < i < d; the first nonzero group as witness.
std::optional<Witness> ext_rigidity_witness(const SubcategoryX& x, std::size_t d);

// Certified route: Ext vanishing; sampled route: iterated weak kernels from epis. When the
// gen-cogen certificate holds, disagreement raises RouteDisagreement.
Verdict check_d_rigid(const SubcategoryX& x, std::size_t d, const SampleOptions& opt = {});
VerdictPair check_A4d(const SubcategoryX& x, std::size_t d, const SampleOptions& opt = {});
// d-kernels and d-cokernels of sampled morphisms.
VerdictPair check_d_kernels(const SubcategoryX& x, std::size_t d, const SampleOptions& opt = {});

}  // namespace tilt::axioms
