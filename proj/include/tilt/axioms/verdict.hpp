#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tilt/approx/subcategory.hpp"

namespace tilt::axioms {

using approx::SubcategoryX;
using approx::XMorphism;
using approx::XObject;
using quiver::Morphism;
using quiver::Representation;

enum class Status { CertifiedPass, SampledPass, Fail };
std::string to_string(Status s);
inline bool passed(Status s) { return s != Status::Fail; }

// The definitional test a witness feeds back into.
enum class WitnessKind {
    WeakKernelTest,          // morphism g: the constructed weak kernel of g fails the definition
    WeakCokernelTest,        // morphism f: the constructed weak cokernel of f fails the definition
    EpiNotWeakCokernel,      // morphism f, epi in X, not a weak cokernel of its weak kernel
    MonoNotWeakKernel,       // morphism f, mono in X, not a weak kernel of its weak cokernel
    A3NotEpi,                // morphism f: [l k] is not epi in X
    A3opNotMono,             // morphism f: [l; k] is not mono in X
    RigidSequence,           // morphism f_1, epi in X: iterated weak kernels break the weak cokernel condition
    A4Chain,                 // morphism f_0: f_{d+1} is not a weak cokernel of its weak kernel
    A4opChain,               // morphism f_{d+1}: f_0 is not a weak kernel of its weak cokernel
    NoDKernel,               // morphism f: minimal iterated weak kernels do not end in a mono
    NoDCokernel,             // morphism f: minimal iterated weak cokernels do not end in an epi
    IdempotentNotSplit,      // morphism e: idempotent whose image is not in add(M)
    MissingProjective,       // indices[0] = vertex
    MissingInjective,        // indices[0] = vertex
    ExtNonzero,              // indices = {a, b, i}: Ext^i(X_a, X_b) != 0
    TauDNotInX,              // indices[0] = summand: tau_d(X_a) not in add(M) modulo injectives
    TauDInverseNotInX,       // indices[0] = summand: tau_d^-(X_a) not in add(M) modulo projectives
    ApproximationSequence,   // module A, indices[0] = 0 for (a), 1 for (b)
    ResolutionNotInX,        // module A, indices[0] = 0 for the resolution, 1 for the coresolution
    PerpMismatch,            // module A, indices[0] = 0 for left perp, 1 for right perp
    GammaInvariant,          // gldim <= d+1 and domdim >= d+1 fail for End(M)
};
std::string to_string(WitnessKind k);

struct Witness {
    WitnessKind kind;
    std::optional<XMorphism> morphism;
    std::optional<Representation> module;
    std::vector<std::size_t> indices;
    std::size_t d = 0;
    std::string detail;
};

// True when running the witness through its definitional test reproduces the failure.
bool replay(const SubcategoryX& x, const Witness& w);

struct RouteResult {
    std::string route;
    Status status;
    std::string detail;
};

struct Verdict {
    std::string name;
    std::size_t d = 0;  // 0 for checks without a d parameter
    Status status = Status::CertifiedPass;
    std::string route;
    std::optional<Witness> witness;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::vector<RouteResult> routes;
    std::string note;

    bool pass() const { return passed(status); }
};

// Two routes that the theory says must coincide returned different answers.
class RouteDisagreement : public std::runtime_error {
public:
    RouteDisagreement(const std::string& check, const std::vector<RouteResult>& routes);
    const std::string& check() const { return check_; }
    const std::vector<RouteResult>& routes() const { return routes_; }

private:
    std::string check_;
    std::vector<RouteResult> routes_;
};

}  // namespace tilt::axioms
