#include "tilt/axioms/verdict.hpp"

namespace tilt::axioms {

std::string to_string(Status s) {
    switch (s) {
        case Status::CertifiedPass: return "certified-pass";
        case Status::SampledPass: return "sampled-pass";
        case Status::Fail: return "fail";
    }
    return "?";
}

std::string to_string(WitnessKind k) {
    switch (k) {
        case WitnessKind::WeakKernelTest: return "weak-kernel-test";
        case WitnessKind::WeakCokernelTest: return "weak-cokernel-test";
        case WitnessKind::EpiNotWeakCokernel: return "epi-not-weak-cokernel";
        case WitnessKind::MonoNotWeakKernel: return "mono-not-weak-kernel";
        case WitnessKind::A3NotEpi: return "a3-not-epi";
        case WitnessKind::A3opNotMono: return "a3op-not-mono";
        case WitnessKind::RigidSequence: return "rigid-sequence";
        case WitnessKind::A4Chain: return "a4-chain";
        case WitnessKind::A4opChain: return "a4op-chain";
        case WitnessKind::NoDKernel: return "no-d-kernel";
        case WitnessKind::NoDCokernel: return "no-d-cokernel";
        case WitnessKind::IdempotentNotSplit: return "idempotent-not-split";
        case WitnessKind::MissingProjective: return "missing-projective";
        case WitnessKind::MissingInjective: return "missing-injective";
        case WitnessKind::ExtNonzero: return "ext-nonzero";
        case WitnessKind::TauDNotInX: return "tau-d-not-in-x";
        case WitnessKind::TauDInverseNotInX: return "tau-d-inverse-not-in-x";
        case WitnessKind::ApproximationSequence: return "approximation-sequence";
        case WitnessKind::ResolutionNotInX: return "resolution-not-in-x";
        case WitnessKind::PerpMismatch: return "perp-mismatch";
        case WitnessKind::GammaInvariant: return "gamma-invariant";
    }
    return "?";
}

namespace {

std::string describe(const std::string& check, const std::vector<RouteResult>& routes) {
    std::string s = "route disagreement in " + check + ":";
    for (const auto& r : routes) s += " [" + r.route + ": " + to_string(r.status) + "; " + r.detail + "]";
    return s;
}

}  // namespace

RouteDisagreement::RouteDisagreement(const std::string& check, const std::vector<RouteResult>& routes)
    : std::runtime_error(describe(check, routes)), check_(check), routes_(routes) {}

}  // namespace tilt::axioms
