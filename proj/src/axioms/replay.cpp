#include "tilt/approx/homological.hpp"
#include "tilt/axioms/classify.hpp"

namespace tilt::axioms {

namespace {

bool matches(const std::optional<Witness>& w, WitnessKind kind) { return w && w->kind == kind; }

}  // namespace

bool replay(const SubcategoryX& x, const Witness& w) {
    using K = WitnessKind;
    if (w.morphism) {
        const auto& f = *w.morphism;
        switch (w.kind) {
            case K::WeakKernelTest: return matches(test_A1(x, f), w.kind);
            case K::WeakCokernelTest: return matches(test_A1op(x, f), w.kind);
            case K::EpiNotWeakCokernel: return matches(test_A2(x, f), w.kind);
            case K::MonoNotWeakKernel: return matches(test_A2op(x, f), w.kind);
            case K::A3NotEpi: return matches(test_A3(x, f), w.kind);
            case K::A3opNotMono: return matches(test_A3op(x, f), w.kind);
            case K::RigidSequence: return matches(test_d_rigid(x, f, w.d), w.kind);
            case K::A4Chain: return matches(test_A4(x, f, w.d), w.kind);
            case K::A4opChain: return matches(test_A4op(x, f, w.d), w.kind);
            case K::NoDKernel: return matches(test_d_kernel(x, f, w.d), w.kind);
            case K::NoDCokernel: return matches(test_d_cokernel(x, f, w.d), w.kind);
            case K::IdempotentNotSplit: return matches(test_idempotent(x, f), w.kind);
            default: return false;
        }
    }
    if (w.module) {
        const auto& a = *w.module;
        const bool side = !w.indices.empty() && w.indices[0] == 1;
        switch (w.kind) {
            case K::ApproximationSequence: return matches(test_approximation_sequence(x, a, w.d, side), w.kind);
            case K::ResolutionNotInX: return matches(test_resolution(x, a, w.d, side), w.kind);
            case K::PerpMismatch: {
                auto r = test_perp(x, a, w.d);
                return matches(r, w.kind) && r->indices == w.indices;
            }
            default: return false;
        }
    }
    const auto& alg = x.algebra();
    switch (w.kind) {
        case K::MissingProjective:
            return w.indices.size() == 1 && w.indices[0] < alg->quiver().num_vertices() &&
                   !x.contains(quiver::projective(alg, w.indices[0]));
        case K::MissingInjective:
            return w.indices.size() == 1 && w.indices[0] < alg->quiver().num_vertices() &&
                   !x.contains(quiver::injective(alg, w.indices[0]));
        case K::ExtNonzero:
            return w.indices.size() == 3 && w.indices[0] < x.size() && w.indices[1] < x.size() &&
                   approx::ext_dim(x.summand(w.indices[0]), x.summand(w.indices[1]), w.indices[2]) != 0;
        case K::TauDNotInX:
        case K::TauDInverseNotInX:
            return w.indices.size() == 1 && w.indices[0] < x.size() && matches(test_tau_d(x, w.indices[0], w.d), w.kind);
        case K::GammaInvariant: {
            auto g = gamma_data(x);
            return !(g.global.at_most(w.d + 1) && g.dominant.at_least_value(w.d + 1));
        }
        default: return false;
    }
}

}  // namespace tilt::axioms
