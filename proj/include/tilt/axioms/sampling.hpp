#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "tilt/approx/subcategory.hpp"

namespace tilt::axioms {

using approx::SubcategoryX;
using approx::XMorphism;
using quiver::Representation;

struct SampleOptions {
    std::size_t trials = 100;
    std::uint64_t seed = 42;
    std::size_t max_parts = 3;
};

// Independent generator per named check, so results do not depend on the order checks run in.
std::mt19937_64 stream_rng(std::uint64_t seed, std::string_view stream);

// Zero maps, identities, every Hom basis element X_i -> X_j, and the sink and source maps
// built from rad(X_i, X_a) for each summand.
std::vector<XMorphism> spanning_family(const SubcategoryX& x);

// Random F_p-combinations between random objects, cycling through square, wide (more source
// parts) and tall (more target parts) shapes.
std::vector<XMorphism> random_morphisms(const SubcategoryX& x, const SampleOptions& opt, std::string_view stream);

// spanning_family followed by random_morphisms.
std::vector<XMorphism> sample_morphisms(const SubcategoryX& x, const SampleOptions& opt, std::string_view stream);

// Indecomposable test modules: simples, projectives, injectives, summands of M, the quotients
// P(v)/rad^k P(v) and submodules soc^k I(v), closed once under tau, tau^-, syzygy and cosyzygy.
// Pairwise non-isomorphic.
std::vector<Representation> generated_test_modules(const SubcategoryX& x);

// Keeps one representative per isomorphism class of indecomposable summands.
std::vector<Representation> indecomposable_classes(const std::vector<Representation>& modules);

}  // namespace tilt::axioms
