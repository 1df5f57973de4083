#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "tilt/quiver/representation.hpp"

namespace tilt::quiver {

class DecompositionFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An indecomposable summand with its split inclusion and projection into the decomposed module.
struct Summand {
    Representation module;
    Morphism inclusion;
    Morphism projection;
};

// Fitting decomposition into indecomposables; each leaf is certified local.
std::vector<Summand> decompose(const Representation& m, std::uint64_t seed = 42);

struct IsoClass {
    Representation module;
    std::size_t multiplicity;
    std::vector<std::size_t> members;  // indices into the summand list
};
std::vector<IsoClass> group_isomorphic(const std::vector<Summand>& summands);

bool is_indecomposable(const Representation& m, std::uint64_t seed = 42);

// For indecomposables only: some g f invertible with f in Hom(a, b), g in Hom(b, a).
bool indecomposables_isomorphic(const Representation& a, const Representation& b);

bool is_isomorphic(const Representation& a, const Representation& b, std::uint64_t seed = 42);

}  // namespace tilt::quiver
