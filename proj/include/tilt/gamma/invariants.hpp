#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tilt/approx/subcategory.hpp"
#include "tilt/quiver/algebra.hpp"

namespace tilt::gamma {

inline constexpr std::size_t kDefaultCap = 20;

// An exact value, or only a lower bound when the computation hit its cap.
struct DimensionBound {
    std::optional<std::size_t> value;
    std::size_t lower_bound = 0;

    static DimensionBound exact(std::size_t v) { return {v, v}; }
    static DimensionBound at_least(std::size_t v) { return {std::nullopt, v}; }
    bool is_exact() const { return value.has_value(); }
    bool at_most(std::size_t d) const { return value && *value <= d; }
    bool at_least_value(std::size_t d) const { return lower_bound >= d; }
    std::string to_string() const;
};

// Gamma = End(X_1 + ... + X_n) for the basic module of X, presented as a quiver with relations:
// vertex i is the projection onto X_i, arrows span rad/rad^2 between the summands.
struct QuiverForm {
    quiver::PathAlgebra::Ptr algebra;
    // Each basis element of the quiver algebra as a morphism X_source -> X_target.
    std::vector<quiver::Morphism> elements;
};

// Requires p > dim Gamma and End(X_i)/rad = F_p for every summand.
QuiverForm endomorphism_quiver(const approx::SubcategoryX& x);

DimensionBound projective_dimension(const quiver::Representation& m, std::size_t cap = kDefaultCap);
DimensionBound injective_dimension(const quiver::Representation& m, std::size_t cap = kDefaultCap);

DimensionBound global_dimension(const quiver::PathAlgebra::Ptr& alg, std::size_t cap = kDefaultCap);
DimensionBound dominant_dimension(const quiver::PathAlgebra::Ptr& alg, std::size_t cap = kDefaultCap);

struct SidedDimension {
    DimensionBound left;
    DimensionBound right;
};
// Injective dimension of the regular module on both sides.
SidedDimension selfinjective_dimension(const quiver::PathAlgebra::Ptr& alg, std::size_t cap = kDefaultCap);

}  // namespace tilt::gamma
