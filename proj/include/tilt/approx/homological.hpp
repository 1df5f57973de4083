#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "tilt/quiver/operations.hpp"

namespace tilt::approx {

using ff::Elem;
using ff::Matrix;
using quiver::Morphism;
using quiver::PathAlgebra;
using quiver::Representation;

class ResolutionCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultResolutionCap = 40;

// P = sum of P(vertices[k]) with map P -> M.
struct ProjectiveCover {
    std::vector<std::size_t> vertices;
    quiver::DirectSum sum;
    Morphism map;
};

// I = sum of I(vertices[k]) with map M -> I.
struct InjectiveEnvelope {
    std::vector<std::size_t> vertices;
    Representation module;
    Morphism map;
};

// Minimal: one P(v) per dimension of top(M) at v.
ProjectiveCover projective_cover(const Representation& m);
InjectiveEnvelope injective_envelope(const Representation& m);

quiver::SubModule syzygy_inclusion(const Representation& m);
Representation syzygy(const Representation& m);
Representation cosyzygy(const Representation& m);
Representation syzygy(const Representation& m, std::size_t n);
Representation cosyzygy(const Representation& m, std::size_t n);

bool is_projective(const Representation& m);
bool is_injective(const Representation& m);

// P1 -> P0 -> M -> 0 built from minimal covers.
struct Presentation {
    ProjectiveCover p0;
    ProjectiveCover p1;
    Morphism d1;  // P1 -> P0
};
Presentation minimal_presentation(const Representation& m);

struct ExtOptions {
    bool minimal = true;  // false pads every cover with a copy of the regular module mapped to zero
    std::size_t cap = kDefaultResolutionCap;
};

// dim Ext^i(A, B) as homology of Hom(P_., B).
std::size_t ext_dim(const Representation& a, const Representation& b, std::size_t i, const ExtOptions& opt = {});

// Transpose over the opposite algebra, from a minimal presentation.
Representation transpose(const Representation& m);
Representation tau(const Representation& m);
Representation tau_inverse(const Representation& m);
Representation tau_d(const Representation& m, std::size_t d);
Representation tau_d_inverse(const Representation& m, std::size_t d);

// Sum of the indecomposable summands that are not projective (resp. not injective).
Representation strip_projectives(const Representation& m, std::uint64_t seed = 42);
Representation strip_injectives(const Representation& m, std::uint64_t seed = 42);

}  // namespace tilt::approx
