#pragma once

#include <random>
#include <string>
#include <vector>

#include "tilt/quiver/algebra.hpp"
#include "tilt/quiver/operations.hpp"

namespace fixtures {

using namespace tilt;
using namespace tilt::quiver;

inline PathAlgebra::Ptr linear(std::size_t n, std::uint32_t p, std::size_t rad_power = 0) {
    std::vector<std::string> vs;
    std::vector<std::tuple<std::string, std::string, std::string>> arrows;
    for (std::size_t i = 1; i <= n; ++i) vs.push_back(std::to_string(i));
    for (std::size_t i = 1; i < n; ++i) arrows.emplace_back("a" + std::to_string(i), vs[i - 1], vs[i]);
    std::vector<Relation> rels;
    if (rad_power >= 2)
        for (std::size_t s = 1; s + rad_power <= n; ++s) {
            std::vector<std::string> path;
            for (std::size_t k = s + rad_power - 1; k >= s; --k) path.push_back("a" + std::to_string(k));
            rels.push_back({{1, path}});
        }
    return PathAlgebra::build(Quiver::from_names(vs, arrows), rels, p, n + 1);
}

inline PathAlgebra::Ptr a2(std::uint32_t p = 5) { return linear(2, p); }

inline PathAlgebra::Ptr truncated_poly(std::size_t n, std::uint32_t p = 5) {
    std::vector<std::string> xs(n, "x");
    return PathAlgebra::build(Quiver::from_names({"1"}, {{"x", "1", "1"}}), {{{1, xs}}}, p, n + 1);
}

// k[x]/(x^n)-module k[x]/(x^i).
inline Representation jordan_block(const PathAlgebra::Ptr& alg, std::size_t i) {
    Matrix m(i, i, alg->p());
    for (std::size_t r = 1; r < i; ++r) m(r, r - 1) = 1;
    return Representation(alg, {i}, {m});
}

inline std::vector<Representation> all_projectives(const PathAlgebra::Ptr& alg) {
    std::vector<Representation> out;
    for (std::size_t v = 0; v < alg->quiver().num_vertices(); ++v) out.push_back(projective(alg, v));
    return out;
}

inline std::vector<Representation> all_injectives(const PathAlgebra::Ptr& alg) {
    std::vector<Representation> out;
    for (std::size_t v = 0; v < alg->quiver().num_vertices(); ++v) out.push_back(injective(alg, v));
    return out;
}

// Interval module [i, j] (1-based, i <= j) over a linear quiver: k at i..j, identity maps inside.
inline Representation interval(const PathAlgebra::Ptr& alg, std::size_t i, std::size_t j) {
    const std::size_t n = alg->quiver().num_vertices();
    std::vector<std::size_t> dims(n, 0);
    for (std::size_t v = i; v <= j; ++v) dims[v - 1] = 1;
    std::vector<Matrix> maps;
    for (const auto& ar : alg->quiver().arrows()) {
        Matrix m(dims[ar.target], dims[ar.source], alg->p());
        if (dims[ar.target] && dims[ar.source]) m(0, 0) = 1;
        maps.push_back(std::move(m));
    }
    return Representation(alg, dims, maps);
}

}  // namespace fixtures
