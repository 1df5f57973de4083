#pragma once

#include <vector>

#include "tilt/quiver/representation.hpp"

namespace tilt::quiver {

struct SubModule {
    Representation module;
    Morphism inclusion;
};

struct Quotient {
    Representation module;
    Morphism projection;
};

struct DirectSum {
    Representation module;
    std::vector<Morphism> injections;
    std::vector<Morphism> projections;
};

// Submodule spanned by the columns of spans[v]; throws if not closed under the arrows.
SubModule submodule(const Representation& m, const std::vector<Matrix>& spans);
Quotient quotient(const Representation& m, const std::vector<Matrix>& spans);

SubModule kernel(const Morphism& f);
Quotient cokernel(const Morphism& f);
SubModule image(const Morphism& f);

DirectSum direct_sum(const std::vector<Representation>& parts, const PathAlgebra::Ptr& alg);
Representation direct_sum_module(const std::vector<Representation>& parts, const PathAlgebra::Ptr& alg);
// Block morphism from the sum of sources to the sum of targets; blocks[t][s]: sources[s] -> targets[t].
Morphism block_morphism(const DirectSum& sources, const DirectSum& targets,
                        const std::vector<std::vector<Morphism>>& blocks);
// [f_1 ... f_n]: sum of sources -> B, and (g_1; ...; g_n): A -> sum of targets.
Morphism row_morphism(const DirectSum& sources, const std::vector<Morphism>& fs);
Morphism column_morphism(const DirectSum& targets, const std::vector<Morphism>& gs);
Morphism diagonal_sum(const Morphism& f, const Morphism& g);

Representation projective(const PathAlgebra::Ptr& alg, std::size_t v);
Representation injective(const PathAlgebra::Ptr& alg, std::size_t v);
Representation simple(const PathAlgebra::Ptr& alg, std::size_t v);
Representation regular(const PathAlgebra::Ptr& alg);
Representation dual_regular(const PathAlgebra::Ptr& alg);

// Right multiplication x -> x * lambda as a morphism P(v) -> P(w), for lambda in e_v A e_w
// given by coordinates over the whole basis.
Morphism projective_map(const PathAlgebra::Ptr& alg, std::size_t v, std::size_t w, const std::vector<Elem>& lambda);
// The element P(w) -> M picks out: image of e_w. For m in M_w the map b -> b m.
Morphism map_from_projective(const Representation& m, std::size_t w, const std::vector<Elem>& element);

// Vertex spaces dualized and arrow matrices transposed; a module over the opposite algebra.
Representation dualize(const Representation& m);
// D f : D(target) -> D(source).
Morphism dualize(const Morphism& f);

SubModule radical(const Representation& m);
Quotient top(const Representation& m);
SubModule socle(const Representation& m);

// Dimension of the top at each vertex.
std::vector<std::size_t> top_dims(const Representation& m);
std::vector<std::size_t> socle_dims(const Representation& m);

}  // namespace tilt::quiver
