#include "tilt/approx/homological.hpp"

#include <algorithm>

#include "tilt/approx/subcategory.hpp"
#include "tilt/quiver/decompose.hpp"

namespace tilt::approx {

namespace {

Morphism padded_cover(const Representation& m) {
    ProjectiveCover c = projective_cover(m);
    const auto& alg = m.algebra();
    std::vector<Representation> parts;
    for (std::size_t k = 0; k < c.vertices.size(); ++k) parts.push_back(c.sum.injections[k].source());
    std::vector<Morphism> maps;
    for (std::size_t k = 0; k < c.vertices.size(); ++k) maps.push_back(c.map * c.sum.injections[k]);
    for (std::size_t v = 0; v < alg->quiver().num_vertices(); ++v) {
        parts.push_back(quiver::projective(alg, v));
        maps.push_back(Morphism::zero(parts.back(), m));
    }
    auto sum = quiver::direct_sum(parts, alg);
    return quiver::row_morphism(sum, maps);
}

}  // namespace

ProjectiveCover projective_cover(const Representation& m) {
    const auto& alg = m.algebra();
    auto rad = quiver::radical(m);
    std::vector<std::size_t> vertices;
    std::vector<Representation> parts;
    std::vector<std::vector<Elem>> elements;
    for (std::size_t v = 0; v < m.num_vertices(); ++v) {
        if (m.dim(v) == 0) continue;
        Matrix id = Matrix::identity(m.dim(v), m.p());
        for (auto c : ff::independent_extension(rad.inclusion.map(v), id)) {
            vertices.push_back(v);
            parts.push_back(quiver::projective(alg, v));
            elements.push_back(id.column(c));
        }
    }
    auto sum = quiver::direct_sum(parts, alg);
    if (parts.empty()) return {{}, sum, Morphism::zero(sum.module, m)};
    std::vector<Morphism> maps;
    for (std::size_t k = 0; k < parts.size(); ++k) maps.push_back(quiver::map_from_projective(m, vertices[k], elements[k]));
    Morphism map = quiver::row_morphism(sum, maps);
    if (!map.is_epi()) throw std::logic_error("projective cover is not surjective");
    return {std::move(vertices), std::move(sum), std::move(map)};
}

InjectiveEnvelope injective_envelope(const Representation& m) {
    auto c = projective_cover(quiver::dualize(m));
    Morphism d = quiver::dualize(c.map);  // D D M -> D P
    return {c.vertices, d.target(), Morphism::unchecked(m, d.target(), d.maps())};
}

quiver::SubModule syzygy_inclusion(const Representation& m) { return quiver::kernel(projective_cover(m).map); }

Representation syzygy(const Representation& m) { return syzygy_inclusion(m).module; }

Representation cosyzygy(const Representation& m) { return quiver::cokernel(injective_envelope(m).map).module; }

Representation syzygy(const Representation& m, std::size_t n) {
    Representation r = m;
    for (std::size_t k = 0; k < n && !r.is_zero(); ++k) r = syzygy(r);
    return r;
}

Representation cosyzygy(const Representation& m, std::size_t n) {
    Representation r = m;
    for (std::size_t k = 0; k < n && !r.is_zero(); ++k) r = cosyzygy(r);
    return r;
}

bool is_projective(const Representation& m) { return projective_cover(m).sum.module.dim() == m.dim(); }

bool is_injective(const Representation& m) { return is_projective(quiver::dualize(m)); }

Presentation minimal_presentation(const Representation& m) {
    Presentation pr;
    pr.p0 = projective_cover(m);
    auto k = quiver::kernel(pr.p0.map);
    pr.p1 = projective_cover(k.module);
    pr.d1 = k.inclusion * pr.p1.map;
    return pr;
}

std::size_t ext_dim(const Representation& a, const Representation& b, std::size_t i, const ExtOptions& opt) {
    if (i == 0) return quiver::hom_dim(a, b);
    if (i + 1 > opt.cap) throw ResolutionCapExceeded("Ext degree " + std::to_string(i) + " needs a resolution longer than " +
                                                     std::to_string(opt.cap));
    // d[k]: P_k -> P_{k-1} for k = 1..i+1; P_0 -> A is the first cover.
    std::vector<Morphism> d;
    Morphism cover = opt.minimal ? projective_cover(a).map : padded_cover(a);
    Representation p_prev = cover.source();
    auto k = quiver::kernel(cover);
    std::vector<Representation> ps{p_prev};
    for (std::size_t step = 1; step <= i + 1; ++step) {
        Morphism c = opt.minimal ? projective_cover(k.module).map : padded_cover(k.module);
        Morphism dk = k.inclusion * c;
        d.push_back(dk);
        ps.push_back(dk.source());
        if (step < i + 1) k = quiver::kernel(c);
    }
    auto hom_i = quiver::hom_space(ps[i], b);
    auto hom_prev = quiver::hom_space(ps[i - 1], b);
    std::size_t r_out = rank_before(hom_i, d[i]);        // h -> h d_{i+1}
    std::size_t r_in = rank_before(hom_prev, d[i - 1]);  // h -> h d_i
    return hom_i.size() - r_out - r_in;
}

Representation transpose(const Representation& m) {
    const auto& alg = m.algebra();
    const auto op = alg->op();
    Presentation pr = minimal_presentation(m);
    const auto& v0 = pr.p0.vertices;
    const auto& v1 = pr.p1.vertices;
    std::vector<Representation> src, tgt;
    for (auto v : v0) src.push_back(quiver::projective(op, v));
    for (auto w : v1) tgt.push_back(quiver::projective(op, w));
    auto src_sum = quiver::direct_sum(src, op);
    auto tgt_sum = quiver::direct_sum(tgt, op);
    std::vector<std::vector<Morphism>> blocks(v1.size());
    for (std::size_t k = 0; k < v1.size(); ++k) {
        const std::size_t w = v1[k];
        auto at_w = alg->elements_between(w, w);
        const std::size_t e_pos =
            static_cast<std::size_t>(std::find(at_w.begin(), at_w.end(), alg->idempotent(w)) - at_w.begin());
        for (std::size_t j = 0; j < v0.size(); ++j) {
            Morphism djk = pr.p0.sum.projections[j] * pr.d1 * pr.p1.sum.injections[k];
            // lambda = djk(e_w) in P(v_j)_w, whose basis is elements_between(v_j, w)
            auto coords = alg->elements_between(v0[j], w);
            std::vector<Elem> lambda(alg->dim(), 0);
            for (std::size_t r = 0; r < coords.size(); ++r) lambda[coords[r]] = djk.map(w)(r, e_pos);
            blocks[k].push_back(quiver::projective_map(op, v0[j], w, lambda));
        }
    }
    if (v1.empty()) return quiver::cokernel(Morphism::zero(src_sum.module, tgt_sum.module)).module;
    return quiver::cokernel(quiver::block_morphism(src_sum, tgt_sum, blocks)).module;
}

Representation tau(const Representation& m) { return quiver::dualize(transpose(m)); }

Representation tau_inverse(const Representation& m) { return transpose(quiver::dualize(m)); }

Representation tau_d(const Representation& m, std::size_t d) {
    if (d == 0) throw std::invalid_argument("d must be at least 1");
    return tau(syzygy(m, d - 1));
}

Representation tau_d_inverse(const Representation& m, std::size_t d) {
    if (d == 0) throw std::invalid_argument("d must be at least 1");
    return tau_inverse(cosyzygy(m, d - 1));
}

Representation strip_projectives(const Representation& m, std::uint64_t seed) {
    std::vector<Representation> keep;
    for (const auto& s : quiver::decompose(m, seed))
        if (!is_projective(s.module)) keep.push_back(s.module);
    return quiver::direct_sum_module(keep, m.algebra());
}

Representation strip_injectives(const Representation& m, std::uint64_t seed) {
    std::vector<Representation> keep;
    for (const auto& s : quiver::decompose(m, seed))
        if (!is_injective(s.module)) keep.push_back(s.module);
    return quiver::direct_sum_module(keep, m.algebra());
}

}  // namespace tilt::approx
