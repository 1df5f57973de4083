#include "tilt/quiver/operations.hpp"

#include <algorithm>

namespace tilt::quiver {

namespace {

// Columns of `sub` (a basis) completed by standard vectors; returns the completion and the
// coordinate map onto the completion part.
struct Complement {
    Matrix extension;
    Matrix coords;
};

Complement complement_of(const Matrix& sub, std::size_t n, std::uint32_t p) {
    Matrix id = Matrix::identity(n, p);
    auto ext = sub.cols() ? ff::independent_extension(sub, id) : [&] {
        std::vector<std::size_t> all(n);
        for (std::size_t i = 0; i < n; ++i) all[i] = i;
        return all;
    }();
    Matrix e = id.select_columns(ext);
    Matrix t = sub.cols() ? ff::hstack(sub, e) : e;
    Matrix inv = *ff::inverse(t);
    return {e, inv.block(sub.cols(), 0, e.cols(), n)};
}

}  // namespace

SubModule submodule(const Representation& m, const std::vector<Matrix>& spans) {
    const auto& alg = m.algebra();
    const Quiver& q = alg->quiver();
    std::vector<Matrix> basis;
    std::vector<std::size_t> dims;
    for (std::size_t v = 0; v < m.num_vertices(); ++v) {
        Matrix b = spans[v].cols() ? ff::column_space_basis(spans[v]) : Matrix(m.dim(v), 0, m.p());
        dims.push_back(b.cols());
        basis.push_back(std::move(b));
    }
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrow(a);
        Matrix img = m.map(a) * basis[ar.source];
        if (dims[ar.target] == 0) {
            if (!img.is_zero()) throw InvalidRepresentation("subspaces are not closed under the arrows");
            maps.emplace_back(0, dims[ar.source], m.p());
            continue;
        }
        if (dims[ar.source] == 0) {
            maps.emplace_back(dims[ar.target], 0, m.p());
            continue;
        }
        auto s = ff::solve(basis[ar.target], img);
        if (!s) throw InvalidRepresentation("subspaces are not closed under the arrows");
        maps.push_back(s->particular);
    }
    Representation sub = Representation::unchecked(alg, dims, std::move(maps));
    return {sub, Morphism::unchecked(sub, m, std::move(basis))};
}

Quotient quotient(const Representation& m, const std::vector<Matrix>& spans) {
    const auto& alg = m.algebra();
    const Quiver& q = alg->quiver();
    std::vector<Complement> comps;
    std::vector<std::size_t> dims;
    for (std::size_t v = 0; v < m.num_vertices(); ++v) {
        Matrix b = spans[v].cols() ? ff::column_space_basis(spans[v]) : Matrix(m.dim(v), 0, m.p());
        comps.push_back(complement_of(b, m.dim(v), m.p()));
        dims.push_back(comps.back().extension.cols());
    }
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrow(a);
        maps.push_back(comps[ar.target].coords * m.map(a) * comps[ar.source].extension);
    }
    Representation quo = Representation::unchecked(alg, dims, std::move(maps));
    std::vector<Matrix> proj;
    for (auto& c : comps) proj.push_back(std::move(c.coords));
    return {quo, Morphism::unchecked(m, quo, std::move(proj))};
}

SubModule kernel(const Morphism& f) {
    std::vector<Matrix> spans;
    for (std::size_t v = 0; v < f.source().num_vertices(); ++v)
        spans.push_back(f.source().dim(v) ? ff::nullspace_basis(f.map(v)) : Matrix(0, 0, f.source().p()));
    return submodule(f.source(), spans);
}

Quotient cokernel(const Morphism& f) {
    std::vector<Matrix> spans;
    for (std::size_t v = 0; v < f.target().num_vertices(); ++v) spans.push_back(f.map(v));
    return quotient(f.target(), spans);
}

SubModule image(const Morphism& f) {
    std::vector<Matrix> spans;
    for (std::size_t v = 0; v < f.target().num_vertices(); ++v) spans.push_back(f.map(v));
    return submodule(f.target(), spans);
}

DirectSum direct_sum(const std::vector<Representation>& parts, const PathAlgebra::Ptr& alg) {
    const Quiver& q = alg->quiver();
    const std::uint32_t p = alg->p();
    std::vector<std::size_t> dims(q.num_vertices(), 0);
    for (const auto& r : parts)
        for (std::size_t v = 0; v < dims.size(); ++v) dims[v] += r.dim(v);
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        std::vector<Matrix> blocks;
        for (const auto& r : parts) blocks.push_back(r.map(a));
        maps.push_back(ff::block_diagonal(blocks, p));
        // block_diagonal of no parts is 0x0; fine since dims are 0 then
    }
    Representation sum = Representation::unchecked(alg, dims, std::move(maps));
    DirectSum out{sum, {}, {}};
    std::vector<std::size_t> off(dims.size(), 0);
    for (const auto& r : parts) {
        std::vector<Matrix> inj, proj;
        for (std::size_t v = 0; v < dims.size(); ++v) {
            Matrix i(dims[v], r.dim(v), p), pr(r.dim(v), dims[v], p);
            for (std::size_t k = 0; k < r.dim(v); ++k) {
                i(off[v] + k, k) = 1;
                pr(k, off[v] + k) = 1;
            }
            off[v] += r.dim(v);
            inj.push_back(std::move(i));
            proj.push_back(std::move(pr));
        }
        out.injections.push_back(Morphism::unchecked(r, sum, std::move(inj)));
        out.projections.push_back(Morphism::unchecked(sum, r, std::move(proj)));
    }
    return out;
}

Representation direct_sum_module(const std::vector<Representation>& parts, const PathAlgebra::Ptr& alg) {
    return direct_sum(parts, alg).module;
}

Morphism block_morphism(const DirectSum& sources, const DirectSum& targets,
                        const std::vector<std::vector<Morphism>>& blocks) {
    Morphism out = Morphism::zero(sources.module, targets.module);
    for (std::size_t t = 0; t < targets.injections.size(); ++t)
        for (std::size_t s = 0; s < sources.projections.size(); ++s)
            if (!blocks[t][s].is_zero()) out = out + targets.injections[t] * blocks[t][s] * sources.projections[s];
    return out;
}

Morphism row_morphism(const DirectSum& sources, const std::vector<Morphism>& fs) {
    if (fs.empty()) throw InvalidMorphism("row morphism needs at least one component");
    Morphism out = Morphism::zero(sources.module, fs[0].target());
    for (std::size_t s = 0; s < fs.size(); ++s) out = out + fs[s] * sources.projections[s];
    return out;
}

Morphism column_morphism(const DirectSum& targets, const std::vector<Morphism>& gs) {
    if (gs.empty()) throw InvalidMorphism("column morphism needs at least one component");
    Morphism out = Morphism::zero(gs[0].source(), targets.module);
    for (std::size_t t = 0; t < gs.size(); ++t) out = out + targets.injections[t] * gs[t];
    return out;
}

Morphism diagonal_sum(const Morphism& f, const Morphism& g) {
    const auto& alg = f.source().algebra();
    DirectSum s = direct_sum({f.source(), g.source()}, alg);
    DirectSum t = direct_sum({f.target(), g.target()}, alg);
    return block_morphism(s, t, {{f, Morphism::zero(g.source(), f.target())}, {Morphism::zero(f.source(), g.target()), g}});
}

Representation projective(const PathAlgebra::Ptr& alg, std::size_t v) {
    const Quiver& q = alg->quiver();
    const std::uint32_t p = alg->p();
    std::vector<std::vector<std::size_t>> at(q.num_vertices());
    std::vector<std::size_t> pos(alg->dim(), 0);
    for (std::size_t w = 0; w < q.num_vertices(); ++w) {
        at[w] = alg->elements_between(v, w);
        for (std::size_t k = 0; k < at[w].size(); ++k) pos[at[w][k]] = k;
    }
    std::vector<std::size_t> dims;
    for (const auto& a : at) dims.push_back(a.size());
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrow(a);
        Matrix m(dims[ar.target], dims[ar.source], p);
        for (std::size_t k = 0; k < at[ar.source].size(); ++k)
            for (const auto& [i, c] : alg->product(alg->arrow_element(a), at[ar.source][k])) m(pos[i], k) = c;
        maps.push_back(std::move(m));
    }
    return Representation::unchecked(alg, dims, std::move(maps));
}

Representation injective(const PathAlgebra::Ptr& alg, std::size_t v) { return dualize(projective(alg->op(), v)); }

Representation simple(const PathAlgebra::Ptr& alg, std::size_t v) {
    const Quiver& q = alg->quiver();
    std::vector<std::size_t> dims(q.num_vertices(), 0);
    dims[v] = 1;
    std::vector<Matrix> maps;
    for (const auto& ar : q.arrows()) maps.emplace_back(dims[ar.target], dims[ar.source], alg->p());
    return Representation::unchecked(alg, dims, std::move(maps));
}

Representation regular(const PathAlgebra::Ptr& alg) {
    std::vector<Representation> ps;
    for (std::size_t v = 0; v < alg->quiver().num_vertices(); ++v) ps.push_back(projective(alg, v));
    return direct_sum_module(ps, alg);
}

Representation dual_regular(const PathAlgebra::Ptr& alg) {
    std::vector<Representation> is;
    for (std::size_t v = 0; v < alg->quiver().num_vertices(); ++v) is.push_back(injective(alg, v));
    return direct_sum_module(is, alg);
}

Morphism projective_map(const PathAlgebra::Ptr& alg, std::size_t v, std::size_t w, const std::vector<Elem>& lambda) {
    auto f = ff::PrimeField::unchecked(alg->p());
    Representation pv = projective(alg, v), pw = projective(alg, w);
    std::vector<Matrix> maps;
    for (std::size_t u = 0; u < alg->quiver().num_vertices(); ++u) {
        auto from = alg->elements_between(v, u);
        auto to = alg->elements_between(w, u);
        Matrix m(to.size(), from.size(), alg->p());
        for (std::size_t k = 0; k < from.size(); ++k)
            for (std::size_t l = 0; l < alg->dim(); ++l) {
                if (lambda[l] == 0) continue;
                for (const auto& [i, c] : alg->product(from[k], l)) {
                    auto it = std::find(to.begin(), to.end(), i);
                    if (it == to.end()) throw InvalidMorphism("element does not lie in e_v A e_w");
                    auto r = static_cast<std::size_t>(it - to.begin());
                    m(r, k) = f.add(m(r, k), f.mul(c, lambda[l]));
                }
            }
        maps.push_back(std::move(m));
    }
    return Morphism::unchecked(pv, pw, std::move(maps));
}

Morphism map_from_projective(const Representation& m, std::size_t w, const std::vector<Elem>& element) {
    const auto& alg = m.algebra();
    Representation pw = projective(alg, w);
    Matrix x(m.dim(w), 1, m.p());
    for (std::size_t i = 0; i < element.size(); ++i) x(i, 0) = element[i];
    std::vector<Matrix> maps;
    for (std::size_t u = 0; u < alg->quiver().num_vertices(); ++u) {
        auto from = alg->elements_between(w, u);
        Matrix mm(m.dim(u), from.size(), m.p());
        for (std::size_t k = 0; k < from.size(); ++k) mm.set_block(0, k, m.element_action(from[k]) * x);
        maps.push_back(std::move(mm));
    }
    return Morphism::unchecked(pw, m, std::move(maps));
}

Representation dualize(const Representation& m) {
    std::vector<Matrix> maps;
    for (const auto& a : m.maps()) maps.push_back(a.transpose());
    return Representation::unchecked(m.algebra()->op(), m.dims(), std::move(maps));
}

Morphism dualize(const Morphism& f) {
    std::vector<Matrix> maps;
    for (const auto& a : f.maps()) maps.push_back(a.transpose());
    return Morphism::unchecked(dualize(f.target()), dualize(f.source()), std::move(maps));
}

SubModule radical(const Representation& m) {
    const Quiver& q = m.algebra()->quiver();
    std::vector<std::vector<Matrix>> parts(m.num_vertices());
    for (std::size_t a = 0; a < q.num_arrows(); ++a) parts[q.arrow(a).target].push_back(m.map(a));
    std::vector<Matrix> spans;
    for (std::size_t v = 0; v < m.num_vertices(); ++v) spans.push_back(ff::hstack(parts[v], m.dim(v), m.p()));
    return submodule(m, spans);
}

Quotient top(const Representation& m) { return cokernel(radical(m).inclusion); }

SubModule socle(const Representation& m) {
    const Quiver& q = m.algebra()->quiver();
    std::vector<std::vector<Matrix>> parts(m.num_vertices());
    for (std::size_t a = 0; a < q.num_arrows(); ++a) parts[q.arrow(a).source].push_back(m.map(a));
    std::vector<Matrix> spans;
    for (std::size_t v = 0; v < m.num_vertices(); ++v) {
        Matrix stacked = ff::vstack(parts[v], m.dim(v), m.p());
        spans.push_back(stacked.rows() ? ff::nullspace_basis(stacked) : Matrix::identity(m.dim(v), m.p()));
    }
    return submodule(m, spans);
}

std::vector<std::size_t> top_dims(const Representation& m) {
    const Quiver& q = m.algebra()->quiver();
    std::vector<std::vector<Matrix>> parts(m.num_vertices());
    for (std::size_t a = 0; a < q.num_arrows(); ++a) parts[q.arrow(a).target].push_back(m.map(a));
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < m.num_vertices(); ++v)
        out.push_back(m.dim(v) - ff::rank(ff::hstack(parts[v], m.dim(v), m.p())));
    return out;
}

std::vector<std::size_t> socle_dims(const Representation& m) {
    const Quiver& q = m.algebra()->quiver();
    std::vector<std::vector<Matrix>> parts(m.num_vertices());
    for (std::size_t a = 0; a < q.num_arrows(); ++a) parts[q.arrow(a).source].push_back(m.map(a));
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < m.num_vertices(); ++v)
        out.push_back(m.dim(v) - ff::rank(ff::vstack(parts[v], m.dim(v), m.p())));
    return out;
}

}  // namespace tilt::quiver
