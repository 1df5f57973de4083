#include "tilt/gamma/invariants.hpp"

#include "tilt/approx/homological.hpp"
#include "tilt/gamma/abstract_algebra.hpp"
#include "tilt/quiver/operations.hpp"

namespace tilt::gamma {

using quiver::Morphism;
using quiver::Path;
using quiver::PathAlgebra;
using quiver::Representation;

std::string DimensionBound::to_string() const {
    return value ? std::to_string(*value) : ">= " + std::to_string(lower_bound);
}

namespace {

Matrix columns(const std::vector<Morphism>& fs, std::size_t height, std::uint32_t p) {
    std::vector<Matrix> cols;
    for (const auto& f : fs) cols.push_back(f.to_vector());
    if (cols.empty()) return Matrix(height, 0, p);
    return ff::hstack(cols, height, p);
}

struct Word {
    std::size_t source;
    std::size_t target;
    Morphism map;
    std::vector<std::size_t> arrows;
};

}  // namespace

QuiverForm endomorphism_quiver(const approx::SubcategoryX& x) {
    const std::size_t n = x.size();
    const std::uint32_t p = x.p();
    std::size_t total = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) total += x.hom(i, j).size();
    if (p <= total) throw RadicalPreconditionViolated(total, p);
    for (std::size_t i = 0; i < n; ++i)
        if (x.hom(i, i).size() != x.radical_hom(i, i).size() + 1)
            throw AlgebraError("End(X" + std::to_string(i + 1) + ")/rad is not the prime field");

    auto height = [&](std::size_t i, std::size_t j) { return quiver::hom_vector_length(x.summand(i), x.summand(j)); };

    // Arrows: rad(i, j) modulo rad^2(i, j).
    std::vector<std::string> vnames;
    for (std::size_t i = 0; i < n; ++i) vnames.push_back("X" + std::to_string(i + 1));
    std::vector<std::tuple<std::string, std::string, std::string>> arrow_names;
    std::vector<Word> arrows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Morphism> sq;
            for (std::size_t k = 0; k < n; ++k)
                for (const auto& f : x.radical_hom(i, k))
                    for (const auto& g : x.radical_hom(k, j)) sq.push_back(g * f);
            const auto& rad = x.radical_hom(i, j);
            Matrix base = columns(sq, height(i, j), p);
            Matrix cand = columns(rad, height(i, j), p);
            std::size_t count = 0;
            for (auto c : ff::independent_extension(base, cand)) {
                ++count;
                std::string name = "g" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
                if (count > 1) name += "_" + std::to_string(count);
                arrow_names.emplace_back(name, vnames[i], vnames[j]);
                arrows.push_back({i, j, rad[c], {}});
            }
        }
    auto q = quiver::Quiver::from_names(vnames, arrow_names);
    for (std::size_t a = 0; a < arrows.size(); ++a) arrows[a].arrows = {q.arrow_index(std::get<0>(arrow_names[a]))};

    // Words in the arrows, grown length by length, kept when independent within their block.
    std::vector<Word> words;
    std::vector<std::vector<Morphism>> block(n * n);
    auto try_add = [&](Word w) {
        auto& b = block[w.source * n + w.target];
        if (!b.empty()) {
            Matrix span = columns(b, height(w.source, w.target), p);
            if (ff::column_in_span(span, w.map.to_vector())) return false;
        } else if (w.map.is_zero()) {
            return false;
        }
        b.push_back(w.map);
        words.push_back(std::move(w));
        return true;
    };
    for (std::size_t i = 0; i < n; ++i) try_add({i, i, Morphism::identity(x.summand(i)), {}});
    for (const auto& a : arrows)
        if (!try_add(a)) throw AlgebraError("arrow lies in rad^2");
    std::size_t level_begin = n, level_end = words.size();
    while (level_begin < level_end) {
        for (std::size_t u = level_begin; u < level_end; ++u)
            for (const auto& a : arrows) {
                if (a.source != words[u].target) continue;
                Word w{words[u].source, a.target, a.map * words[u].map, words[u].arrows};
                w.arrows.insert(w.arrows.begin(), a.arrows[0]);
                try_add(std::move(w));
            }
        level_begin = level_end;
        level_end = words.size();
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (block[i * n + j].size() != x.hom(i, j).size()) throw AlgebraError("arrows do not generate End(M)");

    // Coordinates of composites in the word basis, block by block.
    std::vector<std::vector<std::size_t>> block_words(n * n);
    for (std::size_t w = 0; w < words.size(); ++w) block_words[words[w].source * n + words[w].target].push_back(w);
    const std::size_t dim = words.size();
    std::vector<quiver::SparseVec> products(dim * dim);
    for (std::size_t s = 0; s < dim; ++s)
        for (std::size_t t = 0; t < dim; ++t) {
            if (words[t].target != words[s].source) continue;
            const std::size_t i = words[t].source, j = words[s].target;
            Morphism c = words[s].map * words[t].map;
            if (c.is_zero()) continue;
            auto sol = ff::solve(columns(block[i * n + j], height(i, j), p), c.to_vector());
            if (!sol) throw AlgebraError("composite outside its block");
            for (std::size_t r = 0; r < sol->particular.rows(); ++r)
                if (auto v = sol->particular(r, 0))
                    products[s * dim + t].emplace_back(static_cast<std::uint32_t>(block_words[i * n + j][r]), v);
        }

    std::vector<Path> basis;
    QuiverForm out;
    for (const auto& w : words) {
        basis.push_back({w.source, w.target, w.arrows});
        out.elements.push_back(w.map);
    }
    out.algebra = PathAlgebra::from_table(q, std::move(basis), std::move(products), p);
    return out;
}

DimensionBound projective_dimension(const Representation& m, std::size_t cap) {
    Representation r = m;
    for (std::size_t n = 0; n <= cap; ++n) {
        if (approx::is_projective(r)) return DimensionBound::exact(n);
        r = approx::syzygy(r);
    }
    return DimensionBound::at_least(cap + 1);
}

DimensionBound injective_dimension(const Representation& m, std::size_t cap) {
    Representation r = m;
    for (std::size_t n = 0; n <= cap; ++n) {
        if (approx::is_injective(r)) return DimensionBound::exact(n);
        r = approx::cosyzygy(r);
    }
    return DimensionBound::at_least(cap + 1);
}

DimensionBound global_dimension(const PathAlgebra::Ptr& alg, std::size_t cap) {
    std::size_t best = 0;
    for (std::size_t v = 0; v < alg->quiver().num_vertices(); ++v) {
        auto d = projective_dimension(quiver::simple(alg, v), cap);
        if (!d.is_exact()) return d;
        best = std::max(best, *d.value);
    }
    return DimensionBound::exact(best);
}

DimensionBound dominant_dimension(const PathAlgebra::Ptr& alg, std::size_t cap) {
    const std::size_t nv = alg->quiver().num_vertices();
    std::vector<bool> proj_inj(nv);
    for (std::size_t v = 0; v < nv; ++v) proj_inj[v] = approx::is_projective(quiver::injective(alg, v));
    Representation r = quiver::regular(alg);
    for (std::size_t n = 0; n < cap; ++n) {
        if (r.is_zero()) return DimensionBound::at_least(cap);
        auto env = approx::injective_envelope(r);
        for (auto v : env.vertices)
            if (!proj_inj[v]) return DimensionBound::exact(n);
        r = quiver::cokernel(env.map).module;
    }
    return DimensionBound::at_least(cap);
}

SidedDimension selfinjective_dimension(const PathAlgebra::Ptr& alg, std::size_t cap) {
    return {injective_dimension(quiver::regular(alg), cap), injective_dimension(quiver::regular(alg->op()), cap)};
}

}  // namespace tilt::gamma
