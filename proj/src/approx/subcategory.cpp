#include "tilt/approx/subcategory.hpp"

#include "tilt/gamma/abstract_algebra.hpp"
#include "tilt/quiver/decompose.hpp"

namespace tilt::approx {

namespace {

std::vector<std::size_t> part_offsets(const XObject& o, std::size_t v) {
    std::vector<std::size_t> off;
    std::size_t acc = 0;
    for (const auto& inj : o.sum.injections) {
        off.push_back(acc);
        acc += inj.source().dim(v);
    }
    return off;
}

Morphism embed(const Morphism& h, const XObject& a, std::size_t sa, const XObject& b, std::size_t tb) {
    std::vector<Matrix> maps;
    for (std::size_t v = 0; v < a.module().num_vertices(); ++v) {
        Matrix m(b.module().dim(v), a.module().dim(v), a.module().p());
        m.set_block(part_offsets(b, v)[tb], part_offsets(a, v)[sa], h.map(v));
        maps.push_back(std::move(m));
    }
    return Morphism::unchecked(a.module(), b.module(), std::move(maps));
}

Matrix composite_columns(const std::vector<Morphism>& basis, const Morphism& f, bool after) {
    if (basis.empty()) return Matrix(0, 0, f.source().p());
    std::vector<Matrix> cols;
    for (const auto& h : basis) cols.push_back(after ? (f * h).to_vector() : (h * f).to_vector());
    return ff::hstack(cols, cols[0].rows(), f.source().p());
}

}  // namespace

SubcategoryX::SubcategoryX(PathAlgebra::Ptr alg, std::vector<Representation> summands, std::vector<std::size_t> multiplicities)
    : alg_(std::move(alg)), summands_(std::move(summands)), mult_(std::move(multiplicities)) {
    if (mult_.empty()) mult_.assign(summands_.size(), 1);
    const std::size_t n = summands_.size();
    for (const auto& s : summands_)
        if (s.algebra() != alg_) throw quiver::InvalidRepresentation("summand over a different algebra");
    hom_.resize(n * n);
    rad_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) hom_[i * n + j] = quiver::hom_space(summands_[i], summands_[j]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) {
                rad_[i * n + j] = hom_[i * n + j];
                continue;
            }
            const auto& basis = hom_[i * n + i];
            auto end = gamma::endomorphism_algebra(summands_[i], basis);
            Matrix r = gamma::radical(end.algebra);
            for (std::size_t c = 0; c < r.cols(); ++c)
                rad_[i * n + i].push_back(quiver::combine(basis, r.column(c), summands_[i], summands_[i]));
        }
}

SubcategoryX SubcategoryX::from_modules(const PathAlgebra::Ptr& alg, const std::vector<Representation>& generators,
                                        std::uint64_t seed) {
    std::vector<quiver::Summand> leaves;
    for (const auto& g : generators) {
        auto parts = quiver::decompose(g, seed);
        leaves.insert(leaves.end(), parts.begin(), parts.end());
    }
    auto classes = quiver::group_isomorphic(leaves);
    std::vector<Representation> reps;
    std::vector<std::size_t> mult;
    for (const auto& c : classes) {
        reps.push_back(c.module);
        mult.push_back(c.multiplicity);
    }
    return SubcategoryX(alg, std::move(reps), std::move(mult));
}

Representation SubcategoryX::basic_module() const { return quiver::direct_sum_module(summands_, alg_); }

XObject SubcategoryX::object(std::vector<std::size_t> parts) const {
    std::vector<Representation> mods;
    for (auto i : parts) mods.push_back(summands_.at(i));
    return {std::move(parts), quiver::direct_sum(mods, alg_)};
}

XObject SubcategoryX::concat(const XObject& a, const XObject& b) const {
    std::vector<std::size_t> parts = a.parts;
    parts.insert(parts.end(), b.parts.begin(), b.parts.end());
    return object(std::move(parts));
}

Morphism block_projection(const XObject& whole, const XObject& piece, std::size_t first_part) {
    Morphism out = Morphism::zero(whole.module(), piece.module());
    for (std::size_t k = 0; k < piece.parts.size(); ++k)
        out = out + piece.sum.injections[k] * whole.sum.projections[first_part + k];
    return out;
}

Morphism block_injection(const XObject& piece, const XObject& whole, std::size_t first_part) {
    Morphism out = Morphism::zero(piece.module(), whole.module());
    for (std::size_t k = 0; k < piece.parts.size(); ++k)
        out = out + whole.sum.injections[first_part + k] * piece.sum.projections[k];
    return out;
}

std::vector<Morphism> SubcategoryX::hom_basis(const XObject& a, const XObject& b) const {
    std::vector<Morphism> out;
    for (std::size_t s = 0; s < a.parts.size(); ++s)
        for (std::size_t t = 0; t < b.parts.size(); ++t)
            for (const auto& h : hom(a.parts[s], b.parts[t])) out.push_back(embed(h, a, s, b, t));
    return out;
}

std::vector<Morphism> SubcategoryX::hom_from_summand(std::size_t i, const XObject& b) const {
    return hom_basis(single(i), b);
}

std::vector<Morphism> SubcategoryX::hom_to_summand(const XObject& a, std::size_t i) const {
    return hom_basis(a, single(i));
}

bool SubcategoryX::contains(const Representation& y) const { return in_add(y, summands_); }

SubcategoryX SubcategoryX::dual() const {
    SubcategoryX d;
    d.alg_ = alg_->op();
    d.mult_ = mult_;
    const std::size_t n = size();
    for (const auto& s : summands_) d.summands_.push_back(quiver::dualize(s));
    d.hom_.resize(n * n);
    d.rad_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // Hom(DX_i, DX_j) = D Hom(X_j, X_i)
            for (const auto& h : hom(j, i)) d.hom_[i * n + j].push_back(quiver::dualize(h));
            for (const auto& h : radical_hom(j, i)) d.rad_[i * n + j].push_back(quiver::dualize(h));
        }
    return d;
}

bool in_add(const Representation& y, const std::vector<Representation>& generators) {
    if (y.dim() == 0) return true;
    std::vector<Matrix> cols;
    for (const auto& g : generators) {
        auto out = quiver::hom_space(y, g);
        if (out.empty()) continue;
        auto in = quiver::hom_space(g, y);
        for (const auto& f : in)
            for (const auto& h : out) cols.push_back((f * h).to_vector());
    }
    if (cols.empty()) return false;
    Matrix span = ff::hstack(cols, cols[0].rows(), y.p());
    return ff::column_in_span(span, Morphism::identity(y).to_vector());
}

std::size_t rank_after(const std::vector<Morphism>& basis, const Morphism& f) {
    return ff::rank(composite_columns(basis, f, true));
}

std::size_t rank_before(const std::vector<Morphism>& basis, const Morphism& f) {
    return ff::rank(composite_columns(basis, f, false));
}

std::optional<Violation> weak_kernel_violation(const SubcategoryX& x, const XMorphism& f, const XMorphism& g) {
    if (!(g.map * f.map).is_zero()) return Violation{Violation::Kind::NonzeroComposite, 0};
    for (std::size_t i = 0; i < x.size(); ++i) {
        auto mid = x.hom_from_summand(i, f.target);
        std::size_t ker = mid.size() - rank_after(mid, g.map);
        std::size_t img = rank_after(x.hom_from_summand(i, f.source), f.map);
        if (img != ker) return Violation{Violation::Kind::NotExact, i};
    }
    return std::nullopt;
}

std::optional<Violation> weak_cokernel_violation(const SubcategoryX& x, const XMorphism& f, const XMorphism& g) {
    if (!(g.map * f.map).is_zero()) return Violation{Violation::Kind::NonzeroComposite, 0};
    for (std::size_t i = 0; i < x.size(); ++i) {
        auto mid = x.hom_to_summand(f.target, i);
        std::size_t ker = mid.size() - rank_before(mid, f.map);
        std::size_t img = rank_before(x.hom_to_summand(g.target, i), g.map);
        if (img != ker) return Violation{Violation::Kind::NotExact, i};
    }
    return std::nullopt;
}

std::optional<std::size_t> epi_in_x_violation(const SubcategoryX& x, const XMorphism& f) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        auto h = x.hom_to_summand(f.target, i);
        if (rank_before(h, f.map) != h.size()) return i;
    }
    return std::nullopt;
}

std::optional<std::size_t> mono_in_x_violation(const SubcategoryX& x, const XMorphism& f) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        auto h = x.hom_from_summand(i, f.source);
        if (rank_after(h, f.map) != h.size()) return i;
    }
    return std::nullopt;
}

XMorphism dual_morphism(const SubcategoryX& dual_x, const XMorphism& f) {
    XObject s = dual_x.object(f.target.parts);
    XObject t = dual_x.object(f.source.parts);
    std::vector<Matrix> maps;
    for (const auto& m : f.map.maps()) maps.push_back(m.transpose());
    return {s, t, Morphism::unchecked(s.module(), t.module(), std::move(maps))};
}

}  // namespace tilt::approx
