#include "tilt/functors/coherent.hpp"

#include "tilt/approx/approximation.hpp"

namespace tilt::functors {

using approx::block_projection;
using approx::rank_after;
using approx::rank_before;

namespace {

Matrix columns(const std::vector<Morphism>& fs, std::size_t height, std::uint32_t p) {
    std::vector<Matrix> cols;
    for (const auto& f : fs) cols.push_back(f.to_vector());
    if (cols.empty()) return Matrix(height, 0, p);
    return ff::hstack(cols, cols[0].rows(), p);
}

std::vector<Morphism> after(const Morphism& f, const std::vector<Morphism>& hs) {
    std::vector<Morphism> out;
    for (const auto& h : hs) out.push_back(f * h);
    return out;
}

std::vector<Morphism> before(const std::vector<Morphism>& hs, const Morphism& f) {
    std::vector<Morphism> out;
    for (const auto& h : hs) out.push_back(h * f);
    return out;
}

bool in_span(const std::vector<Morphism>& span, const Morphism& v) {
    if (v.is_zero()) return true;
    if (span.empty()) return false;
    return ff::column_in_span(columns(span, 0, v.source().p()), v.to_vector());
}

}  // namespace

CoherentFunctor yoneda(const SubcategoryX& x, const XObject& obj) {
    XObject zero = x.zero_object();
    return {{zero, obj, Morphism::zero(zero.module(), obj.module())}};
}

CoherentFunctor zero_functor(const SubcategoryX& x) { return yoneda(x, x.zero_object()); }

std::size_t evaluate_dim(const SubcategoryX& x, const CoherentFunctor& f, std::size_t i) {
    return x.hom_from_summand(i, f.x0()).size() - rank_after(x.hom_from_summand(i, f.x1()), f.presentation.map);
}

bool is_liftable(const SubcategoryX& x, const FunctorMorphism& phi) {
    const auto& g = phi.target.presentation.map;
    return in_span(after(g, x.hom_basis(phi.source.x1(), phi.target.x1())), phi.lift * phi.source.presentation.map);
}

bool same_transformation(const SubcategoryX& x, const FunctorMorphism& phi, const FunctorMorphism& psi) {
    const auto& g = phi.target.presentation.map;
    return in_span(after(g, x.hom_basis(phi.source.x0(), phi.target.x1())), phi.lift - psi.lift);
}

std::vector<FunctorMorphism> hom_functors(const SubcategoryX& x, const CoherentFunctor& f, const CoherentFunctor& g) {
    const std::uint32_t p = x.p();
    auto h = x.hom_basis(f.x0(), g.x0());
    if (h.empty()) return {};
    const auto& fm = f.presentation.map;
    const auto& gm = g.presentation.map;
    const std::size_t len = quiver::hom_vector_length(f.x1().module(), g.x0().module());
    // A = {c : (sum c_k h_k) f in g Hom(X1, Y1)}
    Matrix phi = columns(before(h, fm), len, p);
    Matrix w = columns(after(gm, x.hom_basis(f.x1(), g.x1())), len, p);
    Matrix null = ff::nullspace_basis(ff::hstack(phi, w));
    Matrix a = null.block(0, 0, h.size(), null.cols());
    // N = g Hom(X0, Y1), in the coordinates of h
    Matrix hcols = columns(h, 0, p);
    std::vector<Matrix> ncols;
    for (const auto& s : x.hom_basis(f.x0(), g.x1())) {
        Morphism gs = gm * s;
        if (gs.is_zero()) continue;
        auto sol = ff::solve(hcols, gs.to_vector());
        if (!sol) throw std::logic_error("g s outside Hom(X0, Y0)");
        ncols.push_back(sol->particular);
    }
    Matrix n = ncols.empty() ? Matrix(h.size(), 0, p) : ff::hstack(ncols, h.size(), p);
    std::vector<FunctorMorphism> out;
    for (auto c : ff::independent_extension(n, a))
        out.push_back({f, g, quiver::combine(h, a.column(c), f.x0().module(), g.x0().module())});
    return out;
}

std::size_t evaluate_rank(const SubcategoryX& x, const FunctorMorphism& phi, std::size_t i) {
    auto sg = after(phi.target.presentation.map, x.hom_from_summand(i, phi.target.x1()));
    auto sa = after(phi.lift, x.hom_from_summand(i, phi.source.x0()));
    const std::size_t len = quiver::hom_vector_length(x.summand(i), phi.target.x0().module());
    Matrix g = columns(sg, len, x.p());
    return ff::rank(ff::hstack(columns(sa, len, x.p()), g)) - ff::rank(g);
}

FunctorKernel kernel_functor(const SubcategoryX& x, const FunctorMorphism& phi) {
    const auto& f = phi.source.presentation;
    const auto& g = phi.target.presentation;
    // K -> X0 + Y1 weak kernel of [a, -g]
    XObject x0y1 = x.concat(f.target, g.source);
    Morphism c = phi.lift * block_projection(x0y1, f.target, 0) -
                 g.map * block_projection(x0y1, g.source, f.target.parts.size());
    auto w = approx::weak_kernel(x, {x0y1, g.target, c});
    XMorphism k{w.source, f.target, block_projection(x0y1, f.target, 0) * w.map};
    // L -> K + X1 weak kernel of [k, f]
    XObject kx1 = x.concat(k.source, f.source);
    Morphism d = k.map * block_projection(kx1, k.source, 0) + f.map * block_projection(kx1, f.source, k.source.parts.size());
    auto w2 = approx::weak_kernel(x, {kx1, f.target, d});
    XMorphism l{w2.source, k.source, block_projection(kx1, k.source, 0) * w2.map};
    CoherentFunctor ker{l};
    return {ker, {ker, phi.source, k.map}};
}

FunctorCokernel cokernel_functor(const SubcategoryX& x, const FunctorMorphism& phi) {
    const auto& f = phi.source.presentation;
    const auto& g = phi.target.presentation;
    XObject y1x0 = x.concat(g.source, f.target);
    Morphism c = g.map * block_projection(y1x0, g.source, 0) +
                 phi.lift * block_projection(y1x0, f.target, g.source.parts.size());
    CoherentFunctor cok{{y1x0, g.target, c}};
    return {cok, {phi.target, cok, Morphism::identity(g.target.module())}};
}

std::optional<std::size_t> effaceable_witness(const SubcategoryX& x, const CoherentFunctor& f) {
    return approx::epi_in_x_violation(x, f.presentation);
}

Representation psi_tilde(const CoherentFunctor& f) { return quiver::cokernel(f.presentation.map).module; }

StarData star(const SubcategoryX& dual_x, const CoherentFunctor& f) {
    XMorphism df = approx::dual_morphism(dual_x, f.presentation);  // D X0 -> D X1
    CoherentFunctor y0 = yoneda(dual_x, df.source);
    CoherentFunctor y1 = yoneda(dual_x, df.target);
    auto ker = kernel_functor(dual_x, {y0, y1, df.map});
    return {ker.functor, CoherentFunctor{df}, ker.inclusion.lift};
}

CoherentFunctor transport(const SubcategoryX& to, const CoherentFunctor& f) {
    XObject s = to.object(f.x1().parts);
    XObject t = to.object(f.x0().parts);
    return {{s, t, Morphism::unchecked(s.module(), t.module(), f.presentation.map.maps())}};
}

std::size_t ext_to_representable(const SubcategoryX& x, const CoherentFunctor& g, std::size_t j, std::size_t i) {
    // P_1 -> P_0 is the presentation; P_{k+1} -> P_k are iterated weak kernels.
    std::vector<XMorphism> d{g.presentation};
    while (d.size() < i + 1) d.push_back(approx::weak_kernel(x, d.back()));
    auto obj = [&](std::size_t k) { return k == 0 ? g.x0() : d[k - 1].source; };
    auto hom_i = x.hom_to_summand(obj(i), j);
    std::size_t out_rank = rank_before(hom_i, d[i].map);  // h -> h d_{i+1}
    std::size_t in_rank = i == 0 ? 0 : rank_before(x.hom_to_summand(obj(i - 1), j), d[i - 1].map);
    return hom_i.size() - out_rank - in_rank;
}

std::vector<AdjunctionPoint> star_adjunction_terms(const SubcategoryX& x, const SubcategoryX& dual_x,
                                                   const CoherentFunctor& f) {
    StarData st = star(dual_x, f);
    const XObject& kobj = st.star.x0();
    const Morphism& l = st.star.presentation.map;
    std::vector<AdjunctionPoint> out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        AdjunctionPoint pt{};
        pt.point = i;
        pt.f = evaluate_dim(x, f, i);
        // F**(X_i) = Hom(F*, X(X_i, -)) = {a: K -> D X_i with a l = 0}
        auto hk = dual_x.hom_to_summand(kobj, i);
        pt.f_star_star = hk.size() - rank_before(hk, l);
        // unit: x -> D x o k
        std::vector<Morphism> images;
        for (const auto& h : x.hom_from_summand(i, f.x0())) {
            auto dh = approx::dual_morphism(dual_x, {x.single(i), f.x0(), h});
            images.push_back(dh.map * st.star_inclusion);
        }
        const std::size_t len = quiver::hom_vector_length(kobj.module(), dual_x.summand(i));
        const std::size_t r = ff::rank(columns(images, len, x.p()));
        pt.unit_kernel = pt.f - r;
        pt.unit_cokernel = pt.f_star_star - r;
        pt.ext1 = ext_to_representable(dual_x, st.transpose, i, 1);
        pt.ext2 = ext_to_representable(dual_x, st.transpose, i, 2);
        out.push_back(pt);
    }
    return out;
}

std::vector<AdjunctionPoint> verify_star_adjunction_sequence(const SubcategoryX& x, const SubcategoryX& dual_x,
                                                             const CoherentFunctor& f) {
    auto terms = star_adjunction_terms(x, dual_x, f);
    for (const auto& t : terms)
        if (!t.exact())
            throw SequenceCheckFailed("adjunction sequence not exact at X" + std::to_string(t.point + 1), t.point);
    return terms;
}

}  // namespace tilt::functors
