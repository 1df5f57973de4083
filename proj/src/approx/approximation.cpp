#include "tilt/approx/approximation.hpp"

#include "tilt/quiver/operations.hpp"

namespace tilt::approx {

namespace {

Matrix columns_of(const std::vector<Matrix>& cols, std::size_t height, std::uint32_t p) {
    if (cols.empty()) return Matrix(height, 0, p);
    return ff::hstack(cols, height, p);
}

bool grows_span(std::vector<Matrix>& span, const Matrix& v, std::uint32_t p) {
    if (span.empty()) return !v.is_zero();
    return !ff::column_in_span(columns_of(span, v.rows(), p), v);
}

// Picks basis elements of `hom` that stay independent modulo `rad` and the End(X_i)-orbits of
// elements already chosen. `orbit(h)` lists the vectors spanning h End(X_i) (or End(X_i) h).
template <class Orbit>
std::vector<std::size_t> top_selection(const std::vector<Morphism>& hom, std::vector<Matrix> span, Orbit orbit,
                                       std::uint32_t p) {
    std::vector<std::size_t> chosen;
    for (std::size_t k = 0; k < hom.size(); ++k) {
        Matrix v = hom[k].to_vector();
        if (!grows_span(span, v, p)) continue;
        chosen.push_back(k);
        for (auto& w : orbit(hom[k])) span.push_back(std::move(w));
    }
    return chosen;
}

}  // namespace

Approximation right_approximation(const SubcategoryX& x, const Representation& a, bool minimal) {
    const std::uint32_t p = x.p();
    std::vector<std::size_t> parts;
    std::vector<Morphism> maps;
    std::vector<std::vector<Morphism>> into(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) into[i] = quiver::hom_space(x.summand(i), a);
    for (std::size_t i = 0; i < x.size(); ++i) {
        const auto& hom = into[i];
        std::vector<std::size_t> keep;
        if (!minimal) {
            for (std::size_t k = 0; k < hom.size(); ++k) keep.push_back(k);
        } else {
            std::vector<Matrix> rad;
            for (std::size_t j = 0; j < x.size(); ++j)
                for (const auto& g : into[j])
                    for (const auto& r : x.radical_hom(i, j)) rad.push_back((g * r).to_vector());
            keep = top_selection(
                hom, std::move(rad),
                [&](const Morphism& h) {
                    std::vector<Matrix> o;
                    for (const auto& e : x.hom(i, i)) o.push_back((h * e).to_vector());
                    return o;
                },
                p);
        }
        for (auto k : keep) {
            parts.push_back(i);
            maps.push_back(hom[k]);
        }
    }
    XObject obj = x.object(parts);
    Morphism map = maps.empty() ? Morphism::zero(obj.module(), a) : quiver::row_morphism(obj.sum, maps);
    return {std::move(obj), std::move(map)};
}

Approximation left_approximation(const SubcategoryX& x, const Representation& a, bool minimal) {
    const std::uint32_t p = x.p();
    std::vector<std::size_t> parts;
    std::vector<Morphism> maps;
    std::vector<std::vector<Morphism>> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = quiver::hom_space(a, x.summand(i));
    for (std::size_t i = 0; i < x.size(); ++i) {
        const auto& hom = out[i];
        std::vector<std::size_t> keep;
        if (!minimal) {
            for (std::size_t k = 0; k < hom.size(); ++k) keep.push_back(k);
        } else {
            std::vector<Matrix> rad;
            for (std::size_t j = 0; j < x.size(); ++j)
                for (const auto& g : out[j])
                    for (const auto& r : x.radical_hom(j, i)) rad.push_back((r * g).to_vector());
            keep = top_selection(
                hom, std::move(rad),
                [&](const Morphism& h) {
                    std::vector<Matrix> o;
                    for (const auto& e : x.hom(i, i)) o.push_back((e * h).to_vector());
                    return o;
                },
                p);
        }
        for (auto k : keep) {
            parts.push_back(i);
            maps.push_back(hom[k]);
        }
    }
    XObject obj = x.object(parts);
    Morphism map = maps.empty() ? Morphism::zero(a, obj.module()) : quiver::column_morphism(obj.sum, maps);
    return {std::move(obj), std::move(map)};
}

XMorphism weak_kernel(const SubcategoryX& x, const XMorphism& g, bool minimal) {
    auto k = quiver::kernel(g.map);
    auto ap = right_approximation(x, k.module, minimal);
    return {ap.object, g.source, k.inclusion * ap.map};
}

XMorphism weak_cokernel(const SubcategoryX& x, const XMorphism& f, bool minimal) {
    auto c = quiver::cokernel(f.map);
    auto ap = left_approximation(x, c.module, minimal);
    return {f.target, ap.object, ap.map * c.projection};
}

ApproxSequence d_kernel(const SubcategoryX& x, const XMorphism& f, std::size_t d) {
    if (d == 0) throw std::invalid_argument("d must be at least 1");
    ApproxSequence s;
    s.chain.push_back(f);
    for (std::size_t k = 0; k < d; ++k) s.chain.push_back(weak_kernel(x, s.chain.back(), true));
    s.is_weak_kernel.push_back(false);
    s.is_weak_cokernel.assign(s.chain.size(), false);
    for (std::size_t k = 1; k < s.chain.size(); ++k)
        s.is_weak_kernel.push_back(!weak_kernel_violation(x, s.chain[k], s.chain[k - 1]));
    for (std::size_t k = 1; k < s.chain.size(); ++k)
        if (!s.is_weak_kernel[k])
            throw DKernelNotLeftExact("weak kernel test failed at position " + std::to_string(k), 0);
    if (auto w = mono_in_x_violation(x, s.chain.back()))
        throw DKernelNotLeftExact("Hom(X', f_" + std::to_string(d + 1) + ") is not injective", *w);
    return s;
}

ApproxSequence d_cokernel(const SubcategoryX& x, const XMorphism& f, std::size_t d) {
    if (d == 0) throw std::invalid_argument("d must be at least 1");
    ApproxSequence s;
    s.chain.push_back(f);
    for (std::size_t k = 0; k < d; ++k) s.chain.push_back(weak_cokernel(x, s.chain.back(), true));
    s.is_weak_kernel.assign(s.chain.size(), false);
    s.is_weak_cokernel.push_back(false);
    for (std::size_t k = 1; k < s.chain.size(); ++k)
        s.is_weak_cokernel.push_back(!weak_cokernel_violation(x, s.chain[k - 1], s.chain[k]));
    for (std::size_t k = 1; k < s.chain.size(); ++k)
        if (!s.is_weak_cokernel[k])
            throw DKernelNotLeftExact("weak cokernel test failed at position " + std::to_string(k), 0);
    if (auto w = epi_in_x_violation(x, s.chain.back()))
        throw DKernelNotLeftExact("Hom(f_" + std::to_string(d + 1) + ", X') is not injective", *w);
    return s;
}

}  // namespace tilt::approx
