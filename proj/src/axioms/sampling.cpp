#include "tilt/axioms/sampling.hpp"

#include "tilt/approx/approximation.hpp"
#include "tilt/approx/homological.hpp"
#include "tilt/quiver/decompose.hpp"

namespace tilt::axioms {

using quiver::Morphism;

std::mt19937_64 stream_rng(std::uint64_t seed, std::string_view stream) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : stream) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
    return std::mt19937_64(seq);
}

std::vector<XMorphism> spanning_family(const SubcategoryX& x) {
    std::vector<XMorphism> out;
    const auto zero = x.zero_object();
    for (std::size_t i = 0; i < x.size(); ++i) {
        auto s = x.single(i);
        out.push_back({zero, s, Morphism::zero(zero.module(), s.module())});
        out.push_back({s, zero, Morphism::zero(s.module(), zero.module())});
        out.push_back({s, s, Morphism::identity(s.module())});
    }
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            for (const auto& h : x.hom(i, j)) out.push_back({x.single(i), x.single(j), h});
    for (std::size_t a = 0; a < x.size(); ++a) {
        std::vector<std::size_t> in_parts, out_parts;
        std::vector<Morphism> in_maps, out_maps;
        for (std::size_t i = 0; i < x.size(); ++i) {
            for (const auto& h : x.radical_hom(i, a)) {
                in_parts.push_back(i);
                in_maps.push_back(h);
            }
            for (const auto& h : x.radical_hom(a, i)) {
                out_parts.push_back(i);
                out_maps.push_back(h);
            }
        }
        if (!in_maps.empty()) {
            auto src = x.object(in_parts);
            out.push_back({src, x.single(a), quiver::row_morphism(src.sum, in_maps)});
        }
        if (!out_maps.empty()) {
            auto tgt = x.object(out_parts);
            out.push_back({x.single(a), tgt, quiver::column_morphism(tgt.sum, out_maps)});
        }
    }
    return out;
}

std::vector<XMorphism> random_morphisms(const SubcategoryX& x, const SampleOptions& opt, std::string_view stream) {
    std::vector<XMorphism> out;
    if (x.size() == 0) return out;
    auto rng = stream_rng(opt.seed, stream);
    const std::size_t top = std::max<std::size_t>(opt.max_parts, 1);
    auto pick = [&](std::size_t n) {
        std::vector<std::size_t> parts(n);
        for (auto& p : parts) p = rng() % x.size();
        return x.object(parts);
    };
    for (std::size_t t = 0; t < opt.trials; ++t) {
        std::size_t ns = 1 + rng() % top;
        std::size_t nt = 1 + rng() % top;
        if (t % 3 == 1) ns = nt + 1 + rng() % 2;  // wide: likely epi
        if (t % 3 == 2) nt = ns + 1 + rng() % 2;  // tall: likely mono
        auto a = pick(ns);
        auto b = pick(nt);
        out.push_back(approx::random_morphism(x, a, b, rng));
    }
    return out;
}

std::vector<XMorphism> sample_morphisms(const SubcategoryX& x, const SampleOptions& opt, std::string_view stream) {
    auto out = spanning_family(x);
    for (auto& f : random_morphisms(x, opt, stream)) out.push_back(std::move(f));
    return out;
}

std::vector<Representation> indecomposable_classes(const std::vector<Representation>& modules) {
    std::vector<Representation> kept;
    for (const auto& m : modules) {
        if (m.is_zero()) continue;
        for (auto& s : quiver::decompose(m)) {
            bool seen = false;
            for (const auto& k : kept)
                if (k.dims() == s.module.dims() && quiver::indecomposables_isomorphic(k, s.module)) {
                    seen = true;
                    break;
                }
            if (!seen) kept.push_back(s.module);
        }
    }
    return kept;
}

namespace {

// P/rad^k P for k = 1, 2, ... until rad^k P = 0.
std::vector<Representation> radical_quotients(const Representation& p) {
    std::vector<Representation> out;
    auto r = quiver::radical(p);
    Morphism inc = r.inclusion;
    while (true) {
        out.push_back(quiver::cokernel(inc).module);
        if (r.module.is_zero()) break;
        auto next = quiver::radical(r.module);
        inc = inc * next.inclusion;
        r = next;
    }
    return out;
}

}  // namespace

std::vector<Representation> generated_test_modules(const SubcategoryX& x) {
    const auto& alg = x.algebra();
    const std::size_t nv = alg->quiver().num_vertices();
    std::vector<Representation> seeds;
    for (std::size_t v = 0; v < nv; ++v) {
        seeds.push_back(quiver::simple(alg, v));
        seeds.push_back(quiver::injective(alg, v));
        for (auto& q : radical_quotients(quiver::projective(alg, v))) seeds.push_back(q);
        for (auto& q : radical_quotients(quiver::projective(alg->op(), v))) seeds.push_back(quiver::dualize(q));
    }
    for (const auto& s : x.summands()) seeds.push_back(s);
    auto base = indecomposable_classes(seeds);
    std::vector<Representation> grown = base;
    for (const auto& m : base) {
        grown.push_back(approx::tau(m));
        grown.push_back(approx::tau_inverse(m));
        grown.push_back(approx::syzygy(m));
        grown.push_back(approx::cosyzygy(m));
    }
    return indecomposable_classes(grown);
}

}  // namespace tilt::axioms
