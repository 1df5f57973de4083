#include "tilt/quiver/decompose.hpp"

#include <random>

#include "tilt/ff/poly.hpp"
#include "tilt/gamma/abstract_algebra.hpp"
#include "tilt/quiver/operations.hpp"

namespace tilt::quiver {

namespace {

constexpr std::size_t kRandomCandidates = 128;

Matrix matrix_power(Matrix m, std::size_t e) {
    Matrix r = Matrix::identity(m.rows(), m.p());
    while (e) {
        if (e & 1) r = r * m;
        m = m * m;
        e >>= 1;
    }
    return r;
}

enum class Outcome { Leaf, Split };

struct Splitting {
    Outcome outcome;
    std::vector<Matrix> kernel_spans;
    std::vector<Matrix> image_spans;
};

Splitting find_splitting(const Representation& a, std::mt19937_64& rng) {
    const std::uint32_t p = a.p();
    auto basis = hom_space(a, a);
    const std::size_t m = basis.size();
    if (p <= m) throw gamma::RadicalPreconditionViolated(m, p);
    if (m == 1) return {Outcome::Leaf, {}, {}};
    auto end = gamma::endomorphism_algebra(a, basis);
    const std::size_t codim = m - gamma::radical(end.algebra).cols();
    if (codim == 1) return {Outcome::Leaf, {}, {}};

    for (std::size_t trial = 0; trial < m + kRandomCandidates; ++trial) {
        Morphism r = Morphism::zero(a, a);
        if (trial < m) {
            r = basis[trial];
        } else {
            for (const auto& b : basis) r = r + b.scaled(static_cast<Elem>(rng() % p));
        }
        auto chi = ff::charpoly(r.total());
        auto s = ff::squarefree_part(chi);
        if (!s) continue;
        auto g = ff::proper_factor(*s, rng);
        if (!g) {
            if (static_cast<std::size_t>(s->degree()) == codim) return {Outcome::Leaf, {}, {}};
            continue;
        }
        Splitting out{Outcome::Split, {}, {}};
        for (std::size_t v = 0; v < a.num_vertices(); ++v) {
            Matrix sv = matrix_power(ff::evaluate(*g, r.map(v)), a.dim());
            out.kernel_spans.push_back(ff::nullspace_basis(sv));
            out.image_spans.push_back(ff::column_space_basis(sv));
        }
        return out;
    }
    throw DecompositionFailed("no splitting endomorphism found for a module of dimension " + std::to_string(a.dim()));
}

void split_recursive(const Representation& a, const Morphism& inc, const Morphism& proj, std::mt19937_64& rng,
                     std::vector<Summand>& out) {
    if (a.dim() == 0) return;
    Splitting s = find_splitting(a, rng);
    if (s.outcome == Outcome::Leaf) {
        out.push_back({a, inc, proj});
        return;
    }
    SubModule k = submodule(a, s.kernel_spans);
    SubModule i = submodule(a, s.image_spans);
    std::vector<Matrix> pk, pi;
    for (std::size_t v = 0; v < a.num_vertices(); ++v) {
        std::size_t dk = k.module.dim(v);
        Matrix t = ff::hstack(k.inclusion.map(v), i.inclusion.map(v));
        auto inv = ff::inverse(t);
        if (!inv) throw DecompositionFailed("Fitting summands are not complementary");
        pk.push_back(inv->block(0, 0, dk, a.dim(v)));
        pi.push_back(inv->block(dk, 0, i.module.dim(v), a.dim(v)));
    }
    Morphism proj_k = Morphism::unchecked(a, k.module, std::move(pk));
    Morphism proj_i = Morphism::unchecked(a, i.module, std::move(pi));
    split_recursive(k.module, inc * k.inclusion, proj_k * proj, rng, out);
    split_recursive(i.module, inc * i.inclusion, proj_i * proj, rng, out);
}

}  // namespace

std::vector<Summand> decompose(const Representation& m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Summand> out;
    Morphism id = Morphism::identity(m);
    split_recursive(m, id, id, rng, out);
    return out;
}

std::vector<IsoClass> group_isomorphic(const std::vector<Summand>& summands) {
    std::vector<IsoClass> classes;
    for (std::size_t i = 0; i < summands.size(); ++i) {
        bool placed = false;
        for (auto& c : classes)
            if (indecomposables_isomorphic(c.module, summands[i].module)) {
                ++c.multiplicity;
                c.members.push_back(i);
                placed = true;
                break;
            }
        if (!placed) classes.push_back({summands[i].module, 1, {i}});
    }
    return classes;
}

bool is_indecomposable(const Representation& m, std::uint64_t seed) {
    if (m.dim() == 0) return false;
    std::mt19937_64 rng(seed);
    return find_splitting(m, rng).outcome == Outcome::Leaf;
}

bool indecomposables_isomorphic(const Representation& a, const Representation& b) {
    if (a.algebra() != b.algebra() || a.dims() != b.dims()) return false;
    if (a.dim() == 0) return true;
    auto h1 = hom_space(a, b);
    if (h1.empty()) return false;
    auto h2 = hom_space(b, a);
    for (const auto& f : h1) {
        if (f.is_iso()) return true;
        for (const auto& g : h2)
            if ((g * f).is_iso()) return true;
    }
    return false;
}

bool is_isomorphic(const Representation& a, const Representation& b, std::uint64_t seed) {
    if (a.algebra() != b.algebra() || a.dims() != b.dims()) return false;
    if (a.dim() == 0) return true;
    auto h1 = hom_space(a, b);
    if (h1.empty()) return false;
    std::mt19937_64 rng(seed);
    for (const auto& f : h1)
        if (f.is_iso()) return true;
    for (int t = 0; t < 8; ++t) {
        std::vector<Elem> c(h1.size());
        for (auto& x : c) x = static_cast<Elem>(rng() % a.p());
        if (combine(h1, c, a, b).is_iso()) return true;
    }
    auto da = decompose(a, seed);
    auto db = decompose(b, seed);
    if (da.size() == 1 && db.size() == 1) return indecomposables_isomorphic(a, b);
    if (da.size() != db.size()) return false;
    std::vector<bool> used(db.size(), false);
    for (const auto& x : da) {
        bool found = false;
        for (std::size_t j = 0; j < db.size() && !found; ++j)
            if (!used[j] && indecomposables_isomorphic(x.module, db[j].module)) {
                used[j] = true;
                found = true;
            }
        if (!found) return false;
    }
    return true;
}

}  // namespace tilt::quiver
