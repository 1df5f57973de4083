#include "tilt/quiver/algebra.hpp"

#include <algorithm>
#include <set>

namespace tilt::quiver {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
    std::set<std::string> seen;
    for (const auto& v : vertices_)
        if (!seen.insert(v).second) throw QuiverError("duplicate vertex name '" + v + "'");
    seen.clear();
    for (const auto& a : arrows_) {
        if (!seen.insert(a.name).second) throw QuiverError("duplicate arrow name '" + a.name + "'");
        if (a.source >= vertices_.size() || a.target >= vertices_.size())
            throw QuiverError("arrow '" + a.name + "' has an undeclared endpoint");
    }
}

Quiver Quiver::from_names(std::vector<std::string> vertices,
                          const std::vector<std::tuple<std::string, std::string, std::string>>& arrows) {
    Quiver tmp(vertices, {});
    std::vector<Arrow> as;
    for (const auto& [name, s, t] : arrows) as.push_back({name, tmp.vertex_index(s), tmp.vertex_index(t)});
    return Quiver(std::move(vertices), std::move(as));
}

std::size_t Quiver::vertex_index(const std::string& name) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), name);
    if (it == vertices_.end()) throw QuiverError("unknown vertex '" + name + "'");
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Quiver::arrow_index(const std::string& name) const {
    for (std::size_t i = 0; i < arrows_.size(); ++i)
        if (arrows_[i].name == name) return i;
    throw QuiverError("unknown arrow '" + name + "'");
}

Quiver Quiver::opposite() const {
    std::vector<Arrow> rev;
    for (const auto& a : arrows_) rev.push_back({a.name, a.target, a.source});
    return Quiver(vertices_, std::move(rev));
}

namespace {

using PathKey = std::pair<std::size_t, std::vector<std::size_t>>;

// Ascending: shorter first, then lexicographic on arrow names in composition order.
struct PathLess {
    const Quiver* q;
    bool operator()(const Path& x, const Path& y) const {
        if (x.length() != y.length()) return x.length() < y.length();
        if (x.length() == 0) return x.source < y.source;
        for (std::size_t i = 0; i < x.length(); ++i) {
            const auto& nx = q->arrow(x.arrows[i]).name;
            const auto& ny = q->arrow(y.arrows[i]).name;
            if (nx != ny) return nx < ny;
        }
        return false;
    }
};

Path parse_path(const Quiver& q, const std::vector<std::string>& names) {
    if (names.empty()) throw QuiverError("relation term with an empty path");
    Path p;
    for (const auto& n : names) p.arrows.push_back(q.arrow_index(n));
    for (std::size_t i = 0; i + 1 < p.arrows.size(); ++i)
        if (q.arrow(p.arrows[i + 1]).target != q.arrow(p.arrows[i]).source)
            throw QuiverError("relation path is not composable at '" + names[i] + "'");
    p.target = q.arrow(p.arrows.front()).target;
    p.source = q.arrow(p.arrows.back()).source;
    return p;
}

constexpr std::size_t kMaxPaths = 200000;

}  // namespace

PathAlgebra::Ptr PathAlgebra::build(const Quiver& q, const std::vector<Relation>& relations, std::uint32_t p,
                                    std::size_t max_path_len) {
    ff::PrimeField field(p);
    if (max_path_len < 2) throw QuiverError("max path length must be at least 2");
    if (q.num_vertices() == 0) throw QuiverError("quiver has no vertices");

    struct ParsedTerm {
        Elem coeff;
        Path path;
    };
    std::vector<std::vector<ParsedTerm>> rels;
    for (const auto& rel : relations) {
        std::vector<ParsedTerm> terms;
        for (const auto& t : rel) {
            Path path = parse_path(q, t.path);
            if (path.length() < 2)
                throw NotAdmissible("relation term of length " + std::to_string(path.length()) +
                                    " is not in the square of the arrow ideal");
            if (!terms.empty() && (terms[0].path.source != path.source || terms[0].path.target != path.target))
                throw QuiverError("relation terms are not parallel paths");
            terms.push_back({field.reduce(t.coeff), std::move(path)});
        }
        if (!terms.empty()) rels.push_back(std::move(terms));
    }

    // all paths up to max_path_len
    std::vector<Path> paths;
    std::map<PathKey, std::size_t> index;
    for (std::size_t v = 0; v < q.num_vertices(); ++v) paths.push_back({v, v, {}});
    std::size_t layer_begin = 0;
    for (std::size_t len = 1; len <= max_path_len; ++len) {
        std::size_t layer_end = paths.size();
        for (std::size_t i = layer_begin; i < layer_end; ++i)
            for (std::size_t a = 0; a < q.num_arrows(); ++a) {
                if (q.arrow(a).source != paths[i].target) continue;
                Path np;
                np.source = paths[i].source;
                np.target = q.arrow(a).target;
                np.arrows.push_back(a);
                np.arrows.insert(np.arrows.end(), paths[i].arrows.begin(), paths[i].arrows.end());
                paths.push_back(std::move(np));
                if (paths.size() > kMaxPaths)
                    throw NotAdmissible("more than " + std::to_string(kMaxPaths) + " paths up to length " +
                                        std::to_string(max_path_len));
            }
        layer_begin = layer_end;
    }
    // columns: longest and lexicographically largest first, so pivots eliminate the large paths
    PathLess less{&q};
    std::sort(paths.begin(), paths.end(), [&](const Path& x, const Path& y) { return less(y, x); });
    for (std::size_t i = 0; i < paths.size(); ++i) index[{paths[i].source, paths[i].arrows}] = i;
    auto lookup = [&](std::size_t source, const std::vector<std::size_t>& arrows) {
        return index.at({source, arrows});
    };

    // ideal generated by the relations, truncated above max_path_len
    std::vector<std::vector<std::pair<std::size_t, Elem>>> rows;
    for (const auto& rel : rels) {
        std::size_t s = rel[0].path.source, t = rel[0].path.target;
        for (const auto& u : paths) {
            if (u.source != t) continue;
            for (const auto& w : paths) {
                if (w.target != s) continue;
                std::vector<std::pair<std::size_t, Elem>> row;
                for (const auto& term : rel) {
                    if (u.length() + term.path.length() + w.length() > max_path_len) continue;
                    std::vector<std::size_t> arrows = u.arrows;
                    arrows.insert(arrows.end(), term.path.arrows.begin(), term.path.arrows.end());
                    arrows.insert(arrows.end(), w.arrows.begin(), w.arrows.end());
                    row.push_back({lookup(w.source, arrows), term.coeff});
                }
                if (!row.empty()) rows.push_back(std::move(row));
            }
        }
    }
    Matrix system(rows.size(), paths.size(), p);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, v] : rows[r]) system(r, c) = field.add(system(r, c), v);
    ff::Rref rr = ff::rref(system);

    std::vector<long> pivot_row(paths.size(), -1);
    for (std::size_t r = 0; r < rr.pivots.size(); ++r) pivot_row[rr.pivots[r]] = static_cast<long>(r);
    // normal form of each path as a combination of non-pivot paths
    auto normal_form = [&](std::size_t c) {
        std::vector<std::pair<std::size_t, Elem>> nf;
        if (pivot_row[c] < 0) {
            nf.push_back({c, 1});
            return nf;
        }
        auto r = static_cast<std::size_t>(pivot_row[c]);
        for (std::size_t j = c + 1; j < paths.size(); ++j)
            if (pivot_row[j] < 0 && rr.form(r, j) != 0) nf.push_back({j, field.neg(rr.form(r, j))});
        return nf;
    };

    std::size_t loewy = 0;
    for (std::size_t len = 1; len <= max_path_len && loewy == 0; ++len) {
        bool all_zero = true;
        for (std::size_t c = 0; c < paths.size() && all_zero; ++c)
            if (paths[c].length() == len && !normal_form(c).empty()) all_zero = false;
        if (all_zero) loewy = len;
    }
    if (loewy == 0)
        throw NotAdmissible("paths of length " + std::to_string(max_path_len) +
                            " survive modulo the relations; the ideal may not be admissible or the bound is too small");

    PathAlgebra alg;
    alg.p_ = p;
    alg.quiver_ = q;
    alg.relations_ = relations;
    std::vector<std::size_t> basis_cols;
    for (std::size_t c = 0; c < paths.size(); ++c)
        if (pivot_row[c] < 0 && paths[c].length() < loewy) basis_cols.push_back(c);
    std::sort(basis_cols.begin(), basis_cols.end(), [&](std::size_t x, std::size_t y) { return less(paths[x], paths[y]); });
    std::vector<long> col_to_basis(paths.size(), -1);
    for (std::size_t i = 0; i < basis_cols.size(); ++i) {
        col_to_basis[basis_cols[i]] = static_cast<long>(i);
        alg.basis_.push_back(paths[basis_cols[i]]);
    }
    const std::size_t n = alg.basis_.size();
    alg.products_.assign(n * n, {});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Path& bi = alg.basis_[i];
            const Path& bj = alg.basis_[j];
            if (bj.target != bi.source || bi.length() + bj.length() >= loewy) continue;
            std::vector<std::size_t> arrows = bi.arrows;
            arrows.insert(arrows.end(), bj.arrows.begin(), bj.arrows.end());
            SparseVec out;
            for (const auto& [c, v] : normal_form(lookup(bj.source, arrows))) {
                if (col_to_basis[c] < 0) throw NotAdmissible("normal form leaves the truncated basis");
                out.push_back({static_cast<std::uint32_t>(col_to_basis[c]), v});
            }
            std::sort(out.begin(), out.end());
            alg.products_[i * n + j] = std::move(out);
        }
    alg.finish_indexing();
    alg.check_associative();
    return pair_up(std::move(alg));
}

PathAlgebra::Ptr PathAlgebra::from_table(const Quiver& q, std::vector<Path> basis, std::vector<SparseVec> products,
                                         std::uint32_t p) {
    ff::PrimeField field(p);
    if (products.size() != basis.size() * basis.size()) throw QuiverError("product table has the wrong size");
    PathAlgebra alg;
    alg.p_ = p;
    alg.quiver_ = q;
    alg.basis_ = std::move(basis);
    alg.products_ = std::move(products);
    for (auto& sv : alg.products_) {
        for (auto& [i, v] : sv) {
            if (i >= alg.basis_.size()) throw QuiverError("product table refers to a missing basis element");
            v %= p;
        }
        std::sort(sv.begin(), sv.end());
        sv.erase(std::remove_if(sv.begin(), sv.end(), [](const auto& e) { return e.second == 0; }), sv.end());
    }
    alg.finish_indexing();
    alg.check_associative();
    return pair_up(std::move(alg));
}

void PathAlgebra::finish_indexing() {
    idem_.assign(quiver_.num_vertices(), basis_.size());
    arrow_elem_.assign(quiver_.num_arrows(), basis_.size());
    loewy_ = 1;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const Path& b = basis_[i];
        loewy_ = std::max(loewy_, b.length() + 1);
        if (b.length() == 0) idem_[b.source] = i;
        if (b.length() == 1) arrow_elem_[b.arrows[0]] = i;
    }
    for (std::size_t v = 0; v < idem_.size(); ++v)
        if (idem_[v] == basis_.size()) throw QuiverError("basis lacks the trivial path at a vertex");
    for (std::size_t a = 0; a < arrow_elem_.size(); ++a)
        if (arrow_elem_[a] == basis_.size()) throw NotAdmissible("arrow '" + quiver_.arrow(a).name + "' is not a basis element");
}

void PathAlgebra::check_associative() const {
    const std::size_t n = dim();
    auto f = ff::PrimeField::unchecked(p_);
    for (std::size_t b = 0; b < n; ++b) {
        SparseVec expect{{static_cast<std::uint32_t>(b), 1}};
        if (product(idem_[basis_[b].target], b) != expect || product(b, idem_[basis_[b].source]) != expect)
            throw QuiverError("trivial paths do not act as identities");
    }
    std::vector<Elem> lhs(n), rhs(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (basis_[j].target != basis_[i].source) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (basis_[k].target != basis_[j].source) continue;
                std::fill(lhs.begin(), lhs.end(), 0);
                std::fill(rhs.begin(), rhs.end(), 0);
                for (const auto& [m, c] : product(i, j))
                    for (const auto& [r, d] : product(m, k)) lhs[r] = f.add(lhs[r], f.mul(c, d));
                for (const auto& [m, c] : product(j, k))
                    for (const auto& [r, d] : product(i, m)) rhs[r] = f.add(rhs[r], f.mul(c, d));
                if (lhs != rhs) throw QuiverError("multiplication table is not associative");
            }
        }
}

PathAlgebra::Ptr PathAlgebra::pair_up(PathAlgebra&& primal) {
    PathAlgebra dual;
    dual.p_ = primal.p_;
    dual.quiver_ = primal.quiver_.opposite();
    for (const auto& rel : primal.relations_) {
        Relation r;
        for (const auto& t : rel) r.push_back({t.coeff, std::vector<std::string>(t.path.rbegin(), t.path.rend())});
        dual.relations_.push_back(std::move(r));
    }
    const std::size_t n = primal.dim();
    for (const auto& b : primal.basis_)
        dual.basis_.push_back({b.target, b.source, std::vector<std::size_t>(b.arrows.rbegin(), b.arrows.rend())});
    dual.products_.assign(n * n, {});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) dual.products_[i * n + j] = primal.products_[j * n + i];
    dual.is_op_ = !primal.is_op_;
    dual.finish_indexing();

    struct Pair {
        PathAlgebra a;
        PathAlgebra b;
    };
    auto pr = std::make_shared<Pair>(Pair{std::move(primal), std::move(dual)});
    Ptr a(pr, &pr->a), b(pr, &pr->b);
    pr->a.op_ = b;
    pr->b.op_ = a;
    return a;
}

PathAlgebra::Ptr PathAlgebra::op() const { return op_.lock(); }

std::vector<Elem> PathAlgebra::multiply(const std::vector<Elem>& x, const std::vector<Elem>& y) const {
    auto f = ff::PrimeField::unchecked(p_);
    std::vector<Elem> out(dim(), 0);
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < dim(); ++j) {
            if (y[j] == 0) continue;
            Elem c = f.mul(x[i], y[j]);
            for (const auto& [k, v] : product(i, j)) out[k] = f.add(out[k], f.mul(c, v));
        }
    }
    return out;
}

std::vector<std::size_t> PathAlgebra::elements_between(std::size_t source, std::size_t target) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < dim(); ++i)
        if (basis_[i].source == source && basis_[i].target == target) out.push_back(i);
    return out;
}

std::string PathAlgebra::element_name(std::size_t i) const {
    const Path& b = basis_[i];
    if (b.length() == 0) return "e" + quiver_.vertices()[b.source];
    bool short_names = std::all_of(b.arrows.begin(), b.arrows.end(),
                                   [&](std::size_t a) { return quiver_.arrow(a).name.size() == 1; });
    std::string s;
    for (std::size_t k = 0; k < b.arrows.size(); ++k) {
        if (k && !short_names) s += "*";
        s += quiver_.arrow(b.arrows[k]).name;
    }
    return s;
}

}  // namespace tilt::quiver
