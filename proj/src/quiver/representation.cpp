#include "tilt/quiver/representation.hpp"

#include <sstream>

namespace tilt::quiver {

std::shared_ptr<const Representation::Data> Representation::make(PathAlgebra::Ptr alg, std::vector<std::size_t> dims,
                                                                  std::vector<Matrix> maps) {
    if (!alg) throw InvalidRepresentation("representation without an algebra");
    const Quiver& q = alg->quiver();
    if (dims.size() != q.num_vertices()) throw InvalidRepresentation("dimension vector has the wrong length");
    if (maps.size() != q.num_arrows()) throw InvalidRepresentation("wrong number of arrow matrices");
    for (std::size_t a = 0; a < maps.size(); ++a) {
        const Arrow& ar = q.arrow(a);
        if (maps[a].rows() != dims[ar.target] || maps[a].cols() != dims[ar.source])
            throw InvalidRepresentation("matrix for arrow '" + ar.name + "' has shape " + std::to_string(maps[a].rows()) +
                                        "x" + std::to_string(maps[a].cols()) + ", expected " +
                                        std::to_string(dims[ar.target]) + "x" + std::to_string(dims[ar.source]));
        if (maps[a].p() != alg->p()) {
            if (maps[a].p() != 0) throw InvalidRepresentation("arrow matrix over the wrong field");
            maps[a] = Matrix(maps[a].rows(), maps[a].cols(), alg->p());
        }
    }
    auto d = std::make_shared<Data>();
    d->alg = std::move(alg);
    d->offsets.resize(dims.size());
    for (std::size_t v = 0; v < dims.size(); ++v) {
        d->offsets[v] = d->total;
        d->total += dims[v];
    }
    d->dims = std::move(dims);
    d->maps = std::move(maps);
    return d;
}

Representation::Representation(PathAlgebra::Ptr alg, std::vector<std::size_t> dims, std::vector<Matrix> maps)
    : d_(make(std::move(alg), std::move(dims), std::move(maps))) {
    if (!satisfies_relations()) throw InvalidRepresentation("representation does not satisfy the relations");
}

Representation Representation::unchecked(PathAlgebra::Ptr alg, std::vector<std::size_t> dims, std::vector<Matrix> maps) {
    Representation r;
    r.d_ = make(std::move(alg), std::move(dims), std::move(maps));
    return r;
}

Representation Representation::zero(PathAlgebra::Ptr alg) {
    const Quiver& q = alg->quiver();
    std::vector<Matrix> maps(q.num_arrows(), Matrix(0, 0, alg->p()));
    return unchecked(alg, std::vector<std::size_t>(q.num_vertices(), 0), std::move(maps));
}

Matrix Representation::element_action(std::size_t i) const {
    const Path& b = algebra()->basis_path(i);
    Matrix m = Matrix::identity(dim(b.source), p());
    for (auto it = b.arrows.rbegin(); it != b.arrows.rend(); ++it) m = map(*it) * m;
    return m;
}

Matrix Representation::total_action(std::size_t i) const {
    const Path& b = algebra()->basis_path(i);
    Matrix t(dim(), dim(), p());
    t.set_block(offset(b.target), offset(b.source), element_action(i));
    return t;
}

bool Representation::satisfies_relations() const {
    const PathAlgebra& alg = *algebra();
    const Quiver& q = alg.quiver();
    std::vector<Matrix> actions;
    actions.reserve(alg.dim());
    for (std::size_t i = 0; i < alg.dim(); ++i) actions.push_back(element_action(i));
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        std::size_t ea = alg.arrow_element(a);
        for (std::size_t i = 0; i < alg.dim(); ++i) {
            const Path& b = alg.basis_path(i);
            if (b.target != q.arrow(a).source) continue;
            Matrix lhs = map(a) * actions[i];
            Matrix rhs(lhs.rows(), lhs.cols(), p());
            for (const auto& [k, c] : alg.product(ea, i)) rhs = rhs + actions[k].scaled(c);
            if (lhs != rhs) return false;
        }
    }
    return true;
}

bool Representation::operator==(const Representation& o) const {
    if (d_ == o.d_) return true;
    if (!d_ || !o.d_) return false;
    return d_->alg == o.d_->alg && d_->dims == o.d_->dims && d_->maps == o.d_->maps;
}

std::string Representation::dim_vector() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t v = 0; v < dims().size(); ++v) os << (v ? "," : "") << dims()[v];
    os << ")";
    return os.str();
}

Morphism::Morphism(Representation source, Representation target, std::vector<Matrix> maps)
    : src_(std::move(source)), tgt_(std::move(target)), maps_(std::move(maps)) {
    if (src_.algebra() != tgt_.algebra()) throw InvalidMorphism("morphism between modules over different algebras");
    if (maps_.size() != src_.num_vertices()) throw InvalidMorphism("wrong number of vertex maps");
    for (std::size_t v = 0; v < maps_.size(); ++v)
        if (maps_[v].rows() != tgt_.dim(v) || maps_[v].cols() != src_.dim(v))
            throw InvalidMorphism("vertex map has the wrong shape");
    if (!commutes()) throw InvalidMorphism("vertex maps do not commute with the arrows");
}

Morphism Morphism::unchecked(Representation source, Representation target, std::vector<Matrix> maps) {
    Morphism m;
    m.src_ = std::move(source);
    m.tgt_ = std::move(target);
    m.maps_ = std::move(maps);
    return m;
}

Morphism Morphism::zero(const Representation& source, const Representation& target) {
    std::vector<Matrix> maps;
    for (std::size_t v = 0; v < source.num_vertices(); ++v) maps.emplace_back(target.dim(v), source.dim(v), source.p());
    return unchecked(source, target, std::move(maps));
}

Morphism Morphism::identity(const Representation& m) {
    std::vector<Matrix> maps;
    for (std::size_t v = 0; v < m.num_vertices(); ++v) maps.push_back(Matrix::identity(m.dim(v), m.p()));
    return unchecked(m, m, std::move(maps));
}

Morphism Morphism::from_vector(const Representation& source, const Representation& target, const Matrix& column,
                               std::size_t col) {
    std::vector<Matrix> maps;
    std::size_t k = 0;
    for (std::size_t v = 0; v < source.num_vertices(); ++v) {
        Matrix m(target.dim(v), source.dim(v), source.p());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = column(k++, col);
        maps.push_back(std::move(m));
    }
    return unchecked(source, target, std::move(maps));
}

Morphism Morphism::operator*(const Morphism& g) const {
    if (!(g.tgt_ == src_)) throw InvalidMorphism("composition of non-composable morphisms");
    std::vector<Matrix> maps;
    for (std::size_t v = 0; v < maps_.size(); ++v) maps.push_back(maps_[v] * g.maps_[v]);
    return unchecked(g.src_, tgt_, std::move(maps));
}

Morphism Morphism::operator+(const Morphism& o) const {
    std::vector<Matrix> maps;
    for (std::size_t v = 0; v < maps_.size(); ++v) maps.push_back(maps_[v] + o.maps_[v]);
    return unchecked(src_, tgt_, std::move(maps));
}

Morphism Morphism::operator-(const Morphism& o) const {
    std::vector<Matrix> maps;
    for (std::size_t v = 0; v < maps_.size(); ++v) maps.push_back(maps_[v] - o.maps_[v]);
    return unchecked(src_, tgt_, std::move(maps));
}

Morphism Morphism::scaled(Elem c) const {
    std::vector<Matrix> maps;
    for (const auto& m : maps_) maps.push_back(m.scaled(c));
    return unchecked(src_, tgt_, std::move(maps));
}

bool Morphism::is_zero() const {
    for (const auto& m : maps_)
        if (!m.is_zero()) return false;
    return true;
}

std::size_t Morphism::rank() const {
    std::size_t r = 0;
    for (const auto& m : maps_) r += ff::rank(m);
    return r;
}

bool Morphism::is_mono() const { return rank() == src_.dim(); }
bool Morphism::is_epi() const { return rank() == tgt_.dim(); }
bool Morphism::is_iso() const { return src_.dims() == tgt_.dims() && is_mono(); }

bool Morphism::commutes() const {
    const Quiver& q = src_.algebra()->quiver();
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrow(a);
        if (tgt_.map(a) * maps_[ar.source] != maps_[ar.target] * src_.map(a)) return false;
    }
    return true;
}

bool Morphism::operator==(const Morphism& o) const {
    return src_ == o.src_ && tgt_ == o.tgt_ && maps_ == o.maps_;
}

Matrix Morphism::total() const { return ff::block_diagonal(maps_, src_.p()); }

Matrix Morphism::to_vector() const {
    Matrix col(hom_vector_length(src_, tgt_), 1, src_.p());
    std::size_t k = 0;
    for (const auto& m : maps_)
        for (Elem e : m.data()) col(k++, 0) = e;
    return col;
}

std::size_t hom_vector_length(const Representation& a, const Representation& b) {
    std::size_t n = 0;
    for (std::size_t v = 0; v < a.num_vertices(); ++v) n += a.dim(v) * b.dim(v);
    return n;
}

namespace {

Matrix hom_system(const Representation& a, const Representation& b) {
    const Quiver& q = a.algebra()->quiver();
    const std::uint32_t p = a.p();
    auto f = ff::PrimeField::unchecked(p);
    std::vector<std::size_t> off(a.num_vertices());
    std::size_t n = 0;
    for (std::size_t v = 0; v < a.num_vertices(); ++v) {
        off[v] = n;
        n += a.dim(v) * b.dim(v);
    }
    std::size_t eqs = 0;
    for (const auto& ar : q.arrows()) eqs += b.dim(ar.target) * a.dim(ar.source);
    Matrix sys(eqs, n, p);
    std::size_t row = 0;
    for (std::size_t k = 0; k < q.num_arrows(); ++k) {
        const Arrow& ar = q.arrow(k);
        std::size_t i = ar.source, j = ar.target;
        const Matrix& A = a.map(k);
        const Matrix& B = b.map(k);
        // (B f_i - f_j A)[r, c] = sum_t B[r,t] f_i[t,c] - sum_t f_j[r,t] A[t,c]
        for (std::size_t r = 0; r < b.dim(j); ++r)
            for (std::size_t c = 0; c < a.dim(i); ++c, ++row) {
                for (std::size_t t = 0; t < b.dim(i); ++t) {
                    std::size_t col = off[i] + t * a.dim(i) + c;
                    sys(row, col) = f.add(sys(row, col), B(r, t));
                }
                for (std::size_t t = 0; t < a.dim(j); ++t) {
                    std::size_t col = off[j] + r * a.dim(j) + t;
                    sys(row, col) = f.sub(sys(row, col), A(t, c));
                }
            }
    }
    return sys;
}

}  // namespace

std::vector<Morphism> hom_space(const Representation& a, const Representation& b) {
    if (a.algebra() != b.algebra()) throw InvalidMorphism("Hom between modules over different algebras");
    std::size_t n = hom_vector_length(a, b);
    Matrix basis = n == 0 ? Matrix(0, 0, a.p()) : ff::nullspace_basis(hom_system(a, b));
    std::vector<Morphism> out;
    for (std::size_t k = 0; k < basis.cols(); ++k) out.push_back(Morphism::from_vector(a, b, basis, k));
    return out;
}

std::size_t hom_dim(const Representation& a, const Representation& b) {
    std::size_t n = hom_vector_length(a, b);
    if (n == 0) return 0;
    return n - ff::rank(hom_system(a, b));
}

Matrix to_columns(const std::vector<Morphism>& fs, const Representation& a, const Representation& b) {
    Matrix m(hom_vector_length(a, b), fs.size(), a.p());
    for (std::size_t k = 0; k < fs.size(); ++k) m.set_block(0, k, fs[k].to_vector());
    return m;
}

Morphism combine(const std::vector<Morphism>& basis, const std::vector<Elem>& coeffs, const Representation& a,
                 const Representation& b) {
    Morphism out = Morphism::zero(a, b);
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (coeffs[k] != 0) out = out + basis[k].scaled(coeffs[k]);
    return out;
}

}  // namespace tilt::quiver
