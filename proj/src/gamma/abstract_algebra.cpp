#include "tilt/gamma/abstract_algebra.hpp"

namespace tilt::gamma {

RadicalPreconditionViolated::RadicalPreconditionViolated(std::size_t dim, std::uint32_t p)
    : std::runtime_error("radical computation needs p > " + std::to_string(dim) + " but p = " + std::to_string(p) +
                         "; rerun with p = " + std::to_string(smallest_prime_above(dim)) + " or larger"),
      suggested_(smallest_prime_above(dim)) {}

std::uint32_t smallest_prime_above(std::size_t n) {
    std::uint64_t c = std::max<std::uint64_t>(3, n + 1);
    while (!ff::is_prime(c) || c % 2 == 0) ++c;
    return static_cast<std::uint32_t>(c);
}

AbstractAlgebra::AbstractAlgebra(std::uint32_t p, std::vector<Matrix> left, std::vector<Elem> unit,
                                 std::vector<std::string> labels)
    : p_(p), left_(std::move(left)), unit_(std::move(unit)), labels_(std::move(labels)) {
    for (const auto& m : left_)
        if (m.rows() != left_.size() || m.cols() != left_.size())
            throw AlgebraError("structure matrices have the wrong shape");
    if (unit_.size() != left_.size()) throw AlgebraError("unit has the wrong length");
    if (labels_.empty())
        for (std::size_t i = 0; i < left_.size(); ++i) labels_.push_back("b" + std::to_string(i));
}

Matrix AbstractAlgebra::left_mult(const std::vector<Elem>& x) const {
    auto f = ff::PrimeField::unchecked(p_);
    Matrix m(dim(), dim(), p_);
    for (std::size_t i = 0; i < dim(); ++i)
        if (x[i] != 0) m = m + left_[i].scaled(f.reduce(x[i]));
    return m;
}

Matrix AbstractAlgebra::right_mult(const std::vector<Elem>& x) const {
    // column j of R_x is b_j x = sum_i x_i b_j b_i = L_{b_j} x
    Matrix xv(dim(), 1, p_);
    for (std::size_t i = 0; i < dim(); ++i) xv(i, 0) = x[i];
    Matrix m(dim(), dim(), p_);
    for (std::size_t j = 0; j < dim(); ++j) m.set_block(0, j, left_[j] * xv);
    return m;
}

std::vector<Elem> AbstractAlgebra::multiply(const std::vector<Elem>& x, const std::vector<Elem>& y) const {
    Matrix yv(dim(), 1, p_);
    for (std::size_t i = 0; i < dim(); ++i) yv(i, 0) = y[i];
    return (left_mult(x) * yv).column(0);
}

void AbstractAlgebra::verify() const {
    const std::size_t n = dim();
    // L_{b_i b_j} = L_{b_i} L_{b_j}
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (left_mult(product(i, j)) != left_[i] * left_[j])
                throw AlgebraError("structure constants are not associative");
    if (left_mult(unit_) != Matrix::identity(n, p_)) throw AlgebraError("unit does not act as identity on the left");
    if (right_mult(unit_) != Matrix::identity(n, p_)) throw AlgebraError("unit does not act as identity on the right");
}

Matrix product_space(const AbstractAlgebra& a, const Matrix& u, const Matrix& v) {
    std::vector<Matrix> cols;
    for (std::size_t i = 0; i < u.cols(); ++i) {
        Matrix lu = a.left_mult(u.column(i));
        cols.push_back(lu * v);
    }
    Matrix all = ff::hstack(cols, a.dim(), a.p());
    return all.cols() ? ff::column_space_basis(all) : all;
}

Matrix radical(const AbstractAlgebra& a) {
    const std::size_t n = a.dim();
    if (a.p() <= n) throw RadicalPreconditionViolated(n, a.p());
    auto f = ff::PrimeField::unchecked(a.p());
    std::vector<Elem> tr(n, 0);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t d = 0; d < n; ++d) tr[k] = f.add(tr[k], a.left_basis(k)(d, d));
    // T_ij = tr(L_{b_i b_j})
    Matrix t(n, n, a.p());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Elem s = 0;
            for (std::size_t k = 0; k < n; ++k) s = f.add(s, f.mul(a.left_basis(i)(k, j), tr[k]));
            t(i, j) = s;
        }
    Matrix r = ff::nullspace_basis(t);
    // shrink to the largest two-sided ideal inside
    for (;;) {
        if (r.cols() == 0) break;
        Matrix annihilator = ff::nullspace_basis(r.transpose()).transpose();
        if (annihilator.rows() == 0) break;
        std::vector<Matrix> conds;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Elem> e(n, 0);
            e[i] = 1;
            conds.push_back(annihilator * a.left_mult(e) * r);
            conds.push_back(annihilator * a.right_mult(e) * r);
        }
        Matrix y = ff::nullspace_basis(ff::vstack(conds, r.cols(), a.p()));
        if (y.cols() == r.cols()) break;
        r = y.cols() ? ff::column_space_basis(r * y) : Matrix(n, 0, a.p());
    }
    // nilpotency certificate
    Matrix power = r;
    for (std::size_t k = 0; power.cols() > 0; ++k) {
        if (k > n) throw AlgebraError("trace-form radical is not nilpotent");
        power = product_space(a, power, r);
    }
    return r;
}

EndomorphismAlgebra endomorphism_algebra(const quiver::Representation& m) {
    return endomorphism_algebra(m, quiver::hom_space(m, m));
}

EndomorphismAlgebra endomorphism_algebra(const quiver::Representation& m, std::vector<quiver::Morphism> basis) {
    const std::size_t n = basis.size();
    const std::uint32_t p = m.p();
    Matrix cols = quiver::to_columns(basis, m, m);
    std::vector<Matrix> prods;
    prods.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) prods.push_back((basis[i] * basis[j]).to_vector());
    prods.push_back(quiver::Morphism::identity(m).to_vector());
    Matrix rhs = ff::hstack(prods, cols.rows(), p);
    auto sol = ff::solve(cols, rhs);
    if (!sol) throw AlgebraError("endomorphism products leave the Hom basis");
    std::vector<Matrix> left(n, Matrix(n, n, p));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) left[i](k, j) = sol->particular(k, i * n + j);
    std::vector<Elem> unit = sol->particular.column(n * n);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("f" + std::to_string(i));
    return {AbstractAlgebra(p, std::move(left), std::move(unit), std::move(labels)), std::move(basis)};
}

}  // namespace tilt::gamma
