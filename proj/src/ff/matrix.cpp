#include "tilt/ff/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace tilt::ff {

namespace {

constexpr std::uint64_t kFold = 1ull << 63;

std::uint32_t common_p(const Matrix& a, const Matrix& b, const char* op) {
    if (a.p() != 0 && b.p() != 0 && a.p() != b.p())
        throw DimensionMismatch(std::string(op) + ": field mismatch");
    return a.p() != 0 ? a.p() : b.p();
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

Matrix Matrix::identity(std::size_t n, std::uint32_t p) {
    Matrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::uint32_t p) {
    PrimeField f(p);
    std::size_t nc = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), nc, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != nc) throw DimensionMismatch("ragged row list");
        for (std::size_t j = 0; j < nc; ++j) m(i, j) = f.reduce(rows[i][j]);
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<std::vector<Elem>>& cols, std::size_t height, std::uint32_t p) {
    Matrix m(height, cols.size(), p);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != height) throw DimensionMismatch("column height mismatch");
        for (std::size_t i = 0; i < height; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_)
        throw DimensionMismatch("multiply: " + std::to_string(rows_) + "x" + std::to_string(cols_) + " by " +
                                std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
    std::uint32_t p = common_p(*this, o, "multiply");
    Matrix r(rows_, o.cols_, p);
    if (rows_ == 0 || o.cols_ == 0 || cols_ == 0) return r;
    std::vector<std::uint64_t> acc(o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        const Elem* a = row_ptr(i);
        for (std::size_t k = 0; k < cols_; ++k) {
            std::uint64_t aik = a[k];
            if (aik == 0) continue;
            const Elem* b = o.row_ptr(k);
            for (std::size_t j = 0; j < o.cols_; ++j) {
                acc[j] += aik * b[j];
                if (acc[j] >= kFold) acc[j] %= p;
            }
        }
        Elem* out = r.row_ptr(i);
        for (std::size_t j = 0; j < o.cols_; ++j) out[j] = static_cast<Elem>(acc[j] % p);
    }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("add: shape mismatch");
    std::uint32_t p = common_p(*this, o, "add");
    Matrix r(rows_, cols_, p);
    for (std::size_t i = 0; i < data_.size(); ++i) {
        std::uint32_t s = data_[i] + o.data_[i];
        r.data_[i] = s >= p ? s - p : s;
    }
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("subtract: shape mismatch");
    std::uint32_t p = common_p(*this, o, "subtract");
    Matrix r(rows_, cols_, p);
    for (std::size_t i = 0; i < data_.size(); ++i)
        r.data_[i] = data_[i] >= o.data_[i] ? data_[i] - o.data_[i] : data_[i] + p - o.data_[i];
    return r;
}

Matrix Matrix::scaled(Elem c) const {
    Matrix r(rows_, cols_, p_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        r.data_[i] = static_cast<Elem>((static_cast<std::uint64_t>(data_[i]) * c) % p_);
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block out of range");
    Matrix r(nr, nc, p_);
    for (std::size_t i = 0; i < nr; ++i)
        std::copy_n(row_ptr(r0 + i) + c0, nc, r.row_ptr(i));
    return r;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionMismatch("set_block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
        std::copy_n(b.row_ptr(i), b.cols_, row_ptr(r0 + i) + c0);
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& idx) const {
    Matrix r(rows_, idx.size(), p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) r(i, j) = (*this)(i, idx[j]);
    return r;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
    Matrix r(idx.size(), cols_, p_);
    for (std::size_t i = 0; i < idx.size(); ++i) std::copy_n(row_ptr(idx[i]), cols_, r.row_ptr(i));
    return r;
}

std::vector<Elem> Matrix::column(std::size_t j) const {
    std::vector<Elem> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

void Matrix::set_column(std::size_t j, const std::vector<Elem>& v) {
    if (v.size() != rows_) throw DimensionMismatch("set_column height mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::vector<std::vector<std::int64_t>> Matrix::to_rows() const {
    std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
    return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("hstack: row mismatch");
    Matrix r(a.rows(), a.cols() + b.cols(), common_p(a, b, "hstack"));
    r.set_block(0, 0, a);
    r.set_block(0, a.cols(), b);
    return r;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw DimensionMismatch("vstack: column mismatch");
    Matrix r(a.rows() + b.rows(), a.cols(), common_p(a, b, "vstack"));
    r.set_block(0, 0, a);
    r.set_block(a.rows(), 0, b);
    return r;
}

Matrix hstack(const std::vector<Matrix>& parts, std::size_t rows, std::uint32_t p) {
    std::size_t total = 0;
    for (const auto& m : parts) {
        if (m.rows() != rows) throw DimensionMismatch("hstack: row mismatch");
        total += m.cols();
    }
    Matrix r(rows, total, p);
    std::size_t c = 0;
    for (const auto& m : parts) {
        r.set_block(0, c, m);
        c += m.cols();
    }
    return r;
}

Matrix vstack(const std::vector<Matrix>& parts, std::size_t cols, std::uint32_t p) {
    std::size_t total = 0;
    for (const auto& m : parts) {
        if (m.cols() != cols) throw DimensionMismatch("vstack: column mismatch");
        total += m.rows();
    }
    Matrix r(total, cols, p);
    std::size_t row = 0;
    for (const auto& m : parts) {
        r.set_block(row, 0, m);
        row += m.rows();
    }
    return r;
}

Matrix block_diagonal(const std::vector<Matrix>& parts, std::uint32_t p) {
    std::size_t nr = 0, nc = 0;
    for (const auto& m : parts) {
        nr += m.rows();
        nc += m.cols();
    }
    Matrix r(nr, nc, p);
    std::size_t i = 0, j = 0;
    for (const auto& m : parts) {
        r.set_block(i, j, m);
        i += m.rows();
        j += m.cols();
    }
    return r;
}

Rref rref(const Matrix& m) {
    Rref out{m, {}};
    Matrix& a = out.form;
    const std::size_t nr = a.rows(), nc = a.cols();
    if (nr == 0 || nc == 0) return out;
    auto f = PrimeField::unchecked(a.p());
    const std::uint32_t p = a.p();
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t piv = nr;
        for (std::size_t i = r; i < nr; ++i)
            if (a(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv == nr) continue;
        if (piv != r)
            for (std::size_t j = c; j < nc; ++j) std::swap(a(piv, j), a(r, j));
        Elem inv = f.inv(a(r, c));
        Elem* pr = a.row_ptr(r);
        for (std::size_t j = c; j < nc; ++j) pr[j] = f.mul(pr[j], inv);
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == r) continue;
            Elem factor = a(i, c);
            if (factor == 0) continue;
            std::uint64_t neg = p - factor;
            Elem* pi = a.row_ptr(i);
            for (std::size_t j = c; j < nc; ++j) {
                if (pr[j] == 0) continue;
                pi[j] = static_cast<Elem>((pi[j] + neg * pr[j]) % p);
            }
        }
        out.pivots.push_back(c);
        ++r;
    }
    return out;
}

std::size_t rank(const Matrix& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    if (nr == 0 || nc == 0) return 0;
    Matrix a = m;
    auto f = PrimeField::unchecked(a.p());
    const std::uint32_t p = a.p();
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t piv = nr;
        for (std::size_t i = r; i < nr; ++i)
            if (a(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv == nr) continue;
        if (piv != r)
            for (std::size_t j = c; j < nc; ++j) std::swap(a(piv, j), a(r, j));
        Elem inv = f.inv(a(r, c));
        Elem* pr = a.row_ptr(r);
        for (std::size_t j = c; j < nc; ++j) pr[j] = f.mul(pr[j], inv);
        for (std::size_t i = r + 1; i < nr; ++i) {
            Elem factor = a(i, c);
            if (factor == 0) continue;
            std::uint64_t neg = p - factor;
            Elem* pi = a.row_ptr(i);
            for (std::size_t j = c; j < nc; ++j) {
                if (pr[j] == 0) continue;
                pi[j] = static_cast<Elem>((pi[j] + neg * pr[j]) % p);
            }
        }
        ++r;
    }
    return r;
}

Matrix nullspace_basis(const Matrix& m) {
    const std::size_t nc = m.cols();
    Rref rr = rref(m);
    std::vector<bool> is_pivot(nc, false);
    for (auto c : rr.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < nc; ++c)
        if (!is_pivot[c]) free.push_back(c);
    auto f = PrimeField::unchecked(m.p());
    Matrix basis(nc, free.size(), m.p());
    for (std::size_t k = 0; k < free.size(); ++k) {
        std::size_t fc = free[k];
        basis(fc, k) = 1;
        for (std::size_t r = 0; r < rr.pivots.size(); ++r) basis(rr.pivots[r], k) = f.neg(rr.form(r, fc));
    }
    return basis;
}

std::optional<Solution> solve(const Matrix& m, const Matrix& b) {
    if (m.rows() != b.rows())
        throw DimensionMismatch("solve: system has " + std::to_string(m.rows()) + " rows, right side " +
                                std::to_string(b.rows()));
    std::uint32_t p = common_p(m, b, "solve");
    const std::size_t n = m.cols();
    Matrix aug = hstack(m, b);
    Rref rr = rref(aug);
    Matrix x(n, b.cols(), p);
    for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
        std::size_t c = rr.pivots[r];
        if (c >= n) return std::nullopt;
        for (std::size_t k = 0; k < b.cols(); ++k) x(c, k) = rr.form(r, n + k);
    }
    Matrix ns = nullspace_basis(m);
    return Solution{x, ns};
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    auto s = solve(m, Matrix::identity(m.rows(), m.p()));
    if (!s || s->nullspace.cols() != 0) return std::nullopt;
    return s->particular;
}

std::vector<std::size_t> independent_extension(const Matrix& base, const Matrix& candidates) {
    if (base.cols() > 0 && base.rows() != candidates.rows())
        throw DimensionMismatch("independent_extension: height mismatch");
    Matrix aug = base.cols() > 0 ? hstack(base, candidates) : candidates;
    Rref rr = rref(aug);
    std::vector<std::size_t> out;
    for (auto c : rr.pivots)
        if (c >= base.cols()) out.push_back(c - base.cols());
    return out;
}

Matrix column_space_basis(const Matrix& m) { return m.select_columns(rref(m).pivots); }

Matrix intersect_column_spaces(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("intersect: height mismatch");
    std::uint32_t p = common_p(a, b, "intersect");
    if (a.cols() == 0 || b.cols() == 0) return Matrix(a.rows(), 0, p);
    // a x = b y  <=>  [a | -b] (x; y) = 0
    Matrix ns = nullspace_basis(hstack(a, b.scaled(p - 1)));
    Matrix x = ns.block(0, 0, a.cols(), ns.cols());
    return column_space_basis(a * x);
}

bool column_in_span(const Matrix& span, const Matrix& vec) {
    if (vec.cols() == 0) return true;
    if (span.cols() == 0) return vec.is_zero();
    return solve(span, vec).has_value();
}

std::string to_string(const Matrix& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace tilt::ff
