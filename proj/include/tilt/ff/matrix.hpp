#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tilt/ff/field.hpp"

namespace tilt::ff {

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Dense row-major matrix over F_p. A default-constructed matrix is 0x0 with no field.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, std::uint32_t p);

    static Matrix zero(std::size_t rows, std::size_t cols, std::uint32_t p) { return Matrix(rows, cols, p); }
    static Matrix identity(std::size_t n, std::uint32_t p);
    static Matrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::uint32_t p);
    static Matrix from_columns(const std::vector<std::vector<Elem>>& cols, std::size_t height, std::uint32_t p);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t p() const { return p_; }
    PrimeField field() const { return PrimeField::unchecked(p_); }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Elem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Elem* row_ptr(std::size_t i) const { return data_.data() + i * cols_; }
    Elem* row_ptr(std::size_t i) { return data_.data() + i * cols_; }
    const std::vector<Elem>& data() const { return data_; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(Elem c) const;
    Matrix transpose() const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
    Matrix select_columns(const std::vector<std::size_t>& idx) const;
    Matrix select_rows(const std::vector<std::size_t>& idx) const;
    std::vector<Elem> column(std::size_t j) const;
    void set_column(std::size_t j, const std::vector<Elem>& v);

    bool is_zero() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    std::vector<std::vector<std::int64_t>> to_rows() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::uint32_t p_ = 0;
    std::vector<Elem> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix hstack(const std::vector<Matrix>& parts, std::size_t rows, std::uint32_t p);
Matrix vstack(const std::vector<Matrix>& parts, std::size_t cols, std::uint32_t p);
Matrix block_diagonal(const std::vector<Matrix>& parts, std::uint32_t p);

struct Rref {
    Matrix form;
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

Rref rref(const Matrix& m);
std::size_t rank(const Matrix& m);

// Columns form a basis of {v : m v = 0}.
Matrix nullspace_basis(const Matrix& m);

struct Solution {
    Matrix particular;
    Matrix nullspace;
};

// Solves m x = b for every column of b at once. Empty optional when inconsistent.
std::optional<Solution> solve(const Matrix& m, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& m);

// Indices of a maximal set of columns of `candidates` independent modulo the column span of `base`.
std::vector<std::size_t> independent_extension(const Matrix& base, const Matrix& candidates);

// Maximal independent subset of the columns, in order.
Matrix column_space_basis(const Matrix& m);

// Columns spanning the intersection of the column spaces of a and b.
Matrix intersect_column_spaces(const Matrix& a, const Matrix& b);

bool column_in_span(const Matrix& span, const Matrix& vec);

std::string to_string(const Matrix& m);

}  // namespace tilt::ff
