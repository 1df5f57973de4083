#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "tilt/ff/matrix.hpp"
#include "tilt/quiver/representation.hpp"

namespace tilt::gamma {

using ff::Elem;
using ff::Matrix;

class RadicalPreconditionViolated : public std::runtime_error {
public:
    RadicalPreconditionViolated(std::size_t dim, std::uint32_t p);
    std::uint32_t suggested_prime() const { return suggested_; }

private:
    std::uint32_t suggested_;
};

class AlgebraError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Smallest odd prime strictly greater than n.
std::uint32_t smallest_prime_above(std::size_t n);

// Finite-dimensional associative unital algebra by structure constants.
class AbstractAlgebra {
public:
    AbstractAlgebra() = default;
    // left[i] is the matrix of left multiplication by basis element i: column j = b_i b_j.
    AbstractAlgebra(std::uint32_t p, std::vector<Matrix> left, std::vector<Elem> unit, std::vector<std::string> labels = {});

    std::uint32_t p() const { return p_; }
    std::size_t dim() const { return left_.size(); }
    const std::vector<Elem>& unit() const { return unit_; }
    const std::vector<std::string>& labels() const { return labels_; }

    std::vector<Elem> multiply(const std::vector<Elem>& x, const std::vector<Elem>& y) const;
    Matrix left_mult(const std::vector<Elem>& x) const;
    Matrix right_mult(const std::vector<Elem>& x) const;
    const Matrix& left_basis(std::size_t i) const { return left_[i]; }
    // Coordinates of b_i b_j.
    std::vector<Elem> product(std::size_t i, std::size_t j) const { return left_[i].column(j); }

    // Associativity on all basis triples and the unit law; throws AlgebraError.
    void verify() const;

private:
    std::uint32_t p_ = 0;
    std::vector<Matrix> left_;
    std::vector<Elem> unit_;
    std::vector<std::string> labels_;
};

// Columns span the Jacobson radical. Requires p > dim.
Matrix radical(const AbstractAlgebra& a);

// Columns span the product space span{x y : x in U, y in V}.
Matrix product_space(const AbstractAlgebra& a, const Matrix& u, const Matrix& v);

struct EndomorphismAlgebra {
    AbstractAlgebra algebra;
    std::vector<quiver::Morphism> basis;
};

// End(M) with basis hom_space(M, M); multiplication is composition (b_i b_j = b_i after b_j).
EndomorphismAlgebra endomorphism_algebra(const quiver::Representation& m);
EndomorphismAlgebra endomorphism_algebra(const quiver::Representation& m, std::vector<quiver::Morphism> basis);

}  // namespace tilt::gamma
