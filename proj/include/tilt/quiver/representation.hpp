#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tilt/quiver/algebra.hpp"

namespace tilt::quiver {

class InvalidRepresentation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Left module over a PathAlgebra: a vector space per vertex and a matrix per arrow
// (arrow a: i -> j acts as a dims[j] x dims[i] matrix). Immutable; copies share storage.
class Representation {
public:
    Representation() = default;
    Representation(PathAlgebra::Ptr alg, std::vector<std::size_t> dims, std::vector<Matrix> maps);
    // Skips the relation check; shapes are still checked.
    static Representation unchecked(PathAlgebra::Ptr alg, std::vector<std::size_t> dims, std::vector<Matrix> maps);
    static Representation zero(PathAlgebra::Ptr alg);

    const PathAlgebra::Ptr& algebra() const { return d_->alg; }
    std::uint32_t p() const { return d_->alg->p(); }
    std::size_t num_vertices() const { return d_->dims.size(); }
    const std::vector<std::size_t>& dims() const { return d_->dims; }
    std::size_t dim(std::size_t v) const { return d_->dims[v]; }
    std::size_t dim() const { return d_->total; }
    std::size_t offset(std::size_t v) const { return d_->offsets[v]; }
    const Matrix& map(std::size_t arrow) const { return d_->maps[arrow]; }
    const std::vector<Matrix>& maps() const { return d_->maps; }
    bool is_zero() const { return d_->total == 0; }

    // Action of basis element i of the algebra, dims[target] x dims[source].
    Matrix element_action(std::size_t i) const;
    // Action of basis element i on the total space (dim x dim).
    Matrix total_action(std::size_t i) const;
    // Checks every arrow times every basis element against the multiplication table.
    bool satisfies_relations() const;

    bool operator==(const Representation& o) const;
    bool same_object(const Representation& o) const { return d_ == o.d_; }
    std::string dim_vector() const;

private:
    struct Data {
        PathAlgebra::Ptr alg;
        std::vector<std::size_t> dims;
        std::vector<std::size_t> offsets;
        std::size_t total = 0;
        std::vector<Matrix> maps;
    };
    static std::shared_ptr<const Data> make(PathAlgebra::Ptr alg, std::vector<std::size_t> dims, std::vector<Matrix> maps);
    std::shared_ptr<const Data> d_;
};

class InvalidMorphism : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class Morphism {
public:
    Morphism() = default;
    Morphism(Representation source, Representation target, std::vector<Matrix> maps);
    static Morphism unchecked(Representation source, Representation target, std::vector<Matrix> maps);
    static Morphism zero(const Representation& source, const Representation& target);
    static Morphism identity(const Representation& m);
    // Inverse of the vectorization below.
    static Morphism from_vector(const Representation& source, const Representation& target, const Matrix& column,
                                std::size_t col = 0);

    const Representation& source() const { return src_; }
    const Representation& target() const { return tgt_; }
    const Matrix& map(std::size_t v) const { return maps_[v]; }
    const std::vector<Matrix>& maps() const { return maps_; }

    // this after g
    Morphism operator*(const Morphism& g) const;
    Morphism operator+(const Morphism& o) const;
    Morphism operator-(const Morphism& o) const;
    Morphism scaled(Elem c) const;

    bool is_zero() const;
    bool is_mono() const;
    bool is_epi() const;
    bool is_iso() const;
    std::size_t rank() const;
    bool commutes() const;
    bool operator==(const Morphism& o) const;

    // Block diagonal matrix on the total spaces.
    Matrix total() const;
    // Column vector of all vertex-map entries, vertex by vertex, row-major.
    Matrix to_vector() const;

private:
    Representation src_;
    Representation tgt_;
    std::vector<Matrix> maps_;
};

std::size_t hom_vector_length(const Representation& a, const Representation& b);

// Basis of Hom(A, B).
std::vector<Morphism> hom_space(const Representation& a, const Representation& b);
std::size_t hom_dim(const Representation& a, const Representation& b);

// Columns are the vectorized basis morphisms.
Matrix to_columns(const std::vector<Morphism>& fs, const Representation& a, const Representation& b);
Morphism combine(const std::vector<Morphism>& basis, const std::vector<Elem>& coeffs, const Representation& a,
                 const Representation& b);

}  // namespace tilt::quiver
