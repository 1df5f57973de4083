#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "tilt/ff/matrix.hpp"

namespace tilt::quiver {

using ff::Elem;
using ff::Matrix;

class NotAdmissible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class QuiverError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Arrow {
    std::string name;
    std::size_t source;
    std::size_t target;
};

class Quiver {
public:
    Quiver() = default;
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);
    // Arrows given as (name, source name, target name).
    static Quiver from_names(std::vector<std::string> vertices,
                             const std::vector<std::tuple<std::string, std::string, std::string>>& arrows);

    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_arrows() const { return arrows_.size(); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const Arrow& arrow(std::size_t i) const { return arrows_[i]; }
    std::size_t vertex_index(const std::string& name) const;
    std::size_t arrow_index(const std::string& name) const;
    Quiver opposite() const;

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
};

// A path in composition order: arrows {b, a} is b after a. Trivial paths have no arrows.
struct Path {
    std::size_t source = 0;
    std::size_t target = 0;
    std::vector<std::size_t> arrows;
    std::size_t length() const { return arrows.size(); }
    bool operator==(const Path&) const = default;
};

struct RelationTerm {
    std::int64_t coeff;
    std::vector<std::string> path;  // arrow names, composition order
};
using Relation = std::vector<RelationTerm>;

using SparseVec = std::vector<std::pair<std::uint32_t, Elem>>;

// Finite-dimensional algebra with a basis of paths in a quiver: kQ/I, or any algebra presented
// by words in arrows with a multiplication table. Modules are representations of the quiver.
class PathAlgebra {
public:
    using Ptr = std::shared_ptr<const PathAlgebra>;

    static Ptr build(const Quiver& q, const std::vector<Relation>& relations, std::uint32_t p,
                     std::size_t max_path_len);
    // basis[i] must contain every trivial path and every arrow; products[i * dim + j] is b_i b_j.
    static Ptr from_table(const Quiver& q, std::vector<Path> basis, std::vector<SparseVec> products,
                          std::uint32_t p);

    std::uint32_t p() const { return p_; }
    const Quiver& quiver() const { return quiver_; }
    const std::vector<Relation>& relations() const { return relations_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Path>& basis() const { return basis_; }
    const Path& basis_path(std::size_t i) const { return basis_[i]; }
    std::size_t loewy_length() const { return loewy_; }
    std::size_t idempotent(std::size_t v) const { return idem_[v]; }
    std::size_t arrow_element(std::size_t a) const { return arrow_elem_[a]; }
    // b_i b_j (b_i after b_j).
    const SparseVec& product(std::size_t i, std::size_t j) const { return products_[i * dim() + j]; }
    std::vector<Elem> multiply(const std::vector<Elem>& x, const std::vector<Elem>& y) const;
    // Basis elements with the given source and target, in basis order.
    std::vector<std::size_t> elements_between(std::size_t source, std::size_t target) const;

    Ptr op() const;
    std::string element_name(std::size_t i) const;
    bool is_opposite() const { return is_op_; }

private:
    PathAlgebra() = default;
    static Ptr pair_up(PathAlgebra&& primal);
    void finish_indexing();
    void check_associative() const;

    std::uint32_t p_ = 0;
    Quiver quiver_;
    std::vector<Relation> relations_;
    std::vector<Path> basis_;
    std::vector<SparseVec> products_;
    std::vector<std::size_t> idem_;
    std::vector<std::size_t> arrow_elem_;
    std::size_t loewy_ = 1;
    bool is_op_ = false;
    std::weak_ptr<const PathAlgebra> op_;
};

}  // namespace tilt::quiver
