#pragma once

#include <memory>
#include <string>
#include <vector>

#include "specsupp/matrix.hpp"

namespace specsupp::algmod {

using exactla::Field;
using exactla::Matrix;
using exactla::Scalar;

struct Arrow {
    std::string name;
    int from = 0, to = 0;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    int vertex_index(const std::string& label) const;
    int arrow_index(const std::string& name) const;
    Quiver reversed() const;
};

// A path: trivial at a vertex or a left-to-right composable arrow sequence.
struct Path {
    int source = 0, target = 0;
    std::vector<int> arrows;

    int length() const { return static_cast<int>(arrows.size()); }
    std::string label(const Quiver& q) const;
    bool operator==(const Path&) const = default;
};

// One relation: a linear combination of paths with a common source and a
// common target, each of length >= 1.
struct RelationTerm {
    long long coeff = 1;
    std::vector<int> arrows;
};
using Relation = std::vector<RelationTerm>;

Relation parse_relation(const Quiver& q, const std::string& text);

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

// Finite-dimensional quotient of a path algebra. The basis is the set of
// paths surviving reduction modulo the relation ideal inside the truncated
// path space of length <= length_bound; basis element i < #vertices is the
// trivial path e_i.
class Algebra {
public:
    static AlgebraPtr from_quiver(Quiver quiver, const std::vector<std::string>& relation_texts,
                                  Field field, int length_bound);

    const Field& field() const { return field_; }
    const Quiver& quiver() const { return quiver_; }
    const std::vector<std::string>& relation_texts() const { return relation_texts_; }
    int length_bound() const { return length_bound_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    int num_vertices() const { return static_cast<int>(quiver_.vertices.size()); }
    const std::vector<Path>& basis() const { return basis_; }
    std::string basis_label(int i) const { return basis_[i].label(quiver_); }

    // Multiplication of coordinate rows (1 x dim).
    const Matrix& mult_basis(int i, int j) const { return table_[i][j]; }
    Matrix mult(const Matrix& x, const Matrix& y) const;
    Matrix unit_coords() const;
    Matrix basis_coords(int i) const;

    // Indices of positive-length basis paths; they span the radical.
    const std::vector<int>& radical_indices() const { return radical_indices_; }
    // Coordinate rows generating the algebra: vertex idempotents and the
    // reduced images of the arrows.
    const std::vector<Matrix>& generator_coords() const { return generator_coords_; }

    // The opposite algebra: same basis index set, reversed multiplication,
    // reversed quiver presentation.
    AlgebraPtr opposite() const;

    bool same_presentation(const Algebra& o) const;

private:
    Algebra() = default;
    void finalize_and_validate();

    Field field_{2};
    Quiver quiver_;
    std::vector<std::string> relation_texts_;
    int length_bound_ = 0;
    std::vector<Path> basis_;
    std::vector<std::vector<Matrix>> table_;  // table_[i][j] = coords of b_i * b_j
    std::vector<int> radical_indices_;
    std::vector<Matrix> generator_coords_;
};

}  // namespace specsupp::algmod
