#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specsupp/field.hpp"

namespace specsupp::exactla {

// Dense exact matrix over one Field. Storage is row-major; a prime-field
// matrix keeps reduced residues in a flat uint64 buffer, a rational matrix
// keeps cpp_rational entries.
class Matrix {
public:
    Matrix() : field_{2}, rows_(0), cols_(0) {}
    Matrix(Field f, int rows, int cols);

    static Matrix identity(Field f, int n);
    static Matrix zero(Field f, int rows, int cols) { return Matrix(f, rows, cols); }
    // Convenience for tests and literals: entries reduced into the field.
    static Matrix from_int_rows(Field f, const std::vector<std::vector<long long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return field_; }

    Scalar at(int i, int j) const;
    void set(int i, int j, const Scalar& v);
    void set_int(int i, int j, long long v);

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(const Scalar& c) const;
    Matrix operator-() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const;
    Matrix pow(std::uint64_t e) const;
    Scalar trace() const;
    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    Matrix row(int i) const;
    Matrix select_rows(const std::vector<int>& idx) const;
    Matrix select_cols(const std::vector<int>& idx) const;
    static Matrix vstack(const Matrix& a, const Matrix& b);
    static Matrix hstack(const Matrix& a, const Matrix& b);
    static Matrix block_diag(const Matrix& a, const Matrix& b);

    struct Rref;
    Rref rref() const;
    int rank() const;

    // Basis of {x : M x = 0}, returned as a (cols x nullity) matrix.
    Matrix right_kernel() const;
    // Basis of {x : x M = 0}, returned as rows of a (nullity x rows) matrix.
    Matrix left_kernel() const;
    // Nonzero rows of the rref: canonical basis of the row space.
    Matrix row_space_basis() const;

    // One solution X of M X = B (B has rows() rows), or nullopt.
    std::optional<Matrix> solve(const Matrix& b) const;
    std::optional<Matrix> try_inverse() const;
    Matrix inverse() const;

    // Stable byte key for hashing subspaces etc.; canonical only if the
    // matrix itself is canonical (e.g. an rref row basis).
    std::string byte_key() const;

private:
    void check_same_field(const Matrix& o) const;
    bool fp() const { return !field_.is_rational(); }

    Field field_;
    int rows_, cols_;
    std::vector<std::uint64_t> fpv_;
    std::vector<Rational> rat_;

    friend struct MatrixKernels;
};

struct Matrix::Rref {
    Matrix reduced;
    std::vector<int> pivots;
    int rank = 0;
};

// A subspace of row vectors, kept as a reduced row echelon basis. Canonical:
// two spans are equal iff their rref matrices are equal.
class RowSpan {
public:
    explicit RowSpan(Field f, int dim);
    explicit RowSpan(const Matrix& rows);

    int ambient() const { return basis_.cols(); }
    int dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const Field& field() const { return basis_.field(); }

    bool contains_row(const Matrix& v) const;
    bool contains(const RowSpan& other) const;
    // Returns true if the row enlarged the span.
    bool add_row(const Matrix& v);
    RowSpan sum(const RowSpan& other) const;
    RowSpan intersect(const RowSpan& other) const;
    bool operator==(const RowSpan& o) const { return basis_ == o.basis_; }

    std::string key() const { return basis_.byte_key(); }

private:
    Matrix basis_;  // rref, full row rank
};

// Invertible matrix whose first block of rows is `rows` (assumed independent),
// completed by standard basis vectors. Returns {T, T^{-1}}.
std::pair<Matrix, Matrix> complete_to_basis(const Matrix& rows, int ambient);

}  // namespace specsupp::exactla
