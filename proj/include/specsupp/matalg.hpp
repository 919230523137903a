#pragma once

#include <vector>

#include "specsupp/poly.hpp"

namespace specsupp::exactla {

// Finite-dimensional associative algebra presented by a linearly independent
// basis of ambient n x n matrices, validated closed under multiplication.
class MatrixAlgebra {
public:
    static MatrixAlgebra from_basis(std::vector<Matrix> basis);
    // Grow a spanning set to a multiplicatively closed basis.
    static MatrixAlgebra span_closure(std::vector<Matrix> generators);

    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const Field& field() const { return field_; }
    const std::vector<Matrix>& basis() const { return basis_; }
    bool contains_identity() const { return contains_identity_; }

    // Coordinates (1 x dim row) of an ambient matrix in the basis; nullopt if
    // the matrix lies outside the span.
    std::optional<Matrix> coords_of(const Matrix& m) const;
    Matrix element(const Matrix& coords) const;

    // Matrix of right multiplication by x on coordinate rows (y -> y * R);
    // x -> R_x is a faithful homomorphism when the algebra is unital.
    Matrix right_mult_matrix(const Matrix& x) const;
    Scalar regular_trace(const Matrix& x) const { return right_mult_matrix(x).trace(); }

    Matrix random_element(Rng& rng) const;

private:
    MatrixAlgebra() = default;
    Field field_{2};
    int ambient_ = 0;
    bool contains_identity_ = false;
    std::vector<Matrix> basis_;
    Matrix basis_rows_;  // dim x n^2, vectorized basis
    Matrix solver_;      // n^2 x n^2 transform: coordinates = solver_ * vec(m)
};

enum class RadicalMethod {
    // Dickson trace form when valid, semilinear trace chain otherwise.
    automatic,
    // Trace form only; raises SmallCharacteristic for 0 < p <= dim.
    trace_form_only,
};

// Basis of the Jacobson radical J(E), as ambient matrices. Exact in every
// characteristic: the regular-representation trace form suffices for char 0
// or p > dim(E); for small p the chain of p^i-power trace forms is used.
std::vector<Matrix> radical_basis(const MatrixAlgebra& E, RadicalMethod method = RadicalMethod::automatic);

// Minimal polynomial of u relative to the unit e of the subalgebra containing
// it (powers are e, u, u^2, ...).
Poly minimal_polynomial(const Matrix& u, const Matrix& unit);

// Evaluate a polynomial at u, with the constant term multiplying `unit`.
Matrix eval_poly_at(const Poly& f, const Matrix& u, const Matrix& unit);

struct IdempotentSplit {
    std::vector<Matrix> radical;             // span of J(E), ambient matrices
    // E/J data: quotient basis is represented by section elements of E.
    std::vector<Matrix> quotient_section;    // representatives of a basis of E/J
    // Primitive central idempotents of E/J, as representatives in E
    // (idempotent and central only modulo J).
    std::vector<Matrix> central_primitives;
    // Complete orthogonal system of primitive idempotents of E itself,
    // summing to the identity; entry i reduces mod J into block block_of[i].
    std::vector<Matrix> primitive_system;
    std::vector<int> block_of;
};

// Requires a unital algebra. Deterministic given the seed.
IdempotentSplit split_idempotents(const MatrixAlgebra& E, std::uint64_t seed);

}  // namespace specsupp::exactla
