#pragma once

#include <vector>

#include "specsupp/matrix.hpp"
#include "specsupp/rng.hpp"

namespace specsupp::exactla {

// Dense univariate polynomial; coefficient 0 is the constant term, no
// trailing zero coefficients are stored (zero polynomial = empty).
class Poly {
public:
    explicit Poly(Field f) : field_(f) {}
    Poly(Field f, std::vector<Scalar> coeffs);

    static Poly zero(Field f) { return Poly(f); }
    static Poly constant(const Scalar& c);
    static Poly x(Field f);
    static Poly from_int_coeffs(Field f, const std::vector<long long>& coeffs);

    const Field& field() const { return field_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Scalar coeff(int i) const;
    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    Scalar leading() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    bool operator==(const Poly& o) const { return field_ == o.field_ && coeffs_ == o.coeffs_; }

    struct DivMod;
    DivMod divmod(const Poly& d) const;
    Poly mod(const Poly& d) const;
    Poly div_exact(const Poly& d) const;

    Poly monic() const;
    Poly derivative() const;
    Scalar eval(const Scalar& v) const;
    Matrix eval(const Matrix& m) const;

    std::string str() const;

private:
    void trim();
    Field field_;
    std::vector<Scalar> coeffs_;
};

struct Poly::DivMod {
    Poly quot, rem;
};

Poly poly_gcd(Poly a, Poly b);  // monic gcd
// g = gcd(a, b) together with u, v such that u*a + v*b = g.
struct PolyXgcd {
    Poly g, u, v;
};
PolyXgcd poly_xgcd(const Poly& a, const Poly& b);
Poly poly_powmod(Poly base, boost::multiprecision::cpp_int e, const Poly& mod);

struct PolyFactor {
    Poly factor;  // monic
    int multiplicity;
};

// f = lead * prod factor^multiplicity with the factors pairwise coprime.
// Over F_p the factors are irreducible (square-free + distinct-degree +
// seeded equal-degree splitting). Over Q only rational roots are split off;
// a root-free residual of degree > 1 stays unsplit as one factor.
std::vector<PolyFactor> factor_poly(const Poly& f, Rng& rng);

// det(x*I - A), computed by Hessenberg reduction; exact over any field.
Poly charpoly(const Matrix& a);

}  // namespace specsupp::exactla
