#include <doctest.h>

#include "specsupp/poly.hpp"

using namespace specsupp;
using namespace specsupp::exactla;

namespace {

Poly product_of(const std::vector<PolyFactor>& factors, Field f) {
    Poly acc = Poly::constant(Scalar::one(f));
    for (const auto& fac : factors)
        for (int i = 0; i < fac.multiplicity; ++i) acc = acc * fac.factor;
    return acc;
}

}  // namespace

TEST_CASE("divmod, gcd, xgcd") {
    Field f = Field::prime(7);
    Poly a = Poly::from_int_coeffs(f, {1, 0, 1});   // x^2 + 1
    Poly b = Poly::from_int_coeffs(f, {1, 1});      // x + 1
    auto dm = a.divmod(b);
    CHECK(dm.quot * b + dm.rem == a);
    Poly g = poly_gcd(a * b, b);
    CHECK(g == b.monic());
    auto xg = poly_xgcd(a, b);
    CHECK(xg.u * a + xg.v * b == xg.g);
}

TEST_CASE("factorization over small prime fields reconstructs the input") {
    for (std::uint32_t p : {2u, 3u, 5u, 1009u}) {
        Field f = Field::prime(p);
        Rng rng(p * 17 + 1);
        Rng gen(p + 5);
        for (int t = 0; t < 20; ++t) {
            // random monic polynomial of degree 1..8
            int deg = 1 + static_cast<int>(gen.below(8));
            std::vector<Scalar> cs;
            for (int i = 0; i < deg; ++i) cs.push_back(Scalar(f, gen.below(p)));
            cs.push_back(Scalar::one(f));
            Poly poly(f, cs);
            auto factors = factor_poly(poly, rng);
            CHECK(product_of(factors, f) == poly.monic());
            // factors pairwise coprime
            for (size_t i = 0; i < factors.size(); ++i)
                for (size_t j = i + 1; j < factors.size(); ++j)
                    CHECK(poly_gcd(factors[i].factor, factors[j].factor).degree() == 0);
        }
    }
}

TEST_CASE("repeated factors and Frobenius powers over F_2") {
    Field f = Field::prime(2);
    Rng rng(3);
    Poly x = Poly::x(f);
    Poly one = Poly::constant(Scalar::one(f));
    Poly p = (x + one) * (x + one) * (x * x + x + one);  // (x+1)^2 (x^2+x+1)
    auto factors = factor_poly(p, rng);
    REQUIRE(factors.size() == 2);
    CHECK(product_of(factors, f) == p.monic());
    Poly q = (x * x + x + one) * (x * x + x + one);  // irreducible squared
    auto qf = factor_poly(q, rng);
    REQUIRE(qf.size() == 1);
    CHECK(qf[0].multiplicity == 2);
    CHECK(qf[0].factor.degree() == 2);
}

TEST_CASE("rational root extraction") {
    Field f = Field::rationals();
    Rng rng(1);
    // (x - 1/2)(x + 3)(x^2 + 1)
    Poly p = Poly(f, {Scalar(f, Rational(-1, 2)), Scalar::one(f)});
    Poly q = Poly::from_int_coeffs(f, {3, 1});
    Poly r = Poly::from_int_coeffs(f, {1, 0, 1});
    auto factors = factor_poly(p * q * r, rng);
    REQUIRE(factors.size() == 3);
    CHECK(product_of(factors, f) == (p * q * r).monic());
}

TEST_CASE("charpoly matches expansion on small matrices") {
    Field f = Field::prime(1009);
    Matrix m = Matrix::from_int_rows(f, {{2, 1, 0}, {0, 2, 0}, {1, 0, 5}});
    Poly cp = charpoly(m);
    // det(xI - M) = (x-2)^2 (x-5)
    Poly x = Poly::x(f);
    Poly expect = (x - Poly::from_int_coeffs(f, {2})) * (x - Poly::from_int_coeffs(f, {2})) *
                  (x - Poly::from_int_coeffs(f, {5}));
    CHECK(cp == expect);
    // Cayley-Hamilton on a few random matrices in several characteristics
    for (std::uint32_t p : {2u, 3u, 1009u}) {
        Field fp = Field::prime(p);
        Rng rng(p);
        for (int t = 0; t < 6; ++t) {
            Matrix a(fp, 4, 4);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) a.set_int(i, j, static_cast<long long>(rng.below(p)));
            CHECK(charpoly(a).eval(a).is_zero());
        }
    }
}

TEST_CASE("minimal polynomial via charpoly consistency") {
    Field f = Field::prime(2);
    // nilpotent Jordan block: charpoly = minpoly = x^3
    Matrix n = Matrix::from_int_rows(f, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
    CHECK(charpoly(n) == Poly::from_int_coeffs(f, {0, 0, 0, 1}));
}
