#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "specsupp/errors.hpp"

namespace specsupp::exactla {

using Rational = boost::multiprecision::cpp_rational;

// Ground field: a prime field F_p (p < 2^31) or the rationals (p == 0).
struct Field {
    std::uint32_t p = 0;

    bool is_rational() const { return p == 0; }
    bool operator==(const Field&) const = default;

    static Field rationals() { return Field{0}; }
    static Field prime(std::uint32_t p);

    std::string describe() const { return is_rational() ? "Q" : "F_" + std::to_string(p); }
};

bool is_prime_u32(std::uint32_t n);

namespace fp {

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return (a * b) % p;  // p < 2^31, so the product fits in 64 bits
}
inline std::uint64_t neg(std::uint64_t a, std::uint64_t p) { return a == 0 ? 0 : p - a; }

std::uint64_t inv(std::uint64_t a, std::uint64_t p);
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);

inline std::uint64_t reduce_int(long long v, std::uint64_t p) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return static_cast<std::uint64_t>(r);
}

}  // namespace fp

// One exact field element. Residues are kept reduced to [0, p); rationals are
// kept in lowest terms with positive denominator (cpp_rational invariant).
class Scalar {
public:
    Scalar() : field_{0}, v_(0) {}
    Scalar(Field f, std::uint64_t residue) : field_(f), v_(residue % f.p) {}
    Scalar(Field f, Rational q) : field_(f), q_(std::move(q)) {}

    static Scalar zero(Field f) { return f.is_rational() ? Scalar(f, Rational(0)) : Scalar(f, 0); }
    static Scalar one(Field f) { return f.is_rational() ? Scalar(f, Rational(1)) : Scalar(f, 1); }
    static Scalar from_int(Field f, long long v) {
        return f.is_rational() ? Scalar(f, Rational(v)) : Scalar(f, fp::reduce_int(v, f.p));
    }

    const Field& field() const { return field_; }
    bool is_zero() const { return field_.is_rational() ? q_.is_zero() : v_ == 0; }
    std::uint64_t residue() const { return v_; }
    const Rational& rational() const { return q_; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;

private:
    void check_same(const Scalar& o) const {
        if (!(field_ == o.field_))
            throw FieldMismatch("scalars over " + field_.describe() + " and " + o.field_.describe());
    }

    Field field_;
    std::uint64_t v_ = 0;
    Rational q_;
};

}  // namespace specsupp::exactla
