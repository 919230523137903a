#include "specsupp/field.hpp"

namespace specsupp::exactla {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::uint32_t p) {
    if (!is_prime_u32(p)) throw InvalidInput("field characteristic " + std::to_string(p) + " is not prime");
    return Field{p};
}

namespace fp {

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw InvalidInput("division by zero in F_" + std::to_string(p));
    // extended Euclid
    long long t = 0, nt = 1;
    long long r = static_cast<long long>(p), nr = static_cast<long long>(a % p);
    while (nr != 0) {
        long long q = r / nr;
        long long tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (t < 0) t += static_cast<long long>(p);
    return static_cast<std::uint64_t>(t);
}

}  // namespace fp

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    if (field_.is_rational()) return Scalar(field_, q_ + o.q_);
    return Scalar(field_, fp::add(v_, o.v_, field_.p));
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same(o);
    if (field_.is_rational()) return Scalar(field_, q_ - o.q_);
    return Scalar(field_, fp::sub(v_, o.v_, field_.p));
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    if (field_.is_rational()) return Scalar(field_, q_ * o.q_);
    return Scalar(field_, fp::mul(v_, o.v_, field_.p));
}

Scalar Scalar::operator-() const {
    if (field_.is_rational()) return Scalar(field_, -q_);
    return Scalar(field_, fp::neg(v_, field_.p));
}

Scalar Scalar::inverse() const {
    if (field_.is_rational()) {
        if (q_.is_zero()) throw InvalidInput("division by zero in Q");
        return Scalar(field_, 1 / q_);
    }
    return Scalar(field_, fp::inv(v_, field_.p));
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(field_ == o.field_)) return false;
    return field_.is_rational() ? q_ == o.q_ : v_ == o.v_;
}

std::string Scalar::str() const {
    if (field_.is_rational()) return q_.str();
    return std::to_string(v_);
}

}  // namespace specsupp::exactla
