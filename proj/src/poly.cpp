#include "specsupp/poly.hpp"

#include <algorithm>
#include <map>

namespace specsupp::exactla {

using boost::multiprecision::cpp_int;

Poly::Poly(Field f, std::vector<Scalar> coeffs) : field_(f), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (!(c.field() == field_)) throw FieldMismatch("polynomial coefficient field");
    trim();
}

Poly Poly::constant(const Scalar& c) {
    Poly p(c.field());
    if (!c.is_zero()) p.coeffs_ = {c};
    return p;
}

Poly Poly::x(Field f) { return Poly(f, {Scalar::zero(f), Scalar::one(f)}); }

Poly Poly::from_int_coeffs(Field f, const std::vector<long long>& coeffs) {
    std::vector<Scalar> cs;
    cs.reserve(coeffs.size());
    for (long long c : coeffs) cs.push_back(Scalar::from_int(f, c));
    return Poly(f, std::move(cs));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Scalar::zero(field_);
    return coeffs_[i];
}

Scalar Poly::leading() const {
    if (is_zero()) return Scalar::zero(field_);
    return coeffs_.back();
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Scalar> cs;
    size_t n = std::max(coeffs_.size(), o.coeffs_.size());
    cs.reserve(n);
    for (size_t i = 0; i < n; ++i) cs.push_back(coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i)));
    return Poly(field_, std::move(cs));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<Scalar> cs;
    size_t n = std::max(coeffs_.size(), o.coeffs_.size());
    cs.reserve(n);
    for (size_t i = 0; i < n; ++i) cs.push_back(coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i)));
    return Poly(field_, std::move(cs));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(field_);
    std::vector<Scalar> cs(coeffs_.size() + o.coeffs_.size() - 1, Scalar::zero(field_));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) cs[i + j] = cs[i + j] + coeffs_[i] * o.coeffs_[j];
    return Poly(field_, std::move(cs));
}

Poly Poly::mod(const Poly& d) const { return divmod(d).rem; }

Poly::DivMod Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw InvalidInput("polynomial division by zero");
    Poly q(field_), r = *this;
    Scalar lead_inv = d.leading().inverse();
    std::vector<Scalar> qc(std::max<int>(0, degree() - d.degree() + 1), Scalar::zero(field_));
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int shift = r.degree() - d.degree();
        Scalar c = r.leading() * lead_inv;
        qc[shift] = qc[shift] + c;
        std::vector<Scalar> sub(shift, Scalar::zero(field_));
        for (const auto& dc : d.coeffs()) sub.push_back(dc * c);
        r = r - Poly(field_, std::move(sub));
    }
    return {Poly(field_, std::move(qc)), r};
}

Poly Poly::div_exact(const Poly& d) const {
    auto dm = divmod(d);
    if (!dm.rem.is_zero()) throw InvalidInput("inexact polynomial division");
    return dm.quot;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    Scalar inv = leading().inverse();
    std::vector<Scalar> cs;
    cs.reserve(coeffs_.size());
    for (const auto& c : coeffs_) cs.push_back(c * inv);
    return Poly(field_, std::move(cs));
}

Poly Poly::derivative() const {
    std::vector<Scalar> cs;
    for (int i = 1; i <= degree(); ++i) cs.push_back(coeffs_[i] * Scalar::from_int(field_, i));
    return Poly(field_, std::move(cs));
}

Scalar Poly::eval(const Scalar& v) const {
    Scalar acc = Scalar::zero(field_);
    for (int i = degree(); i >= 0; --i) acc = acc * v + coeffs_[i];
    return acc;
}

Matrix Poly::eval(const Matrix& m) const {
    Matrix acc = Matrix::zero(m.field(), m.rows(), m.cols());
    Matrix id = Matrix::identity(m.field(), m.rows());
    for (int i = degree(); i >= 0; --i) acc = acc * m + id.scaled(coeffs_[i]);
    return acc;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        if (coeffs_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += coeffs_[i].str();
        if (i > 0) s += "*x^" + std::to_string(i);
    }
    return s;
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.mod(b);
        a = b;
        b = r;
    }
    return a.monic();
}

PolyXgcd poly_xgcd(const Poly& a, const Poly& b) {
    Field f = a.field();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(Scalar::one(f)), s1 = Poly::zero(f);
    Poly t0 = Poly::zero(f), t1 = Poly::constant(Scalar::one(f));
    while (!r1.is_zero()) {
        auto dm = r0.divmod(r1);
        Poly r2 = dm.rem;
        Poly s2 = s0 - dm.quot * s1;
        Poly t2 = t0 - dm.quot * t1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Scalar inv = r0.leading().inverse();
    Poly scale = Poly::constant(inv);
    return {r0.monic(), s0 * scale, t0 * scale};
}

Poly poly_powmod(Poly base, cpp_int e, const Poly& mod) {
    Field f = base.field();
    Poly acc = Poly::constant(Scalar::one(f)).mod(mod);
    base = base.mod(mod);
    while (e > 0) {
        if ((e & 1) != 0) acc = (acc * base).mod(mod);
        base = (base * base).mod(mod);
        e >>= 1;
    }
    return acc;
}

namespace {

// f = prod g_i^i with g_i square-free and pairwise coprime (char p aware).
void squarefree_decompose(const Poly& f, int outer_mult, std::map<int, Poly>& out) {
    Field k = f.field();
    if (f.degree() <= 0) return;
    Poly d = f.derivative();
    if (d.is_zero()) {
        // f = g(x^p); over the prime field the p-th root keeps coefficients.
        int p = static_cast<int>(k.p);
        std::vector<Scalar> cs;
        for (int i = 0; i * p <= f.degree(); ++i) cs.push_back(f.coeff(i * p));
        squarefree_decompose(Poly(k, std::move(cs)), outer_mult * p, out);
        return;
    }
    Poly a = poly_gcd(f, d);
    Poly w = f.div_exact(a);  // product of square-free part
    int m = 1;
    while (w.degree() > 0) {
        Poly y = poly_gcd(w, a);
        Poly factor = w.div_exact(y);
        if (factor.degree() > 0) {
            auto [it, inserted] = out.emplace(m * outer_mult, factor.monic());
            if (!inserted) it->second = (it->second * factor).monic();
        }
        w = y;
        a = a.div_exact(y);
        ++m;
    }
    if (a.degree() > 0) squarefree_decompose(a, outer_mult, out);
}

// Equal-degree splitting of a square-free product of degree-d irreducibles.
void equal_degree_split(const Poly& f, int d, Rng& rng, std::vector<Poly>& out) {
    Field k = f.field();
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    cpp_int p(k.p);
    while (true) {
        // random polynomial of degree < deg f
        std::vector<Scalar> cs;
        for (int i = 0; i < f.degree(); ++i) cs.push_back(Scalar(k, rng.below(k.p)));
        Poly a(k, std::move(cs));
        if (a.degree() < 1 && d > 1) continue;
        Poly g = poly_gcd(a, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(f.div_exact(g), d, rng, out);
            return;
        }
        Poly b(k);
        if (k.p == 2) {
            // trace map sum a^(2^i), i < d
            Poly t = a.mod(f);
            b = t;
            for (int i = 1; i < d; ++i) {
                t = (t * t).mod(f);
                b = b + t;
            }
        } else {
            cpp_int e = (boost::multiprecision::pow(p, d) - 1) / 2;
            b = poly_powmod(a, e, f) - Poly::constant(Scalar::one(k));
        }
        Poly g2 = poly_gcd(b, f);
        if (g2.degree() > 0 && g2.degree() < f.degree()) {
            equal_degree_split(g2, d, rng, out);
            equal_degree_split(f.div_exact(g2), d, rng, out);
            return;
        }
    }
}

void factor_squarefree_fp(const Poly& f, Rng& rng, std::vector<Poly>& out) {
    Field k = f.field();
    Poly rest = f.monic();
    Poly xp = Poly::x(k);
    Poly frob = xp;  // x^(p^d) mod rest, recomputed per degree
    for (int d = 1; rest.degree() >= 2 * d; ++d) {
        frob = poly_powmod(frob, cpp_int(k.p), rest);
        Poly g = poly_gcd(frob - xp, rest);
        if (g.degree() > 0) {
            equal_degree_split(g, d, rng, out);
            rest = rest.div_exact(g);
            frob = frob.mod(rest);
        }
    }
    if (rest.degree() > 0) out.push_back(rest);
}

// Divisors of |n| up to a search bound; desk-scale inputs only.
std::vector<cpp_int> small_divisors(cpp_int n) {
    if (n < 0) n = -n;
    static const cpp_int kBound("1000000000000");
    if (n > kBound) throw FactorizationUnavailable("rational root search: coefficient too large");
    std::vector<cpp_int> divs;
    for (cpp_int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            divs.push_back(d);
            divs.push_back(n / d);
        }
        if (d > 2000000) throw FactorizationUnavailable("rational root search: too many candidates");
    }
    return divs;
}

std::vector<PolyFactor> factor_rational(const Poly& f) {
    Field k = f.field();
    Poly rest = f.monic();
    std::map<std::string, std::pair<Poly, int>> found;
    auto push = [&](const Poly& fac) {
        auto [it, inserted] = found.emplace(fac.str(), std::make_pair(fac, 1));
        if (!inserted) it->second.second++;
    };
    // x | f
    while (rest.degree() > 0 && rest.coeff(0).is_zero()) {
        push(Poly::x(k));
        std::vector<Scalar> cs(rest.coeffs().begin() + 1, rest.coeffs().end());
        rest = Poly(k, std::move(cs));
    }
    if (rest.degree() > 0) {
        // clear denominators, then candidate roots num/den
        cpp_int lcm = 1;
        for (const auto& c : rest.coeffs()) lcm = boost::multiprecision::lcm(lcm, denominator(c.rational()));
        std::vector<cpp_int> ic;
        for (const auto& c : rest.coeffs()) ic.push_back(numerator(c.rational() * Rational(lcm)));
        auto nums = small_divisors(ic.front());
        auto dens = small_divisors(ic.back());
        for (const auto& nd : nums) {
            for (const auto& dd : dens) {
                for (int sign : {1, -1}) {
                    Rational r(nd * sign, dd);
                    Scalar root(k, r);
                    while (rest.degree() > 0 && rest.eval(root).is_zero()) {
                        Poly lin(k, {-root, Scalar::one(k)});
                        push(lin);
                        rest = rest.div_exact(lin);
                    }
                }
            }
            if (rest.degree() == 0) break;
        }
    }
    std::vector<PolyFactor> out;
    for (auto& [key, fm] : found) out.push_back({fm.first, fm.second});
    if (rest.degree() > 0) out.push_back({rest.monic(), 1});
    return out;
}

}  // namespace

std::vector<PolyFactor> factor_poly(const Poly& f, Rng& rng) {
    if (f.degree() < 1) return {};
    if (f.field().is_rational()) return factor_rational(f);
    std::map<int, Poly> sqf;
    squarefree_decompose(f.monic(), 1, sqf);
    std::map<std::string, std::pair<Poly, int>> found;
    for (auto& [mult, part] : sqf) {
        std::vector<Poly> irr;
        factor_squarefree_fp(part, rng, irr);
        for (const auto& g : irr) {
            auto [it, inserted] = found.emplace(g.str(), std::make_pair(g, mult));
            if (!inserted) it->second.second += mult;
        }
    }
    std::vector<PolyFactor> out;
    for (auto& [key, fm] : found) out.push_back({fm.first, fm.second});
    return out;
}

Poly charpoly(const Matrix& a) {
    if (!a.is_square()) throw InvalidInput("charpoly of non-square matrix");
    Field f = a.field();
    int n = a.rows();
    Matrix h = a;
    // Similarity reduction to upper Hessenberg form.
    for (int m = 0; m + 2 < n; ++m) {
        int piv = -1;
        for (int i = m + 1; i < n; ++i)
            if (!h.at(i, m).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != m + 1) {
            for (int j = 0; j < n; ++j) {
                Scalar t = h.at(piv, j);
                h.set(piv, j, h.at(m + 1, j));
                h.set(m + 1, j, t);
            }
            for (int j = 0; j < n; ++j) {
                Scalar t = h.at(j, piv);
                h.set(j, piv, h.at(j, m + 1));
                h.set(j, m + 1, t);
            }
        }
        Scalar dinv = h.at(m + 1, m).inverse();
        for (int i = m + 2; i < n; ++i) {
            Scalar factor = h.at(i, m) * dinv;
            if (factor.is_zero()) continue;
            for (int j = 0; j < n; ++j) h.set(i, j, h.at(i, j) - factor * h.at(m + 1, j));
            for (int j = 0; j < n; ++j) h.set(j, m + 1, h.at(j, m + 1) + factor * h.at(j, i));
        }
    }
    // Hessenberg characteristic polynomial recurrence.
    std::vector<Poly> p;
    p.push_back(Poly::constant(Scalar::one(f)));
    Poly x = Poly::x(f);
    for (int m = 1; m <= n; ++m) {
        Poly pm = (x - Poly::constant(h.at(m - 1, m - 1))) * p[m - 1];
        Scalar prod = Scalar::one(f);
        for (int i = m - 1; i >= 1; --i) {
            prod = prod * h.at(i, i - 1);
            Scalar c = h.at(i - 1, m - 1) * prod;
            if (!c.is_zero()) pm = pm - p[i - 1] * Poly::constant(c);
        }
        p.push_back(pm);
    }
    return p[n];
}

}  // namespace specsupp::exactla
