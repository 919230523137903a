#include "specsupp/matalg.hpp"

#include <algorithm>

namespace specsupp::exactla {

namespace {

Matrix vectorize(const Matrix& m) {
    Matrix r(m.field(), 1, m.rows() * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.set(0, i * m.cols() + j, m.at(i, j));
    return r;
}

}  // namespace

MatrixAlgebra MatrixAlgebra::from_basis(std::vector<Matrix> basis) {
    if (basis.empty()) throw InvalidInput("matrix algebra needs a nonempty basis");
    MatrixAlgebra a;
    a.field_ = basis[0].field();
    a.ambient_ = basis[0].rows();
    for (const auto& b : basis) {
        if (!(b.field() == a.field_)) throw FieldMismatch("algebra basis fields differ");
        if (b.rows() != a.ambient_ || b.cols() != a.ambient_)
            throw InvalidInput("algebra basis matrices must share one square shape");
    }
    a.basis_ = std::move(basis);
    int nn = a.ambient_ * a.ambient_;
    a.basis_rows_ = Matrix(a.field_, 0, nn);
    for (const auto& b : a.basis_) a.basis_rows_ = Matrix::vstack(a.basis_rows_, vectorize(b));
    // Precompute the membership/coordinate solver: row-reduce [B^T | I] so
    // that coordinates of vec(m) read off from solver * vec(m).
    Matrix aug = Matrix::hstack(a.basis_rows_.transpose(), Matrix::identity(a.field_, nn));
    auto rr = aug.rref();
    int rank = 0;
    for (int c : rr.pivots)
        if (c < a.dim()) ++rank;
    if (rank != a.dim()) throw InvalidInput("algebra basis is linearly dependent");
    {
        std::vector<int> right_cols(nn);
        for (int j = 0; j < nn; ++j) right_cols[j] = a.dim() + j;
        a.solver_ = rr.reduced.select_cols(right_cols);
    }
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            if (!a.coords_of(a.basis_[i] * a.basis_[j]))
                throw InvalidInput("algebra basis is not multiplicatively closed");
    a.contains_identity_ = a.coords_of(Matrix::identity(a.field_, a.ambient_)).has_value();
    return a;
}

MatrixAlgebra MatrixAlgebra::span_closure(std::vector<Matrix> generators) {
    if (generators.empty()) throw InvalidInput("span_closure needs generators");
    Field f = generators[0].field();
    int n = generators[0].rows();
    RowSpan span(f, n * n);
    std::vector<Matrix> basis;
    auto add = [&](const Matrix& m) {
        if (span.add_row(vectorize(m))) {
            basis.push_back(m);
            return true;
        }
        return false;
    };
    for (const auto& g : generators) add(g);
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j) {
            add(basis[i] * basis[j]);
            if (basis.size() > static_cast<size_t>(n) * n)
                throw InvalidInput("span closure exceeded ambient dimension");
        }
    return from_basis(std::move(basis));
}

std::optional<Matrix> MatrixAlgebra::coords_of(const Matrix& m) const {
    if (m.rows() != ambient_ || m.cols() != ambient_) return std::nullopt;
    Matrix v = solver_ * vectorize(m).transpose();  // n^2 x 1
    int h = dim();
    Matrix coords(field_, 1, h);
    for (int i = 0; i < h; ++i) coords.set(0, i, v.at(i, 0));
    for (int i = h; i < v.rows(); ++i)
        if (!v.at(i, 0).is_zero()) return std::nullopt;
    return coords;
}

Matrix MatrixAlgebra::element(const Matrix& coords) const {
    Matrix m = Matrix::zero(field_, ambient_, ambient_);
    for (int i = 0; i < dim(); ++i) {
        Scalar c = coords.at(0, i);
        if (!c.is_zero()) m = m + basis_[i].scaled(c);
    }
    return m;
}

Matrix MatrixAlgebra::right_mult_matrix(const Matrix& x) const {
    Matrix r(field_, dim(), dim());
    for (int j = 0; j < dim(); ++j) {
        auto c = coords_of(basis_[j] * x);
        if (!c) throw InvalidInput("element does not stabilize the algebra");
        for (int k = 0; k < dim(); ++k) r.set(j, k, c->at(0, k));
    }
    return r;
}

Matrix MatrixAlgebra::random_element(Rng& rng) const {
    Matrix coords(field_, 1, dim());
    for (int i = 0; i < dim(); ++i) {
        if (field_.is_rational())
            coords.set_int(0, i, static_cast<long long>(rng.below(19)) - 9);
        else
            coords.set_int(0, i, static_cast<long long>(rng.below(field_.p)));
    }
    return element(coords);
}

namespace {

// Coefficient of x^(n-k) in det(xI - A); k = 1 is (minus) the trace.
Scalar charpoly_coeff(const Matrix& a, std::uint64_t k) {
    if (k == 1) return a.trace();
    Poly cp = charpoly(a);
    return cp.coeff(a.rows() - static_cast<int>(k));
}

// Quotient E/(ideal): section basis (a subset of E's basis elements),
// multiplication table in quotient coordinates, and the faithful
// right-multiplication representation of the quotient.
struct QuotientData {
    std::vector<int> section_idx;
    std::vector<Matrix> section;
    Matrix jbasis;  // rref rows of the ideal in E-coordinates
    std::vector<int> jpivots;
    int qdim = 0;
    std::vector<std::vector<Matrix>> table;  // table[i][j] = qcoords(s_i s_j)
    std::vector<Matrix> qreps;

    Matrix project(Matrix coords) const {
        for (int r = 0; r < jbasis.rows(); ++r) {
            Scalar v = coords.at(0, jpivots[r]);
            if (!v.is_zero()) coords = coords - jbasis.row(r).scaled(v);
        }
        Matrix q(coords.field(), 1, qdim);
        for (int t = 0; t < qdim; ++t) q.set(0, t, coords.at(0, section_idx[t]));
        return q;
    }
};

QuotientData build_quotient(const MatrixAlgebra& E, const std::vector<Matrix>& ideal) {
    Field f = E.field();
    int h = E.dim();
    QuotientData q;
    RowSpan jspan(f, h);
    for (const auto& r : ideal) {
        auto c = E.coords_of(r);
        if (!c) throw InvalidInput("ideal element outside the algebra");
        jspan.add_row(*c);
    }
    q.jbasis = jspan.basis();
    {
        auto rr = q.jbasis.rref();
        q.jpivots = rr.pivots;
    }
    std::vector<bool> is_pivot(h, false);
    for (int c : q.jpivots) is_pivot[c] = true;
    for (int i = 0; i < h; ++i)
        if (!is_pivot[i]) q.section_idx.push_back(i);
    q.qdim = static_cast<int>(q.section_idx.size());
    for (int i : q.section_idx) q.section.push_back(E.basis()[i]);

    q.table.assign(q.qdim, std::vector<Matrix>(q.qdim, Matrix(f, 1, q.qdim)));
    for (int i = 0; i < q.qdim; ++i)
        for (int j = 0; j < q.qdim; ++j)
            q.table[i][j] = q.project(*E.coords_of(q.section[i] * q.section[j]));
    for (int i = 0; i < q.qdim; ++i) {
        Matrix r(f, q.qdim, q.qdim);
        for (int j = 0; j < q.qdim; ++j)
            for (int k = 0; k < q.qdim; ++k) r.set(j, k, q.table[j][i].at(0, k));
        q.qreps.push_back(r);
    }
    return q;
}

std::vector<Matrix> radical_impl(const MatrixAlgebra& E, RadicalMethod method, bool verify) {
    Field f = E.field();
    int h = E.dim();
    std::vector<Matrix> reps;
    reps.reserve(h);
    for (const auto& b : E.basis()) reps.push_back(E.right_mult_matrix(b));
    auto rep_of = [&](const Matrix& coords) {
        Matrix r = Matrix::zero(f, h, h);
        for (int i = 0; i < h; ++i) {
            Scalar c = coords.at(0, i);
            if (!c.is_zero()) r = r + reps[i].scaled(c);
        }
        return r;
    };

    bool dickson_valid = f.is_rational() || f.p > static_cast<std::uint32_t>(h);
    if (method == RadicalMethod::trace_form_only && !dickson_valid)
        throw SmallCharacteristic("trace-form radical needs char 0 or p > dim = " + std::to_string(h));

    // Dickson trace form handles char 0 and p > dim; small characteristic
    // takes the descending chain of charpoly-coefficient forms c_{p^i}.
    int max_level = 0;
    if (!dickson_valid) {
        std::uint64_t pw = f.p;
        while (pw <= static_cast<std::uint64_t>(h)) {
            ++max_level;
            pw *= f.p;
        }
    }

    Matrix current = Matrix::identity(f, h);
    std::uint64_t power = 1;
    for (int level = 0; level <= max_level; ++level) {
        int m = current.rows();
        if (m == 0) break;
        std::vector<Matrix> cur_reps;
        cur_reps.reserve(m);
        for (int a = 0; a < m; ++a) cur_reps.push_back(rep_of(current.row(a)));
        Matrix form(f, m, m);
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) form.set(a, b, charpoly_coeff(cur_reps[a] * cur_reps[b], power));
        Matrix kernel = form.left_kernel();
        current = (kernel * current).row_space_basis();
        if (!f.is_rational()) power *= f.p;
    }

    std::vector<Matrix> out;
    for (int a = 0; a < current.rows(); ++a) out.push_back(E.element(current.row(a)));

    if (verify && !out.empty()) {
        // Two-sided ideal.
        RowSpan jspan(f, h);
        for (const auto& j : out) jspan.add_row(*E.coords_of(j));
        for (const auto& j : out)
            for (const auto& b : E.basis()) {
                auto left = E.coords_of(b * j), right = E.coords_of(j * b);
                if (!left || !right || !jspan.contains_row(*left) || !jspan.contains_row(*right))
                    throw InvalidInput("computed radical is not a two-sided ideal");
            }
        // Nilpotent: the powers J^k strictly decrease to zero.
        std::vector<Matrix> layer = out;
        while (!layer.empty()) {
            RowSpan next_span(f, h);
            std::vector<Matrix> next;
            for (const auto& x : layer)
                for (const auto& j : out) {
                    Matrix prod = x * j;
                    auto c = E.coords_of(prod);
                    if (next_span.add_row(*c)) next.push_back(prod);
                }
            if (next.size() >= layer.size())
                throw InvalidInput("computed radical is not nilpotent");
            layer = std::move(next);
        }
    }
    if (verify) {
        // The quotient must be radical-free.
        QuotientData q = build_quotient(E, out);
        if (q.qdim > 0) {
            MatrixAlgebra Q = MatrixAlgebra::from_basis(q.qreps);
            if (!radical_impl(Q, RadicalMethod::automatic, false).empty())
                throw InvalidInput("quotient by computed radical is not semisimple");
        }
    }
    return out;
}

}  // namespace

std::vector<Matrix> radical_basis(const MatrixAlgebra& E, RadicalMethod method) {
    return radical_impl(E, method, true);
}

Poly minimal_polynomial(const Matrix& u, const Matrix& unit) {
    Field f = u.field();
    Matrix powers_rows = vectorize(unit);
    Matrix p = unit;
    for (int k = 1;; ++k) {
        p = p * u;
        Matrix target = vectorize(p);
        auto sol = powers_rows.transpose().solve(target.transpose());
        if (sol) {
            std::vector<Scalar> coeffs;
            for (int i = 0; i < k; ++i) coeffs.push_back(-sol->at(i, 0));
            coeffs.push_back(Scalar::one(f));
            return Poly(f, std::move(coeffs));
        }
        powers_rows = Matrix::vstack(powers_rows, target);
        if (k > u.rows() * u.rows() + 1) throw InvalidInput("minimal polynomial search did not terminate");
    }
}

Matrix eval_poly_at(const Poly& f, const Matrix& u, const Matrix& unit) {
    Matrix acc = Matrix::zero(u.field(), u.rows(), u.cols());
    for (int i = f.degree(); i >= 0; --i) acc = acc * u + unit.scaled(f.coeff(i));
    return acc;
}

namespace {

// Orthogonal idempotent refinement of `unit` from a coprime factorization of
// the minimal polynomial of u.
std::vector<Matrix> crt_idempotents(const Matrix& u, const Matrix& unit, const Poly& minpoly,
                                    const std::vector<PolyFactor>& factors) {
    Field f = u.field();
    std::vector<Matrix> out;
    for (const auto& fac : factors) {
        Poly fpow = Poly::constant(Scalar::one(f));
        for (int i = 0; i < fac.multiplicity; ++i) fpow = fpow * fac.factor;
        Poly rest = minpoly.div_exact(fpow);
        auto xg = poly_xgcd(rest, fpow);
        if (xg.g.degree() != 0) throw InvalidInput("crt_idempotents: factors not coprime");
        Poly g = xg.u * rest;  // g = 1 mod fpow, 0 mod rest (xgcd result is monic)
        Matrix e = eval_poly_at(g, u, unit);
        if (e * e != e) throw InvalidInput("crt_idempotents: evaluation not idempotent");
        out.push_back(e);
    }
    Matrix sum = Matrix::zero(f, unit.rows(), unit.cols());
    for (const auto& e : out) sum = sum + e;
    if (sum != unit) throw InvalidInput("crt_idempotents: pieces do not sum to the unit");
    for (size_t i = 0; i < out.size(); ++i)
        for (size_t j = i + 1; j < out.size(); ++j)
            if (!(out[i] * out[j]).is_zero() || !(out[j] * out[i]).is_zero())
                throw InvalidInput("crt_idempotents: pieces not orthogonal");
    return out;
}

// The subalgebra e*A*e spanned by compressions of the basis.
struct Corner {
    std::vector<Matrix> basis;
    RowSpan span;
};

Corner corner_of(const std::vector<Matrix>& algebra_basis, const Matrix& e) {
    Corner c{.basis = {}, .span = RowSpan(e.field(), e.rows() * e.cols())};
    for (const auto& b : algebra_basis) {
        Matrix ebe = e * b * e;
        if (c.span.add_row(vectorize(ebe))) c.basis.push_back(ebe);
    }
    return c;
}

Matrix corner_coords(const Corner& c, const Matrix& m) {
    Matrix rows(m.field(), 0, m.rows() * m.cols());
    for (const auto& b : c.basis) rows = Matrix::vstack(rows, vectorize(b));
    auto sol = rows.transpose().solve(vectorize(m).transpose());
    if (!sol) throw InvalidInput("corner_coords: element outside corner");
    return sol->transpose();
}

// Frobenius-fixed subalgebra {x : x^p = x} of a commutative corner over F_p;
// its dimension equals the number of simple components.
std::vector<Matrix> frobenius_fixed(const Corner& c, std::uint32_t p) {
    int m = static_cast<int>(c.basis.size());
    Field f = c.basis[0].field();
    Matrix frob(f, m, m);
    for (int i = 0; i < m; ++i) {
        Matrix coords = corner_coords(c, c.basis[i].pow(p));
        for (int j = 0; j < m; ++j) frob.set(i, j, coords.at(0, j));
    }
    Matrix fixed = (frob - Matrix::identity(f, m)).left_kernel();
    std::vector<Matrix> out;
    for (int r = 0; r < fixed.rows(); ++r) {
        Matrix elt = Matrix::zero(f, c.basis[0].rows(), c.basis[0].cols());
        for (int j = 0; j < m; ++j) {
            Scalar s = fixed.at(r, j);
            if (!s.is_zero()) elt = elt + c.basis[j].scaled(s);
        }
        out.push_back(elt);
    }
    return out;
}

bool commutes(const std::vector<Matrix>& basis) {
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j)
            if (basis[i] * basis[j] != basis[j] * basis[i]) return false;
    return true;
}

// Split `unit` into orthogonal primitive idempotents of the (semisimple)
// algebra spanned by `ambient_basis`.
void split_corner(const std::vector<Matrix>& ambient_basis, const Matrix& unit, Rng& rng,
                  std::vector<Matrix>& out) {
    Field f = unit.field();
    Corner c = corner_of(ambient_basis, unit);
    if (c.basis.size() == 1) {
        out.push_back(unit);
        return;
    }
    auto try_split = [&](const Matrix& u) -> bool {
        Poly mp = minimal_polynomial(u, unit);
        auto factors = factor_poly(mp, rng);
        if (factors.size() < 2) return false;
        for (const auto& piece : crt_idempotents(u, unit, mp, factors))
            split_corner(ambient_basis, piece, rng, out);
        return true;
    };
    for (const auto& b : c.basis)
        if (try_split(b)) return;
    for (size_t i = 0; i < c.basis.size(); ++i)
        for (size_t j = i + 1; j < c.basis.size(); ++j)
            if (try_split(c.basis[i] + c.basis[j])) return;

    if (!f.is_rational()) {
        if (commutes(c.basis)) {
            // Commutative semisimple over F_p: the Frobenius-fixed subalgebra
            // is spanned by the primitive idempotents, so dimension one means
            // the corner is a field.
            auto fixed = frobenius_fixed(c, f.p);
            if (fixed.size() <= 1) {
                out.push_back(unit);
                return;
            }
            for (const auto& w : fixed)
                if (try_split(w)) return;
            throw InvalidInput("split_corner: Frobenius element failed to split");
        }
        // A noncommutative semisimple corner over a finite field always has a
        // splitting element; seeded random combinations find one.
        for (int trial = 0; trial < 4096; ++trial) {
            Matrix u = Matrix::zero(f, unit.rows(), unit.cols());
            for (const auto& b : c.basis) u = u + b.scaled(Scalar(f, rng.below(f.p)));
            if (try_split(u)) return;
        }
        throw InvalidInput("split_corner: no splitting element found over " + f.describe());
    }

    // Rationals: a corner is certified to be a field only when some element
    // has an irreducible minimal polynomial of full corner dimension, which
    // rational-root search can certify up to degree 3.
    for (const auto& b : c.basis) {
        Poly mp = minimal_polynomial(b, unit);
        auto factors = factor_poly(mp, rng);
        if (mp.degree() == static_cast<int>(c.basis.size()) && mp.degree() <= 3 && factors.size() == 1 &&
            factors[0].factor.degree() == mp.degree()) {
            out.push_back(unit);
            return;
        }
    }
    for (int trial = 0; trial < 64; ++trial) {
        Matrix u = Matrix::zero(f, unit.rows(), unit.cols());
        for (const auto& b : c.basis)
            u = u + b.scaled(Scalar::from_int(f, static_cast<long long>(rng.below(19)) - 9));
        if (try_split(u)) return;
    }
    throw FactorizationUnavailable("cannot split or certify a rational corner of dimension " +
                                   std::to_string(c.basis.size()));
}

}  // namespace

IdempotentSplit split_idempotents(const MatrixAlgebra& E, std::uint64_t seed) {
    if (!E.contains_identity()) throw InvalidInput("split_idempotents requires a unital algebra");
    Field f = E.field();
    Rng rng(seed);

    IdempotentSplit result;
    result.radical = radical_basis(E);
    QuotientData q = build_quotient(E, result.radical);
    int qdim = q.qdim;
    result.quotient_section = q.section;

    MatrixAlgebra Q = MatrixAlgebra::from_basis(q.qreps);
    if (!Q.contains_identity()) throw InvalidInput("quotient algebra lost its identity");

    auto q_from_coords = [&](const Matrix& coords) {
        Matrix m = Matrix::zero(f, qdim, qdim);
        for (int i = 0; i < qdim; ++i) {
            Scalar c = coords.at(0, i);
            if (!c.is_zero()) m = m + q.qreps[i].scaled(c);
        }
        return m;
    };
    auto section_elt = [&](const Matrix& qmat) {
        Matrix coords = *Q.coords_of(qmat);
        Matrix m = Matrix::zero(f, E.ambient(), E.ambient());
        for (int i = 0; i < qdim; ++i) {
            Scalar c = coords.at(0, i);
            if (!c.is_zero()) m = m + q.section[i].scaled(c);
        }
        return m;
    };

    // Center of Q: rows z with z * (R_i - L_i) = 0 for all i.
    Matrix cond(f, qdim, 0);
    for (int i = 0; i < qdim; ++i) {
        Matrix lmat(f, qdim, qdim);
        for (int j = 0; j < qdim; ++j)
            for (int k = 0; k < qdim; ++k) lmat.set(j, k, q.table[i][j].at(0, k));
        cond = Matrix::hstack(cond, q.qreps[i] - lmat);
    }
    Matrix center_rows = cond.left_kernel();
    std::vector<Matrix> center_basis;
    for (int r = 0; r < center_rows.rows(); ++r) center_basis.push_back(q_from_coords(center_rows.row(r)));

    // Primitive idempotents of the center = primitive central idempotents.
    Matrix q_one = Matrix::identity(f, qdim);
    std::vector<Matrix> central;
    {
        Rng crng = rng.fork(1);
        split_corner(center_basis, q_one, crng, central);
    }

    // Primitive idempotent system inside each central block.
    std::vector<Matrix> prim_q;
    std::vector<int> block_of;
    for (size_t b = 0; b < central.size(); ++b) {
        std::vector<Matrix> prims;
        Rng brng = rng.fork(100 + b);
        split_corner(q.qreps, central[b], brng, prims);
        for (auto& e : prims) {
            prim_q.push_back(e);
            block_of.push_back(static_cast<int>(b));
        }
    }

    // Lift to exact orthogonal idempotents of E: cubic Newton iteration
    // inside successive complements.
    Matrix identity = Matrix::identity(f, E.ambient());
    Matrix complement = identity;
    std::vector<Matrix> lifted;
    int s = static_cast<int>(prim_q.size());
    Scalar three = Scalar::from_int(f, 3), two = Scalar::from_int(f, 2);
    for (int i = 0; i < s - 1; ++i) {
        Matrix u = section_elt(prim_q[i]);
        Matrix v = complement * u * complement;
        int guard = 0;
        while (v * v != v) {
            Matrix v2 = v * v;
            v = v2.scaled(three) - (v2 * v).scaled(two);
            if (++guard > 200) throw InvalidInput("idempotent lifting did not converge");
        }
        lifted.push_back(v);
        complement = complement - v;
    }
    lifted.push_back(complement);
    if (complement * complement != complement) throw InvalidInput("final lifted idempotent is not idempotent");

    // Each lifted idempotent must reduce mod J to its model in Q.
    for (int i = 0; i < s; ++i) {
        Matrix back = q_from_coords(q.project(*E.coords_of(lifted[i])));
        if (back != prim_q[i]) throw InvalidInput("lifted idempotent does not reduce to its model");
    }

    result.primitive_system = lifted;
    result.block_of = block_of;
    for (size_t b = 0; b < central.size(); ++b) {
        Matrix blocksum = Matrix::zero(f, E.ambient(), E.ambient());
        for (int i = 0; i < s; ++i)
            if (block_of[i] == static_cast<int>(b)) blocksum = blocksum + lifted[i];
        result.central_primitives.push_back(blocksum);
    }
    return result;
}

}  // namespace specsupp::exactla
