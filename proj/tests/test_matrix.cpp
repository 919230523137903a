#include <doctest.h>

#include "specsupp/matrix.hpp"
#include "specsupp/rng.hpp"

using namespace specsupp;
using namespace specsupp::exactla;

namespace {

Field fq() { return Field::prime(1009); }

Matrix random_matrix(Field f, int r, int c, Rng& rng) {
    Matrix m(f, r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.set_int(i, j, static_cast<long long>(rng.below(f.p ? f.p : 19)));
    return m;
}

// Independent rank oracle: the largest k with a nonvanishing k x k minor,
// determinants by cofactor expansion.
Scalar det_cofactor(const Matrix& m) {
    int n = m.rows();
    if (n == 0) return Scalar::one(m.field());
    if (n == 1) return m.at(0, 0);
    Scalar acc = Scalar::zero(m.field());
    std::vector<int> cols;
    for (int j = 1; j < n; ++j) cols.push_back(j);
    for (int i = 0; i < n; ++i) {
        if (m.at(i, 0).is_zero()) continue;
        std::vector<int> rows;
        for (int r = 0; r < n; ++r)
            if (r != i) rows.push_back(r);
        Scalar sub = det_cofactor(m.select_rows(rows).select_cols(cols));
        Scalar term = m.at(i, 0) * sub;
        acc = (i % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

int rank_by_minors(const Matrix& m) {
    int best = 0;
    int n = std::min(m.rows(), m.cols());
    std::vector<int> ridx(m.rows()), cidx(m.cols());
    for (int i = 0; i < m.rows(); ++i) ridx[i] = i;
    for (int j = 0; j < m.cols(); ++j) cidx[j] = j;
    // scan all k x k minors, k up to n (small matrices only)
    std::function<void(int, std::vector<int>&, const std::vector<int>&, int,
                       std::function<void(const std::vector<int>&)>)>
        choose = [&](int k, std::vector<int>& cur, const std::vector<int>& universe, int start,
                     std::function<void(const std::vector<int>&)> fn) {
            if (static_cast<int>(cur.size()) == k) {
                fn(cur);
                return;
            }
            for (int i = start; i < static_cast<int>(universe.size()); ++i) {
                cur.push_back(universe[i]);
                choose(k, cur, universe, i + 1, fn);
                cur.pop_back();
            }
        };
    for (int k = 1; k <= n; ++k) {
        bool found = false;
        std::vector<int> cr;
        choose(k, cr, ridx, 0, [&](const std::vector<int>& rows) {
            if (found) return;
            std::vector<int> cc;
            choose(k, cc, cidx, 0, [&](const std::vector<int>& cols) {
                if (found) return;
                if (!det_cofactor(m.select_rows(rows).select_cols(cols)).is_zero()) found = true;
            });
        });
        if (found)
            best = k;
        else
            break;
    }
    return best;
}

}  // namespace

TEST_CASE("identity and zero ranks") {
    Field f = fq();
    CHECK(Matrix::identity(f, 3).rank() == 3);
    CHECK(Matrix::identity(f, 3).right_kernel().cols() == 0);
    Matrix z(f, 2, 3);
    CHECK(z.rank() == 0);
    CHECK(z.right_kernel().cols() == 3);
}

TEST_CASE("rank matches the minor-expansion oracle on random 5x5 matrices") {
    Field f = fq();
    Rng rng(42);
    for (int t = 0; t < 8; ++t) {
        Matrix m = random_matrix(f, 5, 5, rng);
        if (t % 2 == 0) {
            // force rank deficiency: last row = sum of first two
            for (int j = 0; j < 5; ++j) m.set(4, j, m.at(0, j) + m.at(1, j));
        }
        CHECK(m.rank() == rank_by_minors(m));
    }
}

TEST_CASE("kernel and solve are exact") {
    Field f = fq();
    Rng rng(7);
    for (int t = 0; t < 10; ++t) {
        Matrix m = random_matrix(f, 4, 6, rng);
        Matrix k = m.right_kernel();
        CHECK((m * k).is_zero());
        CHECK(m.rank() + k.cols() == m.cols());
        // consistent system
        Matrix x = random_matrix(f, 6, 1, rng);
        Matrix b = m * x;
        auto sol = m.solve(b);
        REQUIRE(sol.has_value());
        CHECK(m * *sol == b);
    }
}

TEST_CASE("rational arithmetic stays exact") {
    Field f = Field::rationals();
    Matrix m(f, 2, 2);
    m.set(0, 0, Scalar(f, Rational(1, 3)));
    m.set(0, 1, Scalar(f, Rational(2, 7)));
    m.set(1, 0, Scalar(f, Rational(-5, 2)));
    m.set(1, 1, Scalar(f, Rational(4, 9)));
    Matrix inv = m.inverse();
    CHECK(m * inv == Matrix::identity(f, 2));
    CHECK(inv * m == Matrix::identity(f, 2));
}

TEST_CASE("mixed fields are rejected") {
    Matrix a(Field::prime(5), 1, 1), b(Field::prime(7), 1, 1);
    CHECK_THROWS_AS(a * b, FieldMismatch);
}

TEST_CASE("row span operations") {
    Field f = fq();
    Matrix rows = Matrix::from_int_rows(f, {{1, 0, 1}, {0, 1, 1}});
    RowSpan s(rows);
    CHECK(s.dim() == 2);
    CHECK(s.contains_row(Matrix::from_int_rows(f, {{1, 1, 2}})));
    CHECK_FALSE(s.contains_row(Matrix::from_int_rows(f, {{1, 0, 0}})));
    RowSpan t(Matrix::from_int_rows(f, {{1, 0, 0}, {0, 0, 1}}));
    RowSpan meet = s.intersect(t);
    CHECK(meet.dim() == 1);  // spans intersect in <(1,0,1)>
    CHECK(meet.contains_row(Matrix::from_int_rows(f, {{1, 0, 1}})));
    CHECK(s.sum(t).dim() == 3);
}

TEST_CASE("complete_to_basis produces an inverse pair") {
    Field f = fq();
    Matrix rows = Matrix::from_int_rows(f, {{0, 1, 2, 3}, {1, 1, 0, 0}});
    auto [t, tinv] = complete_to_basis(rows, 4);
    CHECK(t * tinv == Matrix::identity(f, 4));
    for (int j = 0; j < 4; ++j) {
        CHECK(t.at(0, j) == rows.at(0, j));
        CHECK(t.at(1, j) == rows.at(1, j));
    }
}
