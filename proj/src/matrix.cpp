#include "specsupp/matrix.hpp"

#include <algorithm>
#include <cstring>

namespace specsupp::exactla {

namespace {

struct FpCtx {
    std::uint64_t p;
    using T = std::uint64_t;
    T zero() const { return 0; }
    T one() const { return 1 % p; }
    T add(T a, T b) const { return fp::add(a, b, p); }
    T sub(T a, T b) const { return fp::sub(a, b, p); }
    T mul(T a, T b) const { return fp::mul(a, b, p); }
    T neg(T a) const { return fp::neg(a, p); }
    T inv(T a) const { return fp::inv(a, p); }
    bool is_zero(T a) const { return a == 0; }
};

struct RatCtx {
    using T = Rational;
    T zero() const { return Rational(0); }
    T one() const { return Rational(1); }
    T add(const T& a, const T& b) const { return a + b; }
    T sub(const T& a, const T& b) const { return a - b; }
    T mul(const T& a, const T& b) const { return a * b; }
    T neg(const T& a) const { return -a; }
    T inv(const T& a) const { return 1 / a; }
    bool is_zero(const T& a) const { return a.is_zero(); }
};

// In-place reduced row echelon form; returns pivot columns.
template <typename Ctx>
std::vector<int> rref_inplace(const Ctx& cx, std::vector<typename Ctx::T>& a, int rows, int cols) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i) {
            if (!cx.is_zero(a[i * cols + c])) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
        auto s = cx.inv(a[r * cols + c]);
        for (int j = c; j < cols; ++j) a[r * cols + j] = cx.mul(a[r * cols + j], s);
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            auto f = a[i * cols + c];
            if (cx.is_zero(f)) continue;
            for (int j = c; j < cols; ++j)
                a[i * cols + j] = cx.sub(a[i * cols + j], cx.mul(f, a[r * cols + j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <typename Ctx>
std::vector<typename Ctx::T> mat_mul(const Ctx& cx, const std::vector<typename Ctx::T>& a,
                                     const std::vector<typename Ctx::T>& b, int n, int m, int k) {
    std::vector<typename Ctx::T> c(static_cast<size_t>(n) * k, cx.zero());
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < m; ++t) {
            const auto& av = a[i * m + t];
            if (cx.is_zero(av)) continue;
            for (int j = 0; j < k; ++j)
                c[i * k + j] = cx.add(c[i * k + j], cx.mul(av, b[t * k + j]));
        }
    return c;
}

}  // namespace

struct MatrixKernels {
    template <typename F>
    static auto dispatch(const Matrix& m, F&& f) {
        if (!m.field_.is_rational()) return f(FpCtx{m.field_.p}, m.fpv_);
        return f(RatCtx{}, m.rat_);
    }
};

Matrix::Matrix(Field f, int rows, int cols) : field_(f), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw InvalidInput("negative matrix dimension");
    if (fp())
        fpv_.assign(static_cast<size_t>(rows) * cols, 0);
    else
        rat_.assign(static_cast<size_t>(rows) * cols, Rational(0));
}

Matrix Matrix::identity(Field f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.set_int(i, i, 1);
    return m;
}

Matrix Matrix::from_int_rows(Field f, const std::vector<std::vector<long long>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    Matrix m(f, r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw InvalidInput("ragged matrix literal");
        for (int j = 0; j < c; ++j) m.set_int(i, j, rows[i][j]);
    }
    return m;
}

Scalar Matrix::at(int i, int j) const {
    size_t ix = static_cast<size_t>(i) * cols_ + j;
    return fp() ? Scalar(field_, fpv_[ix]) : Scalar(field_, rat_[ix]);
}

void Matrix::set(int i, int j, const Scalar& v) {
    if (!(v.field() == field_)) throw FieldMismatch("matrix entry field");
    size_t ix = static_cast<size_t>(i) * cols_ + j;
    if (fp())
        fpv_[ix] = v.residue();
    else
        rat_[ix] = v.rational();
}

void Matrix::set_int(int i, int j, long long v) {
    size_t ix = static_cast<size_t>(i) * cols_ + j;
    if (fp())
        fpv_[ix] = fp::reduce_int(v, field_.p);
    else
        rat_[ix] = Rational(v);
}

void Matrix::check_same_field(const Matrix& o) const {
    if (!(field_ == o.field_))
        throw FieldMismatch("matrices over " + field_.describe() + " and " + o.field_.describe());
}

Matrix Matrix::operator+(const Matrix& o) const {
    check_same_field(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidInput("matrix shape mismatch in +");
    Matrix r(field_, rows_, cols_);
    if (fp()) {
        for (size_t i = 0; i < fpv_.size(); ++i) r.fpv_[i] = fp::add(fpv_[i], o.fpv_[i], field_.p);
    } else {
        for (size_t i = 0; i < rat_.size(); ++i) r.rat_[i] = rat_[i] + o.rat_[i];
    }
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    check_same_field(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidInput("matrix shape mismatch in -");
    Matrix r(field_, rows_, cols_);
    if (fp()) {
        for (size_t i = 0; i < fpv_.size(); ++i) r.fpv_[i] = fp::sub(fpv_[i], o.fpv_[i], field_.p);
    } else {
        for (size_t i = 0; i < rat_.size(); ++i) r.rat_[i] = rat_[i] - o.rat_[i];
    }
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    check_same_field(o);
    if (cols_ != o.rows_) throw InvalidInput("matrix shape mismatch in *");
    Matrix r(field_, rows_, o.cols_);
    if (fp())
        r.fpv_ = mat_mul(FpCtx{field_.p}, fpv_, o.fpv_, rows_, cols_, o.cols_);
    else
        r.rat_ = mat_mul(RatCtx{}, rat_, o.rat_, rows_, cols_, o.cols_);
    return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
    if (!(c.field() == field_)) throw FieldMismatch("scale factor field");
    Matrix r(field_, rows_, cols_);
    if (fp()) {
        for (size_t i = 0; i < fpv_.size(); ++i) r.fpv_[i] = fp::mul(fpv_[i], c.residue(), field_.p);
    } else {
        for (size_t i = 0; i < rat_.size(); ++i) r.rat_[i] = rat_[i] * c.rational();
    }
    return r;
}

Matrix Matrix::operator-() const { return scaled(-Scalar::one(field_)); }

bool Matrix::operator==(const Matrix& o) const {
    if (!(field_ == o.field_) || rows_ != o.rows_ || cols_ != o.cols_) return false;
    return fp() ? fpv_ == o.fpv_ : rat_ == o.rat_;
}

Matrix Matrix::transpose() const {
    Matrix r(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            size_t from = static_cast<size_t>(i) * cols_ + j;
            size_t to = static_cast<size_t>(j) * rows_ + i;
            if (fp())
                r.fpv_[to] = fpv_[from];
            else
                r.rat_[to] = rat_[from];
        }
    return r;
}

Matrix Matrix::pow(std::uint64_t e) const {
    if (!is_square()) throw InvalidInput("pow of non-square matrix");
    Matrix acc = Matrix::identity(field_, rows_);
    Matrix base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Scalar Matrix::trace() const {
    Scalar t = Scalar::zero(field_);
    for (int i = 0; i < std::min(rows_, cols_); ++i) t = t + at(i, i);
    return t;
}

bool Matrix::is_zero() const {
    if (fp()) {
        for (auto v : fpv_)
            if (v) return false;
        return true;
    }
    for (const auto& v : rat_)
        if (!v.is_zero()) return false;
    return true;
}

Matrix Matrix::row(int i) const { return select_rows({i}); }

Matrix Matrix::select_rows(const std::vector<int>& idx) const {
    Matrix r(field_, static_cast<int>(idx.size()), cols_);
    for (size_t k = 0; k < idx.size(); ++k)
        for (int j = 0; j < cols_; ++j) r.set(static_cast<int>(k), j, at(idx[k], j));
    return r;
}

Matrix Matrix::select_cols(const std::vector<int>& idx) const {
    Matrix r(field_, rows_, static_cast<int>(idx.size()));
    for (int i = 0; i < rows_; ++i)
        for (size_t k = 0; k < idx.size(); ++k) r.set(i, static_cast<int>(k), at(i, idx[k]));
    return r;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
    a.check_same_field(b);
    if (a.cols_ != b.cols_) throw InvalidInput("vstack width mismatch");
    Matrix r(a.field_, a.rows_ + b.rows_, a.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) r.set(i, j, a.at(i, j));
    for (int i = 0; i < b.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j) r.set(a.rows_ + i, j, b.at(i, j));
    return r;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
    a.check_same_field(b);
    if (a.rows_ != b.rows_) throw InvalidInput("hstack height mismatch");
    Matrix r(a.field_, a.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int j = 0; j < a.cols_; ++j) r.set(i, j, a.at(i, j));
        for (int j = 0; j < b.cols_; ++j) r.set(i, a.cols_ + j, b.at(i, j));
    }
    return r;
}

Matrix Matrix::block_diag(const Matrix& a, const Matrix& b) {
    a.check_same_field(b);
    Matrix r(a.field_, a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) r.set(i, j, a.at(i, j));
    for (int i = 0; i < b.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j) r.set(a.rows_ + i, a.cols_ + j, b.at(i, j));
    return r;
}

int Matrix::rank() const { return rref().rank; }

Matrix::Rref Matrix::rref() const {
    Rref out;
    out.reduced = *this;
    if (fp())
        out.pivots = rref_inplace(FpCtx{field_.p}, out.reduced.fpv_, rows_, cols_);
    else
        out.pivots = rref_inplace(RatCtx{}, out.reduced.rat_, rows_, cols_);
    out.rank = static_cast<int>(out.pivots.size());
    return out;
}

Matrix Matrix::right_kernel() const {
    auto rr = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : rr.pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix k(field_, cols_, static_cast<int>(free_cols.size()));
    for (size_t t = 0; t < free_cols.size(); ++t) {
        int fc = free_cols[t];
        k.set_int(fc, static_cast<int>(t), 1);
        for (int r = 0; r < rr.rank; ++r)
            k.set(rr.pivots[r], static_cast<int>(t), -rr.reduced.at(r, fc));
    }
    return k;
}

Matrix Matrix::left_kernel() const { return transpose().right_kernel().transpose(); }

Matrix Matrix::row_space_basis() const {
    auto rr = rref();
    std::vector<int> keep;
    for (int i = 0; i < rr.rank; ++i) keep.push_back(i);
    return rr.reduced.select_rows(keep);
}

std::optional<Matrix> Matrix::solve(const Matrix& b) const {
    check_same_field(b);
    if (b.rows() != rows_) throw InvalidInput("solve: rhs height mismatch");
    Matrix aug = hstack(*this, b);
    auto rr = aug.rref();
    // Inconsistent iff a pivot lands in the rhs block.
    for (int c : rr.pivots)
        if (c >= cols_) return std::nullopt;
    Matrix x(field_, cols_, b.cols());
    for (int r = 0; r < rr.rank; ++r) {
        int pc = rr.pivots[r];
        for (int j = 0; j < b.cols(); ++j) x.set(pc, j, rr.reduced.at(r, cols_ + j));
    }
    return x;
}

std::optional<Matrix> Matrix::try_inverse() const {
    if (!is_square()) return std::nullopt;
    Matrix aug = hstack(*this, identity(field_, rows_));
    auto rr = aug.rref();
    if (rr.rank < rows_) return std::nullopt;
    for (int i = 0; i < rows_; ++i)
        if (rr.pivots[i] != i) return std::nullopt;
    std::vector<int> idx;
    for (int j = 0; j < cols_; ++j) idx.push_back(cols_ + j);
    return rr.reduced.select_cols(idx);
}

Matrix Matrix::inverse() const {
    auto inv = try_inverse();
    if (!inv) throw InvalidInput("matrix not invertible");
    return *inv;
}

std::string Matrix::byte_key() const {
    std::string s;
    s.reserve(16 + static_cast<size_t>(rows_) * cols_ * 8);
    s += std::to_string(rows_) + "x" + std::to_string(cols_) + "@" + field_.describe() + ":";
    if (fp()) {
        for (auto v : fpv_) {
            char buf[8];
            std::memcpy(buf, &v, 8);
            s.append(buf, 8);
        }
    } else {
        for (const auto& v : rat_) s += v.str() + ",";
    }
    return s;
}

RowSpan::RowSpan(Field f, int dim) : basis_(f, 0, dim) {}

RowSpan::RowSpan(const Matrix& rows) : basis_(rows.row_space_basis()) {}

bool RowSpan::contains_row(const Matrix& v) const {
    if (v.is_zero()) return true;
    if (dim() == 0) return false;
    return Matrix::vstack(basis_, v).rank() == dim();
}

bool RowSpan::contains(const RowSpan& other) const {
    if (other.dim() == 0) return true;
    return Matrix::vstack(basis_, other.basis_).rank() == dim();
}

bool RowSpan::add_row(const Matrix& v) {
    if (contains_row(v)) return false;
    basis_ = Matrix::vstack(basis_, v).row_space_basis();
    return true;
}

RowSpan RowSpan::sum(const RowSpan& other) const {
    if (other.dim() == 0) return *this;
    if (dim() == 0) return other;
    return RowSpan(Matrix::vstack(basis_, other.basis_));
}

RowSpan RowSpan::intersect(const RowSpan& other) const {
    if (dim() == 0 || other.dim() == 0) return RowSpan(field(), ambient());
    // Rows (u | v) of the left kernel of [A; B] satisfy uA = -vB.
    Matrix stacked = Matrix::vstack(basis_, other.basis_);
    Matrix lk = stacked.left_kernel();  // (k x (dimA + dimB))
    if (lk.rows() == 0) return RowSpan(field(), ambient());
    std::vector<int> first;
    for (int j = 0; j < dim(); ++j) first.push_back(j);
    Matrix combos = lk.select_cols(first) * basis_;
    return RowSpan(combos);
}

std::pair<Matrix, Matrix> complete_to_basis(const Matrix& rows, int ambient) {
    Field f = rows.field();
    auto rr = rows.rref();
    if (rr.rank != rows.rows()) throw InvalidInput("complete_to_basis: rows not independent");
    std::vector<bool> is_pivot(ambient, false);
    for (int c : rr.pivots) is_pivot[c] = true;
    Matrix t = rows;
    for (int c = 0; c < ambient; ++c) {
        if (is_pivot[c]) continue;
        Matrix unit(f, 1, ambient);
        unit.set_int(0, c, 1);
        t = Matrix::vstack(t, unit);
    }
    Matrix tinv = t.inverse();
    return {t, tinv};
}

}  // namespace specsupp::exactla
