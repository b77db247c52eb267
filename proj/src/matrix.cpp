#include "nilfactor/matrix.hpp"

#include <sstream>

namespace nilfactor {

namespace {

struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivot_cols;
};

// Denominator-cleared copy of a rational matrix: m = ints / scale.
struct ScaledInts {
    std::vector<Integer> ints;
    Integer scale;
};

ScaledInts clear_denominators(const Matrix& m) {
    ScaledInts out;
    out.scale = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Integer den = denominator(m.at(i, j).rat());
            out.scale = out.scale / gcd(out.scale, den) * den;
        }
    out.ints.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& q = m.at(i, j).rat();
            out.ints.push_back(numerator(q) * (out.scale / denominator(q)));
        }
    return out;
}

std::vector<Integer> int_product(const std::vector<Integer>& a, const std::vector<Integer>& b,
                                 std::size_t n) {
    std::vector<Integer> c(n * n, Integer(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < n; ++t) {
            const Integer& x = a[i * n + t];
            if (x == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (b[t * n + j] == 0) continue;
                c[i * n + j] += x * b[t * n + j];
            }
        }
    return c;
}

bool all_zero(const std::vector<Integer>& v) {
    for (const Integer& x : v)
        if (x != 0) return false;
    return true;
}

// Full reduced row echelon form, exact arithmetic, first-nonzero pivoting.
Echelon rref(Matrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m.at(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r) {
            for (std::size_t j = 0; j < cols; ++j) {
                Scalar tmp = m.at(r, j);
                m.set(r, j, m.at(p, j));
                m.set(p, j, tmp);
            }
        }
        const Scalar piv_inv = m.at(r, c).inv();
        for (std::size_t j = c; j < cols; ++j) m.set(r, j, m.at(r, j) * piv_inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            const Scalar f = m.at(i, c);
            for (std::size_t j = c; j < cols; ++j)
                m.set(i, j, m.at(i, j) - f * m.at(r, j));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

}  // namespace

Vector Vector::unit(const Field& f, std::size_t dim, std::size_t i) {
    Vector v(f, dim);
    v[i] = Scalar::one(f);
    return v;
}

bool Vector::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

Vector Vector::operator+(const Vector& o) const {
    if (dim() != o.dim()) throw DimensionMismatch("vector add");
    Vector r(field_, dim());
    for (std::size_t i = 0; i < dim(); ++i) r[i] = e_[i] + o.e_[i];
    return r;
}

Vector Vector::operator-(const Vector& o) const {
    if (dim() != o.dim()) throw DimensionMismatch("vector sub");
    Vector r(field_, dim());
    for (std::size_t i = 0; i < dim(); ++i) r[i] = e_[i] - o.e_[i];
    return r;
}

Vector Vector::scaled(const Scalar& c) const {
    Vector r(field_, dim());
    for (std::size_t i = 0; i < dim(); ++i) r[i] = e_[i] * c;
    return r;
}

bool Vector::operator==(const Vector& o) const {
    if (!(field_ == o.field_) || dim() != o.dim()) return false;
    for (std::size_t i = 0; i < dim(); ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

Matrix Vector::as_column() const {
    Matrix m(field_, dim(), 1);
    for (std::size_t i = 0; i < dim(); ++i) m.set(i, 0, e_[i]);
    return m;
}

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(f));
    return m;
}

Matrix Matrix::unit(const Field& f, std::size_t n, std::size_t i, std::size_t j) {
    Matrix m(f, n, n);
    m.set(i, j, Scalar::one(f));
    return m;
}

Matrix Matrix::jordan_block(const Field& f, std::size_t k) {
    Matrix m(f, k, k);
    for (std::size_t i = 0; i + 1 < k; ++i) m.set(i + 1, i, Scalar::one(f));
    return m;
}

Matrix Matrix::from_ints(const Field& f,
                         std::initializer_list<std::initializer_list<long long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(f, r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw DimensionMismatch("ragged literal grid");
        std::size_t j = 0;
        for (long long v : row) m.set(i, j++, Scalar::from_int(f, v));
        ++i;
    }
    return m;
}

Matrix Matrix::from_columns(const Field& f, std::size_t dim, const std::vector<Vector>& cols) {
    Matrix m(f, dim, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].dim() != dim) throw DimensionMismatch("column height");
        for (std::size_t i = 0; i < dim; ++i) m.set(i, j, cols[j][i]);
    }
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v) {
    if (!(v.field() == field_)) throw FieldMismatch("entry field differs from matrix field");
    a_[r * cols_ + c] = v;
}

Vector Matrix::column(std::size_t c) const {
    Vector v(field_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, c);
    return v;
}

Vector Matrix::row(std::size_t r) const {
    Vector v(field_, cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(r, j);
    return v;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix add");
    Matrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sub");
    Matrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (!(field_ == o.field_)) throw FieldMismatch("matrix product");
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product");
    Matrix r(field_, rows_, o.cols_);
    if (field_.is_rationals()) {
        // Clear denominators once instead of normalizing every partial sum.
        const ScaledInts a = clear_denominators(*this);
        const ScaledInts b = clear_denominators(o);
        const Integer scale = a.scale * b.scale;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < o.cols_; ++j) {
                Integer sum = 0;
                for (std::size_t t = 0; t < cols_; ++t) {
                    const Integer& x = a.ints[i * cols_ + t];
                    if (x != 0 && b.ints[t * o.cols_ + j] != 0)
                        sum += x * b.ints[t * o.cols_ + j];
                }
                if (sum != 0) r.entry(i, j) = Scalar::rational(Rational(sum, scale));
            }
        return r;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t t = 0; t < cols_; ++t) {
            const Scalar& x = at(i, t);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                if (o.at(t, j).is_zero()) continue;
                r.entry(i, j) += x * o.at(t, j);
            }
        }
    }
    return r;
}

Vector Matrix::operator*(const Vector& v) const {
    if (cols_ != v.dim()) throw DimensionMismatch("matrix-vector product");
    Vector r(field_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    if (!(field_ == o.field_) || rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

Matrix Matrix::power(std::size_t e) const {
    if (!is_square()) throw DimensionMismatch("power of a non-square matrix");
    Matrix acc = identity(field_, rows_);
    Matrix base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

std::size_t Matrix::rank() const {
    return rref(*this).pivot_cols.size();
}

Scalar Matrix::determinant() const {
    if (!is_square()) throw DimensionMismatch("determinant of a non-square matrix");
    Matrix m = *this;
    Scalar det = Scalar::one(field_);
    for (std::size_t c = 0; c < cols_; ++c) {
        std::size_t p = c;
        while (p < rows_ && m.at(p, c).is_zero()) ++p;
        if (p == rows_) return Scalar::zero(field_);
        if (p != c) {
            for (std::size_t j = 0; j < cols_; ++j) {
                Scalar tmp = m.at(c, j);
                m.set(c, j, m.at(p, j));
                m.set(p, j, tmp);
            }
            det = -det;
        }
        det *= m.at(c, c);
        const Scalar piv_inv = m.at(c, c).inv();
        for (std::size_t i = c + 1; i < rows_; ++i) {
            if (m.at(i, c).is_zero()) continue;
            const Scalar f = m.at(i, c) * piv_inv;
            for (std::size_t j = c; j < cols_; ++j)
                m.set(i, j, m.at(i, j) - f * m.at(c, j));
        }
    }
    return det;
}

std::vector<Vector> Matrix::kernel_basis() const {
    const Echelon e = rref(*this);
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        Vector v(field_, cols_);
        v[free] = Scalar::one(field_);
        for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
            v[e.pivot_cols[r]] = -e.reduced.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> Matrix::solve(const Vector& b) const {
    if (b.dim() != rows_) throw DimensionMismatch("solve rhs");
    Matrix aug(field_, rows_, cols_ + 1);
    aug.set_block(0, 0, *this);
    for (std::size_t i = 0; i < rows_; ++i) aug.set(i, cols_, b[i]);
    const Echelon e = rref(aug);
    for (std::size_t c : e.pivot_cols)
        if (c == cols_) return std::nullopt;
    Vector x(field_, cols_);
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
        x[e.pivot_cols[r]] = e.reduced.at(r, cols_);
    return x;
}

Matrix Matrix::inverse() const {
    if (!is_square()) throw DimensionMismatch("inverse of a non-square matrix");
    Matrix aug(field_, rows_, 2 * cols_);
    aug.set_block(0, 0, *this);
    aug.set_block(0, cols_, identity(field_, rows_));
    const Echelon e = rref(aug);
    if (e.pivot_cols.size() < rows_ || (rows_ > 0 && e.pivot_cols[rows_ - 1] != rows_ - 1))
        throw SingularMatrix("matrix has no inverse");
    return e.reduced.block(0, cols_, rows_, cols_);
}

Matrix Matrix::conjugate(const Matrix& q) const {
    if (!is_square() || !q.is_square() || rows_ != q.rows_)
        throw DimensionMismatch("conjugation sizes");
    return q.inverse() * (*this) * q;
}

bool Matrix::is_nilpotent() const {
    if (!is_square()) throw DimensionMismatch("nilpotency of a non-square matrix");
    if (rows_ == 0) return true;
    if (field_.is_rationals()) {
        // Scaling by the denominator lcm preserves nilpotency; integer
        // squaring avoids per-entry normalization.
        std::vector<Integer> b = clear_denominators(*this).ints;
        std::size_t e = 1;
        while (e < rows_) {
            b = int_product(b, b, rows_);
            e *= 2;
        }
        return all_zero(b);
    }
    Matrix b = *this;
    std::size_t e = 1;
    while (e < rows_) {
        b = b * b;
        e *= 2;
    }
    return b.is_zero();
}

std::size_t Matrix::nilpotency_index() const {
    if (!is_nilpotent()) throw NotNilpotent("matrix is not nilpotent");
    if (is_zero()) return rows_ == 0 ? 0 : 1;
    if (field_.is_rationals()) {
        const std::vector<Integer> base = clear_denominators(*this).ints;
        std::vector<Integer> b = base;
        std::size_t e = 1;
        while (!all_zero(b)) {
            b = int_product(b, base, rows_);
            ++e;
        }
        return e;
    }
    Matrix b = *this;
    std::size_t e = 1;
    while (!b.is_zero()) {
        b = b * (*this);
        ++e;
    }
    return e;
}

Matrix Matrix::block_diag(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) throw DimensionMismatch("block_diag of nothing");
    const Field f = blocks.front().field();
    std::size_t rows = 0, cols = 0;
    for (const auto& b : blocks) {
        if (!(b.field() == f)) throw FieldMismatch("block_diag fields differ");
        rows += b.rows();
        cols += b.cols();
    }
    Matrix m(f, rows, cols);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        m.set_block(r0, c0, b);
        r0 += b.rows();
        c0 += b.cols();
    }
    return m;
}

Matrix Matrix::block_assemble(const std::vector<std::vector<Matrix>>& grid) {
    if (grid.empty() || grid.front().empty()) throw DimensionMismatch("empty block grid");
    const Field f = grid.front().front().field();
    std::vector<std::size_t> row_h(grid.size(), 0), col_w(grid.front().size(), 0);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i].size() != col_w.size()) throw DimensionMismatch("ragged block grid");
        for (std::size_t j = 0; j < grid[i].size(); ++j) {
            if (row_h[i] == 0) row_h[i] = grid[i][j].rows();
            if (col_w[j] == 0) col_w[j] = grid[i][j].cols();
            if (grid[i][j].rows() != row_h[i] || grid[i][j].cols() != col_w[j])
                throw DimensionMismatch("incompatible block sizes");
        }
    }
    std::size_t rows = 0, cols = 0;
    for (std::size_t h : row_h) rows += h;
    for (std::size_t w : col_w) cols += w;
    Matrix m(f, rows, cols);
    std::size_t r0 = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        std::size_t c0 = 0;
        for (std::size_t j = 0; j < grid[i].size(); ++j) {
            m.set_block(r0, c0, grid[i][j]);
            c0 += col_w[j];
        }
        r0 += row_h[i];
    }
    return m;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
    if (r0 + rows > rows_ || c0 + cols > cols_) throw DimensionMismatch("block out of range");
    Matrix m(field_, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, at(r0 + i, c0 + j));
    return m;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
    if (!(m.field() == field_)) throw FieldMismatch("set_block fields differ");
    if (r0 + m.rows() > rows_ || c0 + m.cols() > cols_)
        throw DimensionMismatch("set_block out of range");
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) entry(r0 + i, c0 + j) = m.at(i, j);
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << at(i, j).str();
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace nilfactor
