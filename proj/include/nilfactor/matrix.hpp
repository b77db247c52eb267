#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "nilfactor/field.hpp"

namespace nilfactor {

class Matrix;

// A column vector over a fixed field.
class Vector {
  public:
    Vector(const Field& f, std::size_t dim) : field_(f), e_(dim, Scalar::zero(f)) {}

    static Vector zero(const Field& f, std::size_t dim) { return Vector(f, dim); }
    static Vector unit(const Field& f, std::size_t dim, std::size_t i);

    const Field& field() const { return field_; }
    std::size_t dim() const { return e_.size(); }

    const Scalar& operator[](std::size_t i) const { return e_[i]; }
    Scalar& operator[](std::size_t i) { return e_[i]; }

    bool is_zero() const;
    Vector operator+(const Vector& o) const;
    Vector operator-(const Vector& o) const;
    Vector scaled(const Scalar& c) const;
    bool operator==(const Vector& o) const;
    bool operator!=(const Vector& o) const { return !(*this == o); }

    Matrix as_column() const;

  private:
    Field field_;
    std::vector<Scalar> e_;
};

// Dense exact matrix. Equality is exact entrywise equality; every operation
// either returns an exact result or throws.
class Matrix {
  public:
    Matrix(const Field& f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f)) {}

    static Matrix zero(const Field& f, std::size_t rows, std::size_t cols) {
        return Matrix(f, rows, cols);
    }
    static Matrix identity(const Field& f, std::size_t n);
    // Single 1 at (i, j), 0-based.
    static Matrix unit(const Field& f, std::size_t n, std::size_t i, std::size_t j);
    // Nilpotent Jordan block of order k: ones on the subdiagonal.
    static Matrix jordan_block(const Field& f, std::size_t k);
    // Integer literal grid, row-major (test and construction convenience).
    static Matrix from_ints(const Field& f, std::initializer_list<std::initializer_list<long long>> rows);
    static Matrix from_columns(const Field& f, std::size_t dim, const std::vector<Vector>& cols);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;

    const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, const Scalar& v);

    Vector column(std::size_t c) const;
    Vector row(std::size_t r) const;

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Vector operator*(const Vector& v) const;
    Matrix scaled(const Scalar& c) const;
    Matrix operator-() const { return scaled(-Scalar::one(field_)); }
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const;
    Matrix power(std::size_t e) const;

    // Exact Gaussian elimination toolkit. Pivot choice is deterministic:
    // first nonzero entry in column order, no magnitude heuristics.
    std::size_t rank() const;
    Scalar determinant() const;
    // Reduced-echelon parameterization of the null space, one vector per
    // free column in ascending column order.
    std::vector<Vector> kernel_basis() const;
    // Some x with Ax = b, or nullopt when the system is inconsistent.
    std::optional<Vector> solve(const Vector& b) const;
    Matrix inverse() const;
    // Q^{-1} * A * Q.
    Matrix conjugate(const Matrix& q) const;
    bool is_invertible() const { return is_square() && rank() == rows_; }

    // True iff A^n = 0; decided by repeated squaring to an exponent >= n.
    bool is_nilpotent() const;
    // Minimal e with A^e = 0 (throws NotNilpotent otherwise).
    std::size_t nilpotency_index() const;

    // Block tools.
    static Matrix block_diag(const std::vector<Matrix>& blocks);
    static Matrix block_assemble(const std::vector<std::vector<Matrix>>& grid);
    Matrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& m);

    std::string str() const;

  private:
    Scalar& entry(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

    Field field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

}  // namespace nilfactor
