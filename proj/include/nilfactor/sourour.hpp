#pragma once

#include "nilfactor/matrix.hpp"

namespace nilfactor {

// Bordered similarity form of a non-square-zero matrix:
//   S^{-1} A S = [[lambda, c^T], [b, D]]
// with rank(D) = rank(A) - 1, b in the column space of D and c in the column
// space of D^T.
struct SourourForm {
    Matrix similarity;
    Scalar lambda;
    Vector b;
    Vector c;
    Matrix d;
};

// Picks x0 such that x0 and A*x0 stay independent modulo N(A) (which implies
// {x0, A x0} independent and A^2 x0 != 0). Scans standard basis vectors in
// index order, then pairwise sums e_i + e_j; deterministic.
// Throws SquareZero when A^2 = 0, ScalarMatrix when A is scalar, and
// QuotientScalar when A acts as a scalar on F^n / N(A) (A^2 = mu*A), in
// which case no such x0 exists.
Vector choose_x0(const Matrix& a);

struct BorderingBasis {
    Matrix basis;  // columns: x1, x1 - x0, kernel basis of A, completion
    Vector x0;
    Vector x1;
    std::size_t kernel_dim;
};

// Basis {x1, x1-x0, n_1..n_k, u_1..}; the construction keeps x0 outside the
// span of the columns after the first, which is what forces the rank drop.
BorderingBasis build_bordering_basis(const Matrix& a, const Vector& x0);

// The projection along span{x1} onto the span of the remaining basis
// columns, in the original coordinates.
Matrix bordering_projection(const BorderingBasis& basis);

SourourForm sourour_form(const Matrix& a);

}  // namespace nilfactor
