#pragma once

#include <optional>

#include "nilfactor/matrix.hpp"

namespace nilfactor {

// Exact solver for X*A0 - A1*X = B with X unknown (A0 is n0 x n0, A1 is
// k x k, B and X are k x n0). Solves the flattened linear system; exists as
// an independent oracle for the structured solutions below.
std::optional<Matrix> solve_sylvester_generic(const Matrix& a0, const Matrix& a1,
                                              const Matrix& b);

// Structured solution for the 2x2 nilpotent case: X = [0 | x] with
// A1 x = e_k, so that X * [[0,1],[0,0]] - A1 * X = -E_(k,2).
Matrix solve_roth_j2case(const Matrix& a1);

// Structured solution for the general case: the k x n0 matrix with -1/u11
// in entry (1,1). Kills any A0 whose first row is zero, and -A1*X matches
// the coupling block arising from a right factor whose last row is e1^T.
Matrix solve_roth_e11case(const Scalar& u11, std::size_t k, std::size_t n0);

// The conjugating block matrix [[I, 0],[X, I]].
Matrix roth_transform(const Matrix& x, std::size_t n0, std::size_t k);

}  // namespace nilfactor
