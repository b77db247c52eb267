#pragma once

#include <optional>

#include "nilfactor/matrix.hpp"
#include "nilfactor/random.hpp"

namespace nilfactor {

// S^{-1} A S = L * U with L lower triangular, U upper triangular, both
// invertible. Crout normalization: U has unit diagonal, so L carries the
// pivots. Such a factorization without row exchanges exists exactly when
// every leading principal minor of S^{-1} A S is nonzero.
struct LuSimilarity {
    Matrix similarity;
    Matrix lower;
    Matrix upper;
};

// Crout elimination without pivoting; nullopt when a leading minor vanishes.
std::optional<std::pair<Matrix, Matrix>> crout_lu(const Matrix& a);

// Finds an LU similarity for an invertible matrix. Candidates are tried in a
// deterministic order (identity, a ladder of single elementary similarity
// transforms, then seeded random invertible conjugations) and every candidate
// is certified by exact elimination and multiplication before acceptance, so
// the search can only be slow, never wrong.
LuSimilarity lu_similarity(const Matrix& a1, std::uint64_t seed = kDefaultSeed);

}  // namespace nilfactor
