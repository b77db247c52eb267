#pragma once

#include <utility>

#include "nilfactor/canonical.hpp"

namespace nilfactor {

// Nilpotent pair whose product is Dg[J_k(0), J_2(0)]. For odd k both factors
// have rank k, the rank of the product.
std::pair<Matrix, Matrix> factor_jk_j2(std::size_t k, const Field& f);

// Change-of-basis permutations exhibiting the Jordan structure of the two
// factors above (odd k >= 3 only). The columns follow the factors' chain
// orbits, longest chain first; block sizes are pinned by closed formulas and
// the conjugation identity is enforced before returning.
Matrix left_factor_jordan_basis(std::size_t k, const Field& f);
Matrix right_factor_jordan_basis(std::size_t k, const Field& f);

// Expected Jordan block sizes under the two bases.
std::pair<std::size_t, std::size_t> left_factor_jordan_sizes(std::size_t k);
std::pair<std::size_t, std::size_t> right_factor_jordan_sizes(std::size_t k);

enum class RightLastRow { Zero, E1T };

// A factorization similar to a nilpotent Jordan matrix in which the left
// factor has zero first row and zero last column and the right factor's last
// row is either zero or e1^T. These row/column guarantees are what the
// general factorization case needs to keep its coupling block manageable.
struct NormalFormFactorization {
    Matrix left;
    Matrix right;
    RightLastRow right_last_row;
    // Block reordering applied to the canonical descending partition before
    // grouping (a permutation, reported rather than applied silently).
    Matrix reorder;
    // Full similarity T: left * right = T^{-1} * jordan_matrix(partition) * T.
    Matrix similarity;
};

// Normal-form factorization of a single Jordan block J_k(0), k != 2.
// Odd k ends with a zero last row, even k with e1^T.
NormalFormFactorization factor_single_block(std::size_t k, const Field& f);

// Normal-form factorization of Dg[J_2, J_2, J_2].
NormalFormFactorization factor_triple_j2(const Field& f);

// Normal-form factorization for an arbitrary partition with sum != 2.
// Blocks are grouped so that every group has an explicit construction:
// size-2 blocks pair among themselves, a leftover size-2 attaches to the
// largest other block (or forms a triple), and everything else stands alone.
// Partition [2] has no such factorization and raises ExceptionalCase.
NormalFormFactorization factor_nilpotent_normal_form(const NilpotentPartition& partition,
                                                     const Field& f);

}  // namespace nilfactor
