#pragma once

#include <cstdint>
#include <string>

#include "nilfactor/block_factors.hpp"
#include "nilfactor/lu_similarity.hpp"

namespace nilfactor {

enum class Route { Nilpotent, CaseZeroBlock, CaseJ2, CaseGeneral };

std::string route_name(Route r);

// Recomputed evidence attached to every factorization: the product identity,
// the nilpotency powers and the rank comparison are all re-verified on the
// returned factors, never inferred from the construction.
struct Certificate {
    bool product_ok = false;
    std::size_t nilpotency_index_1 = 0;
    std::size_t nilpotency_index_2 = 0;
    std::size_t rank_a = 0;
    std::size_t rank_n1 = 0;
    std::size_t rank_n2 = 0;
    Route route = Route::Nilpotent;
};

struct Factorization {
    Matrix n1;
    Matrix n2;
    Certificate certificate;
};

// Case pieces: m1 * m2 = basis^{-1} * Dg[A0_canonical, A1] * basis, where
// the canonical nilpotent block depends on the case.
struct CaseFactors {
    Matrix m1;
    Matrix m2;
    Matrix basis;
};

// A0 = 0_m: the lower/upper factors of A1's LU similarity, shifted m rows
// down and m columns right. For m = 1 both factors have rank n - 1.
CaseFactors factor_case_zero_block(std::size_t m, const Matrix& a1,
                                   std::uint64_t seed = kDefaultSeed);

// A0 similar to J_2(0): the bordered pair, straightened by the Roth
// transform built from A1 x = e_k. Canonical nilpotent block: J_2(0).
CaseFactors factor_case_j2(const Matrix& a1, std::uint64_t seed = kDefaultSeed);

// A0 of order >= 3: normal-form factors for the partition on the diagonal,
// the LU factors shifted into the corner, and (only when the right factor's
// last row is e1^T) the rank-one Roth correction. Canonical nilpotent block:
// jordan_matrix(partition).
CaseFactors factor_case_general(const NilpotentPartition& partition, const Matrix& a1,
                                std::uint64_t seed = kDefaultSeed);

// Full pipeline: every singular matrix is a product of two nilpotent
// matrices, except the nonzero nilpotent 2x2 class. Throws NotSingular for
// invertible inputs and ExceptionalCase for that class.
Factorization factor(const Matrix& a, std::uint64_t seed = kDefaultSeed);

}  // namespace nilfactor
