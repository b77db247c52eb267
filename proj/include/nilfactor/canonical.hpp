#pragma once

#include <vector>

#include "nilfactor/matrix.hpp"

namespace nilfactor {

// Multiset of Jordan block sizes of a nilpotent matrix, kept in descending
// order; the sizes sum to the matrix order.
struct NilpotentPartition {
    std::vector<std::size_t> sizes;

    std::size_t sum() const {
        std::size_t s = 0;
        for (std::size_t k : sizes) s += k;
        return s;
    }
    bool operator==(const NilpotentPartition&) const = default;
};

// The nilpotent Jordan matrix of a partition: Dg[J_{s1}(0), J_{s2}(0), ...],
// subdiagonal convention.
Matrix jordan_matrix(const Field& f, const NilpotentPartition& partition);

struct JordanForm {
    Matrix transform;  // invertible S with S^{-1} N S = jordan_matrix(partition)
    NilpotentPartition partition;
};

// Jordan canonical form of a nilpotent matrix. Chains are built top-down
// from the kernel filtration of powers; candidate vectors are taken from the
// reduced-echelon kernel bases in ascending free-column order, which makes
// the output deterministic.
JordanForm nilpotent_jcf(const Matrix& n);

struct FittingSplit {
    Matrix similarity;        // S, columns: basis of N(A^n) then basis of R(A^n)
    Matrix nilpotent_block;   // A0, n0 x n0, nilpotent
    Matrix invertible_block;  // A1, invertible
    std::size_t n0;
};

// Splits any square A as S^{-1} A S = Dg[A0, A1] with A0 nilpotent and A1
// invertible. The exponent is fixed at n, which is always enough.
FittingSplit fitting_split(const Matrix& a);

}  // namespace nilfactor
