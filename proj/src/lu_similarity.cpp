#include "nilfactor/lu_similarity.hpp"

namespace nilfactor {

std::optional<std::pair<Matrix, Matrix>> crout_lu(const Matrix& a) {
    if (!a.is_square()) throw DimensionMismatch("lu of a non-square matrix");
    const Field f = a.field();
    const std::size_t n = a.rows();
    Matrix l(f, n, n), u = Matrix::identity(f, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = j; i < n; ++i) {
            Scalar sum = a.at(i, j);
            for (std::size_t t = 0; t < j; ++t) sum -= l.at(i, t) * u.at(t, j);
            l.set(i, j, sum);
        }
        if (l.at(j, j).is_zero()) return std::nullopt;
        const Scalar piv_inv = l.at(j, j).inv();
        for (std::size_t c = j + 1; c < n; ++c) {
            Scalar sum = a.at(j, c);
            for (std::size_t t = 0; t < j; ++t) sum -= l.at(j, t) * u.at(t, c);
            u.set(j, c, sum * piv_inv);
        }
    }
    return std::make_pair(std::move(l), std::move(u));
}

namespace {

std::optional<LuSimilarity> certify(const Matrix& a1, const Matrix& s) {
    const Matrix conj = a1.conjugate(s);
    auto lu = crout_lu(conj);
    if (!lu) return std::nullopt;
    if (lu->first * lu->second != conj)
        throw Error("internal: crout factors fail to reproduce the conjugate");
    return LuSimilarity{s, std::move(lu->first), std::move(lu->second)};
}

}  // namespace

LuSimilarity lu_similarity(const Matrix& a1, std::uint64_t seed) {
    const Field f = a1.field();
    const std::size_t n = a1.rows();
    if (!a1.is_square() || a1.rank() != n) throw SingularMatrix("lu_similarity input must be invertible");
    if (n == 0) return {Matrix(f, 0, 0), Matrix(f, 0, 0), Matrix(f, 0, 0)};

    if (auto r = certify(a1, Matrix::identity(f, n))) return *r;

    // One-transform ladder: T = I + c*E(i,j).
    for (long long c : {1LL, 2LL}) {
        const Scalar cs = Scalar::from_int(f, c);
        if (cs.is_zero()) continue;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                Matrix t = Matrix::identity(f, n);
                t.set(i, j, cs);
                if (auto r = certify(a1, t)) return *r;
            }
        }
    }

    // Seeded random invertible conjugations with rejection. Existence of a
    // working basis is guaranteed, and certification makes every accepted
    // answer exact, so the only risk is retry count.
    Rng rng(seed);
    constexpr std::size_t kMaxTries = 20000;
    for (std::size_t t = 0; t < kMaxTries; ++t) {
        if (auto r = certify(a1, rng.invertible(f, n))) return *r;
    }
    throw SearchExhausted("no LU similarity found in " + std::to_string(kMaxTries) + " tries");
}

}  // namespace nilfactor
