#include "nilfactor/canonical.hpp"

#include <algorithm>

namespace nilfactor {

namespace {

// Incremental independence bookkeeping: keeps a row-reduced copy of the
// accepted vectors and rejects candidates inside their span.
class SpanTracker {
  public:
    explicit SpanTracker(const Field& f, std::size_t dim) : field_(f), dim_(dim) {}

    bool try_add(const Vector& v) {
        Vector w = v;
        for (const auto& [lead, row] : rows_) {
            if (w[lead].is_zero()) continue;
            w = w - row.scaled(w[lead]);
        }
        std::size_t lead = 0;
        while (lead < dim_ && w[lead].is_zero()) ++lead;
        if (lead == dim_) return false;
        rows_.emplace_back(lead, w.scaled(w[lead].inv()));
        return true;
    }

  private:
    Field field_;
    std::size_t dim_;
    std::vector<std::pair<std::size_t, Vector>> rows_;  // (leading index, normalized vector)
};

}  // namespace

Matrix jordan_matrix(const Field& f, const NilpotentPartition& partition) {
    if (partition.sizes.empty()) return Matrix(f, 0, 0);
    std::vector<Matrix> blocks;
    for (std::size_t k : partition.sizes) blocks.push_back(Matrix::jordan_block(f, k));
    return Matrix::block_diag(blocks);
}

JordanForm nilpotent_jcf(const Matrix& n) {
    if (!n.is_square()) throw DimensionMismatch("jcf of a non-square matrix");
    if (!n.is_nilpotent()) throw NotNilpotent("jcf input is not nilpotent");
    const Field f = n.field();
    const std::size_t dim = n.rows();
    if (dim == 0) return {Matrix(f, 0, 0), {}};

    // Kernel filtration N(N^0) c N(N^1) c ... up to the nilpotency index.
    const std::size_t index = n.is_zero() ? 1 : n.nilpotency_index();
    std::vector<std::vector<Vector>> kernels(index + 1);  // kernels[j] spans N(n^j)
    for (std::size_t j = 1; j <= index; ++j) kernels[j] = n.power(j).kernel_basis();

    // Chains, each recorded by its top vector and length.
    std::vector<std::pair<Vector, std::size_t>> chains;
    for (std::size_t level = index; level >= 1; --level) {
        SpanTracker tracker(f, dim);
        if (level > 1)
            for (const auto& v : kernels[level - 1]) tracker.try_add(v);
        // Images of higher chains already occupy part of this level.
        for (const auto& [top, len] : chains)
            tracker.try_add(n.power(len - level) * top);
        for (const auto& cand : kernels[level])
            if (tracker.try_add(cand)) chains.emplace_back(cand, level);
        if (level == 1) break;
    }

    std::vector<Vector> columns;
    NilpotentPartition partition;
    for (const auto& [top, len] : chains) {
        partition.sizes.push_back(len);
        Vector v = top;
        for (std::size_t step = 0; step < len; ++step) {
            columns.push_back(v);
            if (step + 1 < len) v = n * v;
        }
    }
    Matrix s = Matrix::from_columns(f, dim, columns);
    if (s.rank() != dim) throw Error("internal: jcf basis is not invertible");
    if (n.conjugate(s) != jordan_matrix(f, partition))
        throw Error("internal: jcf transform failed verification");
    return {std::move(s), std::move(partition)};
}

FittingSplit fitting_split(const Matrix& a) {
    if (!a.is_square()) throw DimensionMismatch("fitting split of a non-square matrix");
    const Field f = a.field();
    const std::size_t n = a.rows();
    // A^e for any e >= n; squaring keeps it cheap.
    Matrix high = Matrix::identity(f, n);
    if (n > 0) {
        high = a;
        std::size_t e = 1;
        while (e < n) {
            high = high * high;
            e *= 2;
        }
    }

    std::vector<Vector> columns = high.kernel_basis();
    const std::size_t n0 = columns.size();
    // Range basis: pivot columns of A^e, scaled to a leading 1 so that an
    // already-split input gets the identity similarity.
    const std::size_t rank = n - n0;
    {
        SpanTracker tracker(f, n);
        for (std::size_t j = 0; j < n && columns.size() < n; ++j) {
            Vector c = high.column(j);
            if (!tracker.try_add(c)) continue;
            std::size_t lead = 0;
            while (c[lead].is_zero()) ++lead;
            columns.push_back(c.scaled(c[lead].inv()));
        }
    }
    if (columns.size() != n) throw Error("internal: fitting basis incomplete");

    const Matrix s = Matrix::from_columns(f, n, columns);
    const Matrix split = a.conjugate(s);
    const Matrix a0 = split.block(0, 0, n0, n0);
    const Matrix a1 = split.block(n0, n0, rank, rank);
    if (!split.block(0, n0, n0, rank).is_zero() || !split.block(n0, 0, rank, n0).is_zero())
        throw Error("internal: fitting split has coupling blocks");
    if (!a0.is_nilpotent()) throw Error("internal: fitting nilpotent part fails A0^n0 = 0");
    if (a1.rank() != rank) throw Error("internal: fitting invertible part is singular");
    return {s, a0, a1, n0};
}

}  // namespace nilfactor
