#include "nilfactor/factorizer.hpp"

#include "nilfactor/roth.hpp"

namespace nilfactor {

std::string route_name(Route r) {
    switch (r) {
        case Route::Nilpotent: return "Nilpotent";
        case Route::CaseZeroBlock: return "CaseZeroBlock";
        case Route::CaseJ2: return "CaseJ2";
        case Route::CaseGeneral: return "CaseGeneral";
    }
    return "?";
}

namespace {

Certificate certify(const Matrix& a, const Matrix& n1, const Matrix& n2, Route route) {
    Certificate c;
    c.route = route;
    c.product_ok = (n1 * n2 == a);
    c.nilpotency_index_1 = n1.nilpotency_index();
    c.nilpotency_index_2 = n2.nilpotency_index();
    c.rank_a = a.rank();
    c.rank_n1 = n1.rank();
    c.rank_n2 = n2.rank();
    if (!c.product_ok) throw Error("internal: factor product does not reproduce the input");
    if (c.rank_a > std::min(c.rank_n1, c.rank_n2))
        throw Error("internal: product rank exceeds a factor rank");
    return c;
}

}  // namespace

CaseFactors factor_case_zero_block(std::size_t m, const Matrix& a1, std::uint64_t seed) {
    if (m == 0) throw UnsupportedSize("zero-block case needs m >= 1");
    const Field f = a1.field();
    const std::size_t k = a1.rows();
    const std::size_t n = m + k;
    const LuSimilarity lu = lu_similarity(a1, seed);

    Matrix m1(f, n, n), m2(f, n, n);
    m1.set_block(m, 0, lu.lower);   // L shifted down by m: strictly lower triangular
    m2.set_block(0, m, lu.upper);   // U shifted right by m: strictly upper triangular
    const Matrix target = Matrix::block_diag({Matrix(f, m, m), lu.lower * lu.upper});
    if (m1 * m2 != target) throw Error("internal: zero-block product mismatch");
    if (!m1.is_nilpotent() || !m2.is_nilpotent())
        throw Error("internal: zero-block factor not nilpotent");
    if (m == 1 && (m1.rank() != n - 1 || m2.rank() != n - 1))
        throw Error("internal: zero-block factors must have rank n - 1");

    return {std::move(m1), std::move(m2),
            Matrix::block_diag({Matrix::identity(f, m), lu.similarity})};
}

CaseFactors factor_case_j2(const Matrix& a1, std::uint64_t seed) {
    const Field f = a1.field();
    const std::size_t k = a1.rows();
    if (k == 0) throw UnsupportedSize("bordered case needs a nonempty invertible block");
    const std::size_t n = k + 2;
    const Scalar one = Scalar::one(f);
    const LuSimilarity lu = lu_similarity(a1, seed);

    // Bordered pair: left carries L inside a +/-1 frame, right carries U
    // shifted beside a superdiagonal unit.
    Matrix m1(f, n, n), m2(f, n, n);
    m1.set(0, 0, one);
    m1.set(0, n - 1, one);
    m1.set(n - 1, 0, -one);
    m1.set(n - 1, n - 1, m1.at(n - 1, n - 1) - one);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            m1.set(2 + i, 1 + j, m1.at(2 + i, 1 + j) + lu.lower.at(i, j));
    m2.set(0, 1, one);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m2.set(1 + i, 2 + j, lu.upper.at(i, j));

    // The product must be the target with a single -E_(k,2) coupling block.
    Matrix super2(f, 2, 2);
    super2.set(0, 1, one);
    const Matrix product = m1 * m2;
    Matrix expected = Matrix::block_diag({super2, lu.lower * lu.upper});
    expected.set(n - 1, 1, -one);
    if (product != expected) throw Error("internal: bordered product mismatch");
    if (!m2.is_nilpotent()) throw Error("internal: right bordered factor not nilpotent");

    // Nilpotency certificate for the left factor: change of basis
    // [e1, e1 - e_n, e2, ..., e_{n-1}] makes it block upper triangular with
    // nilpotent diagonal blocks; then re-verify by powering.
    {
        std::vector<Vector> cols{Vector::unit(f, n, 0),
                                 Vector::unit(f, n, 0) - Vector::unit(f, n, n - 1)};
        for (std::size_t i = 1; i + 1 < n; ++i) cols.push_back(Vector::unit(f, n, i));
        const Matrix p = Matrix::from_columns(f, n, cols);
        const Matrix t = m1.conjugate(p);
        if (!t.block(2, 0, k, 2).is_zero() || !t.block(0, 0, 2, 2).is_nilpotent() ||
            !t.block(2, 2, k, k).is_nilpotent())
            throw Error("internal: left bordered factor fails the triangular certificate");
    }
    if (!m1.is_nilpotent()) throw Error("internal: left bordered factor not nilpotent");

    // Straighten the coupling block: X = [0 | x] with (LU) x = e_k.
    const Matrix x = solve_roth_j2case(lu.lower * lu.upper);
    const Matrix r = roth_transform(x, 2, k);
    const Matrix r_inv = r.inverse();
    Matrix m1c = r_inv * m1 * r;
    Matrix m2c = r_inv * m2 * r;
    if (m1c * m2c != Matrix::block_diag({super2, lu.lower * lu.upper}))
        throw Error("internal: roth transform failed to decouple");

    // Canonical nilpotent block is the subdiagonal J_2; the in-basis block is
    // its superdiagonal twin, one swap away.
    Matrix swap2(f, 2, 2);
    swap2.set(0, 1, one);
    swap2.set(1, 0, one);
    const Matrix basis = Matrix::block_diag({swap2, lu.similarity});
    return {std::move(m1c), std::move(m2c), basis};
}

CaseFactors factor_case_general(const NilpotentPartition& partition, const Matrix& a1,
                                std::uint64_t seed) {
    const Field f = a1.field();
    const std::size_t n0 = partition.sum();
    const std::size_t k = a1.rows();
    const std::size_t n = n0 + k;
    if (n0 < 3) throw UnsupportedSize("general case needs a nilpotent part of order >= 3");
    const NormalFormFactorization nf = factor_nilpotent_normal_form(partition, f);
    const LuSimilarity lu = lu_similarity(a1, seed);
    const Matrix working_a0 = nf.left * nf.right;

    // Left factor: normal-form left block, L occupying rows n0..n-1 and
    // columns n0-1..n-2. Right factor: normal-form right block, U occupying
    // rows n0-1..n-2 and columns n0..n-1.
    Matrix m1(f, n, n), m2(f, n, n);
    m1.set_block(0, 0, nf.left);
    m1.set_block(n0, n0 - 1, lu.lower);
    m2.set_block(0, 0, nf.right);
    m2.set_block(n0 - 1, n0, lu.upper);

    // The coupling block the assembly produces: zero when the right factor's
    // last row is zero, otherwise L's first column sitting in column 1.
    const Matrix product = m1 * m2;
    Matrix expected = Matrix::block_diag({working_a0, lu.lower * lu.upper});
    const bool coupled = nf.right_last_row == RightLastRow::E1T;
    if (coupled)
        for (std::size_t i = 0; i < k; ++i) expected.set(n0 + i, 0, lu.lower.at(i, 0));
    if (product != expected) throw Error("internal: general-case product mismatch");
    if (!m1.is_nilpotent() || !m2.is_nilpotent())
        throw Error("internal: general-case factor not nilpotent");

    Matrix basis = Matrix::block_diag({nf.similarity, lu.similarity});
    Matrix m1c = m1, m2c = m2;
    if (coupled) {
        // X A0 = 0 because A0's first row is zero; -A1 X reproduces the
        // coupling column exactly.
        const Matrix x = solve_roth_e11case(lu.upper.at(0, 0), k, n0);
        const Matrix r = roth_transform(x, n0, k);
        const Matrix r_inv = r.inverse();
        m1c = r_inv * m1 * r;
        m2c = r_inv * m2 * r;
        if (m1c * m2c != Matrix::block_diag({working_a0, lu.lower * lu.upper}))
            throw Error("internal: roth correction failed to decouple");
    }
    return {std::move(m1c), std::move(m2c), std::move(basis)};
}

Factorization factor(const Matrix& a, std::uint64_t seed) {
    if (!a.is_square()) throw DimensionMismatch("factor needs a square matrix");
    const Field f = a.field();
    const std::size_t n = a.rows();
    if (a.rank() == n) throw NotSingular("matrix is invertible");

    if (a.is_nilpotent()) {
        if (n == 2 && !a.is_zero())
            throw ExceptionalCase("nonzero nilpotent 2x2 matrices admit no such factorization");
        const JordanForm jf = nilpotent_jcf(a);
        const NormalFormFactorization nf = factor_nilpotent_normal_form(jf.partition, f);
        const Matrix w = jf.transform * nf.similarity;
        const Matrix w_inv = w.inverse();
        Matrix n1 = w * nf.left * w_inv;
        Matrix n2 = w * nf.right * w_inv;
        Certificate c = certify(a, n1, n2, Route::Nilpotent);
        return {std::move(n1), std::move(n2), std::move(c)};
    }

    const FittingSplit split = fitting_split(a);
    CaseFactors pieces{Matrix(f, 0, 0), Matrix(f, 0, 0), Matrix(f, 0, 0)};
    Route route;
    Matrix mid = Matrix::identity(f, n);  // maps Dg[canonical A0, A1] to the Fitting blocks
    if (split.nilpotent_block.is_zero()) {
        route = Route::CaseZeroBlock;
        pieces = factor_case_zero_block(split.n0, split.invertible_block, seed);
    } else if (split.n0 == 2) {
        route = Route::CaseJ2;
        pieces = factor_case_j2(split.invertible_block, seed);
        const JordanForm jf = nilpotent_jcf(split.nilpotent_block);
        mid = Matrix::block_diag({jf.transform, Matrix::identity(f, n - 2)});
    } else {
        route = Route::CaseGeneral;
        const JordanForm jf = nilpotent_jcf(split.nilpotent_block);
        pieces = factor_case_general(jf.partition, split.invertible_block, seed);
        mid = Matrix::block_diag({jf.transform, Matrix::identity(f, n - split.n0)});
    }

    // Compose every similarity once: A = W (m1 m2) W^{-1}.
    const Matrix w = split.similarity * mid * pieces.basis;
    const Matrix w_inv = w.inverse();
    Matrix n1 = w * pieces.m1 * w_inv;
    Matrix n2 = w * pieces.m2 * w_inv;
    Certificate c = certify(a, n1, n2, route);
    return {std::move(n1), std::move(n2), std::move(c)};
}

}  // namespace nilfactor
