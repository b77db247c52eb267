#include "nilfactor/roth.hpp"

namespace nilfactor {

std::optional<Matrix> solve_sylvester_generic(const Matrix& a0, const Matrix& a1,
                                              const Matrix& b) {
    if (!a0.is_square() || !a1.is_square()) throw DimensionMismatch("sylvester blocks");
    const std::size_t n0 = a0.rows(), k = a1.rows();
    if (b.rows() != k || b.cols() != n0) throw DimensionMismatch("sylvester rhs");
    const Field f = a0.field();

    // Unknowns x_{rc} (r < k, c < n0), flattened row-major. The (i, j) entry
    // of X*A0 - A1*X is sum_c X(i,c) A0(c,j) - sum_r A1(i,r) X(r,j).
    const std::size_t m = k * n0;
    Matrix sys(f, m, m);
    Vector rhs(f, m);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < n0; ++j) {
            const std::size_t eq = i * n0 + j;
            for (std::size_t c = 0; c < n0; ++c)
                sys.set(eq, i * n0 + c, sys.at(eq, i * n0 + c) + a0.at(c, j));
            for (std::size_t r = 0; r < k; ++r)
                sys.set(eq, r * n0 + j, sys.at(eq, r * n0 + j) - a1.at(i, r));
            rhs[eq] = b.at(i, j);
        }
    }
    const auto sol = sys.solve(rhs);
    if (!sol) return std::nullopt;
    Matrix x(f, k, n0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n0; ++j) x.set(i, j, (*sol)[i * n0 + j]);
    return x;
}

Matrix solve_roth_j2case(const Matrix& a1) {
    const Field f = a1.field();
    const std::size_t k = a1.rows();
    const auto x = a1.solve(Vector::unit(f, k, k - 1));
    if (!x || a1.rank() != k) throw SingularMatrix("j2-case needs an invertible block");
    Matrix r(f, k, 2);
    for (std::size_t i = 0; i < k; ++i) r.set(i, 1, (*x)[i]);
    return r;
}

Matrix solve_roth_e11case(const Scalar& u11, std::size_t k, std::size_t n0) {
    if (u11.is_zero()) throw DivisionByZero("pivot u11 must be nonzero");
    Matrix x(u11.field(), k, n0);
    x.set(0, 0, -u11.inv());
    return x;
}

Matrix roth_transform(const Matrix& x, std::size_t n0, std::size_t k) {
    if (x.rows() != k || x.cols() != n0) throw DimensionMismatch("roth transform shape");
    const Field f = x.field();
    Matrix t = Matrix::identity(f, n0 + k);
    t.set_block(n0, 0, x);
    return t;
}

}  // namespace nilfactor
