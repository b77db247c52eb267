#include "nilfactor/sourour.hpp"

namespace nilfactor {

namespace {

bool is_scalar_matrix(const Matrix& a) {
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j ? a.at(i, j) != a.at(0, 0) : !a.at(i, j).is_zero()) return false;
        }
    return true;
}

// If A^2 = mu * A, returns mu.
std::optional<Scalar> proportional_square(const Matrix& a) {
    const Matrix a2 = a * a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a.at(i, j).is_zero()) {
                const Scalar mu = a2.at(i, j) / a.at(i, j);
                if (a2 == a.scaled(mu)) return mu;
                return std::nullopt;
            }
    return std::nullopt;  // a = 0, handled by the square-zero check
}

std::size_t rank_of_columns(const Field& f, std::size_t dim, const std::vector<Vector>& cols) {
    return Matrix::from_columns(f, dim, cols).rank();
}

// x0 and A x0 independent modulo the null space of A.
bool quotient_independent(const Matrix& a, const std::vector<Vector>& kernel, const Vector& x) {
    std::vector<Vector> probe = kernel;
    probe.push_back(x);
    probe.push_back(a * x);
    return rank_of_columns(a.field(), a.rows(), probe) == kernel.size() + 2;
}

}  // namespace

Vector choose_x0(const Matrix& a) {
    if (!a.is_square()) throw DimensionMismatch("choose_x0 needs a square matrix");
    const Field f = a.field();
    const std::size_t n = a.rows();
    if ((a * a).is_zero()) throw SquareZero("A^2 = 0");
    if (is_scalar_matrix(a)) throw ScalarMatrix("A is a scalar matrix");

    const std::vector<Vector> kernel = a.kernel_basis();
    for (std::size_t i = 0; i < n; ++i) {
        const Vector e = Vector::unit(f, n, i);
        if (quotient_independent(a, kernel, e)) return e;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vector v = Vector::unit(f, n, i) + Vector::unit(f, n, j);
            if (quotient_independent(a, kernel, v)) return v;
        }
    // The scan is exhaustive for this property: failure means A is a scalar
    // on F^n / N(A), i.e. A^2 = mu*A.
    throw QuotientScalar("A acts as a scalar modulo its null space");
}

BorderingBasis build_bordering_basis(const Matrix& a, const Vector& x0) {
    const Field f = a.field();
    const std::size_t n = a.rows();
    const Vector x1 = a * x0;
    std::vector<Vector> cols{x1, x1 - x0};
    const std::vector<Vector> kernel = a.kernel_basis();
    for (const auto& k : kernel) cols.push_back(k);
    if (rank_of_columns(f, n, cols) != cols.size())
        throw DependentSystem("bordering seed vectors are dependent");
    for (std::size_t i = 0; i < n && cols.size() < n; ++i) {
        std::vector<Vector> probe = cols;
        probe.push_back(Vector::unit(f, n, i));
        if (rank_of_columns(f, n, probe) == probe.size()) cols = std::move(probe);
    }
    if (cols.size() != n) throw DependentSystem("bordering basis incomplete");
    return {Matrix::from_columns(f, n, cols), x0, x1, kernel.size()};
}

Matrix bordering_projection(const BorderingBasis& basis) {
    const Field f = basis.basis.field();
    const std::size_t n = basis.basis.rows();
    Matrix d(f, n, n);
    for (std::size_t i = 1; i < n; ++i) d.set(i, i, Scalar::one(f));
    return basis.basis * d * basis.basis.inverse();
}

namespace {

SourourForm extract_bordered(const Matrix& a, const Matrix& s) {
    const Field f = a.field();
    const std::size_t n = a.rows();
    const Matrix m = a.conjugate(s);
    SourourForm out{s, m.at(0, 0), Vector(f, n - 1), Vector(f, n - 1),
                    m.block(1, 1, n - 1, n - 1)};
    for (std::size_t i = 0; i + 1 < n; ++i) {
        out.b[i] = m.at(i + 1, 0);
        out.c[i] = m.at(0, i + 1);
    }
    if (out.d.rank() + 1 != a.rank()) throw Error("internal: bordered rank drop failed");
    if (!out.d.solve(out.b)) throw Error("internal: b escapes the column space of D");
    if (!out.d.transpose().solve(out.c)) throw Error("internal: c escapes the row space of D");
    return out;
}

}  // namespace

SourourForm sourour_form(const Matrix& a) {
    if (!a.is_square()) throw DimensionMismatch("sourour_form needs a square matrix");
    const Field f = a.field();
    const std::size_t n = a.rows();
    if ((a * a).is_zero()) throw SquareZero("A^2 = 0");

    if (is_scalar_matrix(a)) return extract_bordered(a, Matrix::identity(f, n));

    if (proportional_square(a)) {
        // A is mu times a projection: diagonalize directly with a basis of
        // the column space followed by a basis of the null space.
        std::vector<Vector> cols;
        {
            std::vector<Vector> probe;
            for (std::size_t j = 0; j < n; ++j) {
                probe.push_back(a.column(j));
                if (rank_of_columns(f, n, probe) == probe.size())
                    cols.push_back(a.column(j));
                else
                    probe.pop_back();
            }
        }
        for (const auto& k : a.kernel_basis()) cols.push_back(k);
        if (cols.size() != n) throw Error("internal: projection split basis incomplete");
        return extract_bordered(a, Matrix::from_columns(f, n, cols));
    }

    const Vector x0 = choose_x0(a);
    const BorderingBasis basis = build_bordering_basis(a, x0);
    return extract_bordered(a, basis.basis);
}

}  // namespace nilfactor
