#include <doctest.h>

#include "nilfactor/factorizer.hpp"
#include "nilfactor/random.hpp"

using namespace nilfactor;

namespace {
const Field QQ = Field::rationals();

void check_certified(const Matrix& a, const Factorization& fact) {
    const std::size_t n = a.rows();
    CHECK(fact.n1 * fact.n2 == a);
    CHECK(fact.n1.power(n == 0 ? 1 : n).is_zero());
    CHECK(fact.n2.power(n == 0 ? 1 : n).is_zero());
    CHECK(fact.certificate.product_ok);
    CHECK(fact.certificate.rank_a <=
          std::min(fact.certificate.rank_n1, fact.certificate.rank_n2));
}
}  // namespace

TEST_CASE("trivial and small cases") {
    const Matrix zero1(QQ, 1, 1);
    const auto f = factor(zero1);
    CHECK(f.n1.is_zero());
    CHECK(f.n2.is_zero());
    check_certified(zero1, f);

    CHECK_THROWS_AS(factor(Matrix::identity(QQ, 3)), NotSingular);
    CHECK_THROWS_AS(factor(Matrix::jordan_block(QQ, 2)), ExceptionalCase);
    CHECK_THROWS_AS(factor(Matrix::from_ints(QQ, {{0, 1}, {0, 0}})), ExceptionalCase);

    // 2x2 zero is fine: 0 = 0 * 0.
    const Matrix zero2(QQ, 2, 2);
    check_certified(zero2, factor(zero2));
}

TEST_CASE("the documented 2x2 zero-block route") {
    const Matrix a = Matrix::from_ints(QQ, {{0, 0}, {0, 5}});
    const auto f = factor(a);
    CHECK(f.certificate.route == Route::CaseZeroBlock);
    CHECK(f.n1 == Matrix::from_ints(QQ, {{0, 0}, {5, 0}}));
    CHECK(f.n2 == Matrix::from_ints(QQ, {{0, 1}, {0, 0}}));
    check_certified(a, f);
    // Both factors carry the full rank of A.
    CHECK(f.certificate.rank_n1 == 1);
    CHECK(f.certificate.rank_n2 == 1);
}

TEST_CASE("zero-block case handles wider zero blocks") {
    const auto piece = factor_case_zero_block(2, Matrix::identity(QQ, 2));
    CHECK(piece.m1 * piece.m2 ==
          Matrix::block_diag({Matrix(QQ, 2, 2), Matrix::identity(QQ, 2)}));
    CHECK(piece.m1.is_nilpotent());
    CHECK(piece.m2.is_nilpotent());

    // Strictly triangular by construction.
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i; j < 4; ++j) CHECK(piece.m1.at(i, j).is_zero());
}

TEST_CASE("zero-block rank claim for m = 1") {
    Rng rng(71);
    const Matrix a1 = rng.invertible(QQ, 3);
    const auto piece = factor_case_zero_block(1, a1);
    CHECK(piece.m1.rank() == 3);
    CHECK(piece.m2.rank() == 3);
}

TEST_CASE("2x2 nilpotent-part case at the smallest size") {
    const auto piece = factor_case_j2(Matrix::from_ints(QQ, {{1}}));
    Matrix super2(QQ, 2, 2);
    super2.set(0, 1, Scalar::one(QQ));
    CHECK(piece.m1 * piece.m2 ==
          Matrix::block_diag({super2, Matrix::identity(QQ, 1)}));
    CHECK(piece.m1.is_nilpotent());
    CHECK(piece.m2.is_nilpotent());
}

TEST_CASE("2x2 nilpotent-part case with identity invertible block") {
    const auto piece = factor_case_j2(Matrix::identity(QQ, 2));
    CHECK(piece.m1.is_nilpotent());
    CHECK(piece.m2.is_nilpotent());
    const Matrix prod = piece.m1 * piece.m2;
    CHECK(prod.block(2, 0, 2, 2).is_zero());
    CHECK(prod.block(2, 2, 2, 2) == Matrix::identity(QQ, 2));
}

TEST_CASE("general case at both coupling settings") {
    // Partition [3]: zero coupling block.
    const auto b0 = factor_case_general({{3}}, Matrix::from_ints(QQ, {{1}}));
    CHECK(b0.m1.is_nilpotent());
    CHECK(b0.m2.is_nilpotent());
    // Partition [4]: the corner correction kicks in.
    const auto b1 = factor_case_general({{4}}, Matrix::from_ints(QQ, {{2}}));
    CHECK(b1.m1.is_nilpotent());
    CHECK(b1.m2.is_nilpotent());
    CHECK_THROWS_AS(factor_case_general({{1}}, Matrix::identity(QQ, 2)), UnsupportedSize);
}

TEST_CASE("route tags match the structure") {
    Rng rng(83);
    const Field f5 = Field::prime(5);

    // Nilpotent route.
    const Matrix nil =
        jordan_matrix(f5, {{3, 1}}).conjugate(rng.invertible(f5, 4));
    CHECK(factor(nil).certificate.route == Route::Nilpotent);

    // CaseZeroBlock via m = 1 and m = 2.
    const Matrix z1 = Matrix::block_diag({Matrix(f5, 1, 1), rng.invertible(f5, 2)})
                          .conjugate(rng.invertible(f5, 3));
    CHECK(factor(z1).certificate.route == Route::CaseZeroBlock);
    const Matrix z2 = Matrix::block_diag({Matrix(f5, 2, 2), rng.invertible(f5, 2)})
                          .conjugate(rng.invertible(f5, 4));
    CHECK(factor(z2).certificate.route == Route::CaseZeroBlock);

    // CaseJ2.
    const Matrix j2core =
        Matrix::block_diag({Matrix::jordan_block(f5, 2), rng.invertible(f5, 2)});
    const Matrix j2case = j2core.conjugate(rng.invertible(f5, 4));
    CHECK(factor(j2case).certificate.route == Route::CaseJ2);

    // CaseGeneral.
    const Matrix gcore =
        Matrix::block_diag({Matrix::jordan_block(f5, 3), rng.invertible(f5, 2)});
    const Matrix gcase = gcore.conjugate(rng.invertible(f5, 5));
    CHECK(factor(gcase).certificate.route == Route::CaseGeneral);

    for (const Matrix& m : {nil, z1, z2, j2case, gcase}) check_certified(m, factor(m));
}

TEST_CASE("general case with mixed and all-even nilpotent partitions") {
    Rng rng(67);
    const Field f7 = Field::prime(7);
    const std::vector<std::vector<std::size_t>> shapes{
        {2, 1}, {2, 2}, {3, 1}, {4, 4}, {3, 2, 2}, {4, 2}};
    for (const auto& shape : shapes) {
        const Matrix a0 = jordan_matrix(f7, {shape});
        const Matrix core = Matrix::block_diag({a0, rng.invertible(f7, 2)});
        const Matrix a = core.conjugate(rng.invertible(f7, core.rows()));
        const auto f = factor(a);
        CHECK(f.certificate.route == Route::CaseGeneral);
        check_certified(a, f);
    }
}

TEST_CASE("exhaustive GF(2) 2x2 behaviour") {
    const Field f2 = Field::prime(2);
    std::size_t factored = 0, rejected_invertible = 0, exceptional = 0;
    for (int bits = 0; bits < 16; ++bits) {
        Matrix a(f2, 2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                a.set(i, j, Scalar::from_int(f2, (bits >> (2 * i + j)) & 1));
        try {
            check_certified(a, factor(a));
            ++factored;
        } catch (const NotSingular&) {
            ++rejected_invertible;
        } catch (const ExceptionalCase&) {
            ++exceptional;
        }
    }
    CHECK(rejected_invertible == 6);  // |GL_2(F_2)|
    CHECK(exceptional == 3);          // E12, E21, all-ones
    CHECK(factored == 7);
}

TEST_CASE("random singular matrices factor with certificates") {
    for (const Field f : {Field::rationals(), Field::prime(2), Field::prime(7)}) {
        Rng rng(91);
        for (int t = 0; t < 20; ++t) {
            const std::size_t n = 2 + rng.below(5);
            const Matrix a = rng.singular(f, n, rng.below(n));
            try {
                check_certified(a, factor(a));
            } catch (const ExceptionalCase&) {
                CHECK(n == 2);
                CHECK_FALSE(a.is_zero());
                CHECK(a.is_nilpotent());
            }
        }
    }
}

TEST_CASE("factorization is reproducible for a fixed seed") {
    Rng rng(5);
    const Field f2 = Field::prime(2);
    const Matrix a = rng.singular(f2, 5, 3);
    const auto f1 = factor(a, 42);
    const auto f2_ = factor(a, 42);
    CHECK(f1.n1 == f2_.n1);
    CHECK(f1.n2 == f2_.n2);
}
