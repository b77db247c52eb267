#include <doctest.h>

#include <algorithm>
#include <functional>

#include "nilfactor/block_factors.hpp"

using namespace nilfactor;

namespace {
const Field QQ = Field::rationals();
const Field F2 = Field::prime(2);

Matrix pair_target(const Field& f, std::size_t k) {
    return Matrix::block_diag({Matrix::jordan_block(f, k), Matrix::jordan_block(f, 2)});
}

void check_normal_form(const NormalFormFactorization& nf, const NilpotentPartition& p,
                       const Field& f) {
    const std::size_t n = p.sum();
    NilpotentPartition sorted = p;
    std::sort(sorted.sizes.rbegin(), sorted.sizes.rend());
    CHECK(nf.left * nf.right == jordan_matrix(f, sorted).conjugate(nf.similarity));
    CHECK(nf.left.is_nilpotent());
    CHECK(nf.right.is_nilpotent());
    for (std::size_t j = 0; j < n; ++j) {
        CHECK(nf.left.at(0, j).is_zero());
        CHECK(nf.left.at(j, n - 1).is_zero());
        const Scalar& v = nf.right.at(n - 1, j);
        if (nf.right_last_row == RightLastRow::E1T && j == 0)
            CHECK(v.is_one());
        else
            CHECK(v.is_zero());
    }
    // The reorder part is a plain permutation.
    CHECK(nf.reorder.rows() == n);
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t ones = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (nf.reorder.at(i, j).is_zero()) continue;
            CHECK(nf.reorder.at(i, j).is_one());
            ++ones;
        }
        CHECK(ones == 1);
    }
}
}  // namespace

TEST_CASE("k = 1 pair is the unit-matrix product") {
    const auto [n1, n2] = factor_jk_j2(1, QQ);
    CHECK(n1 == Matrix::unit(QQ, 3, 2, 0));
    CHECK(n2 == Matrix::unit(QQ, 3, 0, 1));
    CHECK(n1 * n2 == pair_target(QQ, 1));
}

TEST_CASE("k = 3 pair has the documented interleave columns") {
    const auto [n1, n2] = factor_jk_j2(3, QQ);
    // Left: columns e5, 0, e2, 0, e3. Right: columns e3, e5, 0, e1, 0.
    Matrix left(QQ, 5, 5), right(QQ, 5, 5);
    left.set(4, 0, Scalar::one(QQ));
    left.set(1, 2, Scalar::one(QQ));
    left.set(2, 4, Scalar::one(QQ));
    right.set(2, 0, Scalar::one(QQ));
    right.set(4, 1, Scalar::one(QQ));
    right.set(0, 3, Scalar::one(QQ));
    CHECK(n1 == left);
    CHECK(n2 == right);
    CHECK(n1 * n2 == pair_target(QQ, 3));
}

TEST_CASE("k = 7 pair: product, nilpotency and rank all hold") {
    const auto [n1, n2] = factor_jk_j2(7, QQ);
    CHECK(n1 * n2 == pair_target(QQ, 7));
    CHECK(n1.power(9).is_zero());
    CHECK(n2.power(9).is_zero());
    CHECK(n1.rank() == 7);
    CHECK(n2.rank() == 7);
}

TEST_CASE("pair identities for k up to 15 over QQ and GF(2)") {
    for (const Field& f : {QQ, F2}) {
        for (std::size_t k = 1; k <= 15; ++k) {
            const auto [n1, n2] = factor_jk_j2(k, f);
            CHECK(n1 * n2 == pair_target(f, k));
            CHECK(n1.is_nilpotent());
            CHECK(n2.is_nilpotent());
            if (k % 2 == 1) {
                CHECK(n1.rank() == k);
                CHECK(n2.rank() == k);
            }
        }
    }
    CHECK_THROWS_AS(factor_jk_j2(0, QQ), InvalidK);
}

TEST_CASE("left factor chain basis at k = 3") {
    const Matrix q = left_factor_jordan_basis(3, QQ);
    // Columns e1, e5, e3, e2, e4.
    Matrix expected(QQ, 5, 5);
    const std::size_t cols[] = {0, 4, 2, 1, 3};
    for (std::size_t j = 0; j < 5; ++j) expected.set(cols[j], j, Scalar::one(QQ));
    CHECK(q == expected);
    const auto [n1, n2] = factor_jk_j2(3, QQ);
    CHECK(n1.conjugate(q) == jordan_matrix(QQ, {{4, 1}}));
}

TEST_CASE("right factor chain basis at k = 3") {
    const Matrix q = right_factor_jordan_basis(3, QQ);
    // Columns e4, e1, e3, e2, e5.
    Matrix expected(QQ, 5, 5);
    const std::size_t cols[] = {3, 0, 2, 1, 4};
    for (std::size_t j = 0; j < 5; ++j) expected.set(cols[j], j, Scalar::one(QQ));
    CHECK(q == expected);
    const auto [n1, n2] = factor_jk_j2(3, QQ);
    CHECK(n2.conjugate(q) == jordan_matrix(QQ, {{3, 2}}));
}

TEST_CASE("chain bases produce the closed-form block sizes") {
    CHECK(left_factor_jordan_sizes(3) == std::pair<std::size_t, std::size_t>{4, 1});
    CHECK(left_factor_jordan_sizes(5) == std::pair<std::size_t, std::size_t>{4, 3});
    CHECK(left_factor_jordan_sizes(7) == std::pair<std::size_t, std::size_t>{6, 3});
    CHECK(right_factor_jordan_sizes(5) == std::pair<std::size_t, std::size_t>{5, 2});
    CHECK(right_factor_jordan_sizes(7) == std::pair<std::size_t, std::size_t>{6, 3});
    for (std::size_t k = 3; k <= 15; k += 2) {
        for (const Field& f : {QQ, F2}) {
            const auto [n1, n2] = factor_jk_j2(k, f);
            const auto ls = left_factor_jordan_sizes(k);
            const auto rs = right_factor_jordan_sizes(k);
            CHECK(n1.conjugate(left_factor_jordan_basis(k, f)) ==
                  jordan_matrix(f, {{ls.first, ls.second}}));
            CHECK(n2.conjugate(right_factor_jordan_basis(k, f)) ==
                  jordan_matrix(f, {{rs.first, rs.second}}));
        }
    }
    CHECK_THROWS_AS(left_factor_jordan_basis(4, QQ), InvalidK);
    CHECK_THROWS_AS(right_factor_jordan_basis(1, QQ), InvalidK);
}

TEST_CASE("single block factorizations") {
    const auto one = factor_single_block(1, QQ);
    CHECK(one.left.is_zero());
    CHECK(one.right.is_zero());
    CHECK(one.right_last_row == RightLastRow::Zero);

    const auto odd = factor_single_block(3, QQ);
    CHECK(odd.right_last_row == RightLastRow::Zero);
    check_normal_form(odd, {{3}}, QQ);

    const auto even = factor_single_block(4, QQ);
    CHECK(even.right_last_row == RightLastRow::E1T);
    check_normal_form(even, {{4}}, QQ);

    CHECK_THROWS_AS(factor_single_block(2, QQ), UnsupportedSize);
}

TEST_CASE("single blocks across sizes and fields") {
    for (const Field& f : {QQ, F2, Field::prime(5)}) {
        for (std::size_t k = 1; k <= 12; ++k) {
            if (k == 2) continue;
            const auto nf = factor_single_block(k, f);
            check_normal_form(nf, {{k}}, f);
            CHECK(nf.right_last_row ==
                  (k % 2 == 0 ? RightLastRow::E1T : RightLastRow::Zero));
        }
    }
}

TEST_CASE("triple of 2-blocks") {
    for (const Field& f : {QQ, F2}) {
        const auto nf = factor_triple_j2(f);
        check_normal_form(nf, {{2, 2, 2}}, f);
        CHECK(nf.right_last_row == RightLastRow::Zero);
        CHECK(nf.left.power(6).is_zero());
        CHECK(nf.right.power(6).is_zero());
        CHECK((nf.left * nf.right).rank() == 3);
    }
}

TEST_CASE("normal form for the documented mixed partitions") {
    check_normal_form(factor_nilpotent_normal_form({{1, 2}}, QQ), {{1, 2}}, QQ);
    check_normal_form(factor_nilpotent_normal_form({{2, 2, 2}}, QQ), {{2, 2, 2}}, QQ);
    check_normal_form(factor_nilpotent_normal_form({{3, 2, 2}}, QQ), {{3, 2, 2}}, QQ);
    CHECK_THROWS_AS(factor_nilpotent_normal_form({{2}}, QQ), ExceptionalCase);
}

TEST_CASE("normal form handles trailing even blocks, including several of them") {
    // A lone even block keeps its unit row at the very corner ...
    const auto lone = factor_nilpotent_normal_form({{4}}, QQ);
    CHECK(lone.right_last_row == RightLastRow::E1T);
    // ... and an all-even multi-block partition still lands it in column 1.
    for (const auto& sizes :
         std::vector<std::vector<std::size_t>>{{4, 4}, {6, 4}, {4, 4, 4}, {8, 4}}) {
        const auto nf = factor_nilpotent_normal_form({sizes}, QQ);
        CHECK(nf.right_last_row == RightLastRow::E1T);
        check_normal_form(nf, {sizes}, QQ);
    }
    // A zero-last-row group always takes the trailing position when present.
    const auto mixed = factor_nilpotent_normal_form({{4, 3}}, QQ);
    CHECK(mixed.right_last_row == RightLastRow::Zero);
    check_normal_form(mixed, {{4, 3}}, QQ);
}

TEST_CASE("normal form across all partitions of small orders in GF(2)") {
    // Exhaustive partitions for n <= 8 here; the acceptance suite goes to 12.
    std::function<void(std::size_t, std::size_t, std::vector<std::size_t>&)> rec =
        [&](std::size_t left, std::size_t max_part, std::vector<std::size_t>& cur) {
            if (left == 0) {
                check_normal_form(factor_nilpotent_normal_form({cur}, F2), {cur}, F2);
                return;
            }
            for (std::size_t p = std::min(left, max_part); p >= 1; --p) {
                cur.push_back(p);
                rec(left - p, p, cur);
                cur.pop_back();
            }
        };
    for (std::size_t n = 1; n <= 8; ++n) {
        if (n == 2) continue;
        std::vector<std::size_t> cur;
        rec(n, n, cur);
    }
}
