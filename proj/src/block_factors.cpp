#include "nilfactor/block_factors.hpp"

#include <algorithm>
#include <optional>

namespace nilfactor {

namespace {

// Matrix whose column j is the unit vector e_{spec[j]} (1-based), or zero.
// All the explicit constructions below are of this shape except the two
// even-size pieces, which carry a handful of +/-1 entries.
Matrix unit_columns(const Field& f, std::size_t rows,
                    const std::vector<std::optional<std::size_t>>& spec) {
    Matrix m(f, rows, spec.size());
    for (std::size_t j = 0; j < spec.size(); ++j)
        if (spec[j]) m.set(*spec[j] - 1, j, Scalar::one(f));
    return m;
}

Matrix permutation_columns(const Field& f, const std::vector<std::size_t>& cols) {
    Matrix m(f, cols.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set(cols[j] - 1, j, Scalar::one(f));
    return m;
}

// ---- the Dg[J_k, J_2] pair, odd k >= 3 ------------------------------------
//
// Both factors map unit vectors to unit vectors (or zero): the left factor
// stacks a k x k interleaving block on top of a trailing J_2, the right one
// a leading 2 x 2 corner above the complementary interleaving block.

Matrix odd_pair_left(std::size_t k, const Field& f) {
    const std::size_t n = k + 2;
    std::vector<std::optional<std::size_t>> cols(n);
    cols[0] = n;  // trailing J_2 block, first column
    // interleave block in rows 1..k, columns 3..n
    cols[2] = 2;
    for (std::size_t j = 1; 2 * j + 2 <= k - 1; ++j) {
        cols[2 + 2 * j] = 2 * j + 2;
        cols[2 + 2 * j + 1] = 2 * j + 1;
    }
    cols[n - 1] = k;
    return unit_columns(f, n, cols);
}

Matrix odd_pair_right(std::size_t k, const Field& f) {
    const std::size_t n = k + 2;
    std::vector<std::optional<std::size_t>> cols(n);
    cols[0] = 2 + 1;  // complementary interleave, shifted into rows 3..n
    for (std::size_t j = 1; 2 * j + 1 <= k - 2; ++j) {
        cols[2 * j - 1] = 2 + 2 * j + 2;
        cols[2 * j] = 2 + 2 * j + 1;
    }
    cols[k - 2] = 2 + k;
    cols[k] = 1;  // leading corner [[1,0],[0,0]]
    return unit_columns(f, n, cols);
}

// ---- the Dg[J_k, J_2] pair, even k >= 2 ------------------------------------

Matrix even_pair_left(std::size_t k, const Field& f) {
    const std::size_t n = k + 2;
    std::vector<std::optional<std::size_t>> cols(n);
    cols[1] = n;  // corner [[0,0],[0,1]] feeding the tail
    for (std::size_t i = 1; i + 1 <= k; ++i) cols[2 + i - 1] = i + 1;  // J_k, shifted right
    return unit_columns(f, n, cols);
}

Matrix even_pair_right(std::size_t k, const Field& f) {
    const std::size_t n = k + 2;
    std::vector<std::optional<std::size_t>> cols(n);
    for (std::size_t i = 1; i <= k - 1; ++i) cols[i - 1] = 2 + i;  // shifted identity
    cols[k] = 2;                                                   // J_2 corner
    return unit_columns(f, n, cols);
}

// ---- single block J_k, odd k >= 3 ------------------------------------------

Matrix single_odd_left(std::size_t k, const Field& f) {
    std::vector<std::optional<std::size_t>> cols(k);
    for (std::size_t i = 1; i <= k - 2; ++i) cols[i - 1] = i + 2;
    cols[k - 1] = 2;
    return unit_columns(f, k, cols);
}

Matrix single_odd_right(std::size_t k, const Field& f) {
    std::vector<std::optional<std::size_t>> cols(k);
    cols[0] = k;
    for (std::size_t j = 2; j <= k - 1; ++j) cols[j - 1] = j - 1;
    return unit_columns(f, k, cols);
}

// Odd-even interleave permutation [e1, e3, ..., e_k, e2, e4, ..., e_{k-1}].
Matrix single_odd_basis(std::size_t k, const Field& f) {
    std::vector<std::size_t> cols;
    for (std::size_t i = 1; i <= k; i += 2) cols.push_back(i);
    for (std::size_t i = 2; i <= k; i += 2) cols.push_back(i);
    return permutation_columns(f, cols);
}

// ---- single block J_k, even k >= 4 ------------------------------------------

Matrix single_even_left(std::size_t k, const Field& f) {
    Matrix m(f, k, k);
    const Scalar one = Scalar::one(f);
    m.set(2, 0, one);
    m.set(2, 1, -one);
    m.set(3, 1, one);
    for (std::size_t i = 1; i <= k - 4; ++i) m.set(4 + i - 1, 2 + i - 1, one);
    m.set(1, k - 2, one);
    m.set(1, k - 1, one);
    return m;
}

// Second factor of the even-size construction: the odd-case shift matrix
// with an extra unit at (1,3).
Matrix single_even_right(std::size_t k, const Field& f) {
    Matrix m = single_odd_right(k, f);
    m.set(0, 2, Scalar::one(f));
    return m;
}

// [e1, e3, ..., e_{k-1}, e2, e4-e3, e6-e5, ..., e_k-e_{k-1}]
Matrix single_even_basis(std::size_t k, const Field& f) {
    Matrix m(f, k, k);
    const Scalar one = Scalar::one(f);
    std::size_t j = 0;
    for (std::size_t i = 1; i <= k - 1; i += 2) m.set(i - 1, j++, one);
    m.set(1, j++, one);
    for (std::size_t i = 4; i <= k; i += 2) {
        m.set(i - 1, j, one);
        m.set(i - 2, j, -one);
        ++j;
    }
    return m;
}

// ---- the J_2, J_2, J_2 triple ------------------------------------------------

Matrix triple_left(const Field& f) {
    return unit_columns(f, 6, {4, std::nullopt, 6, std::nullopt, std::nullopt, 2});
}

Matrix triple_right(const Field& f) {
    return unit_columns(f, 6, {6, std::nullopt, 1, std::nullopt, 3, std::nullopt});
}

Matrix triple_basis(const Field& f) {
    return permutation_columns(f, {1, 4, 3, 6, 2, 5});
}

// ---- chain decomposition of unit-column nilpotents ---------------------------

// For a matrix whose columns are distinct unit vectors or zero, the Jordan
// chains are literally the orbits of the successor map. Returns the chains
// as 1-based index sequences, longest first (starts ascending on ties).
std::vector<std::vector<std::size_t>> unit_chains(const Matrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::optional<std::size_t>> succ(n);
    std::vector<bool> is_image(n, false);
    for (std::size_t j = 0; j < n; ++j) {
        std::optional<std::size_t> target;
        for (std::size_t i = 0; i < n; ++i) {
            if (m.at(i, j).is_zero()) continue;
            if (target || !m.at(i, j).is_one())
                throw Error("internal: not a unit-column matrix");
            target = i;
        }
        if (target) {
            if (is_image[*target]) throw Error("internal: unit columns collide");
            is_image[*target] = true;
            succ[j] = target;
        }
    }
    std::vector<std::vector<std::size_t>> chains;
    for (std::size_t start = 0; start < n; ++start) {
        if (is_image[start]) continue;
        std::vector<std::size_t> chain;
        std::optional<std::size_t> cur = start;
        while (cur) {
            chain.push_back(*cur + 1);
            cur = succ[*cur];
        }
        chains.push_back(std::move(chain));
    }
    std::stable_sort(chains.begin(), chains.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    std::size_t covered = 0;
    for (const auto& c : chains) covered += c.size();
    if (covered != n) throw Error("internal: chain cover has a cycle");
    return chains;
}

Matrix chain_basis(const Field& f, const Matrix& m,
                   const std::pair<std::size_t, std::size_t>& expected_sizes) {
    const auto chains = unit_chains(m);
    if (chains.size() != 2 || chains[0].size() != expected_sizes.first ||
        chains[1].size() != expected_sizes.second)
        throw Error("internal: chain sizes disagree with the closed formula");
    std::vector<std::size_t> cols;
    for (const auto& chain : chains) cols.insert(cols.end(), chain.begin(), chain.end());
    Matrix q = permutation_columns(f, cols);
    const NilpotentPartition expected{{expected_sizes.first, expected_sizes.second}};
    if (m.conjugate(q) != jordan_matrix(f, expected))
        throw Error("internal: chain basis fails the conjugation identity");
    return q;
}

// ---- normal-form group machinery ---------------------------------------------

struct Group {
    std::vector<std::size_t> block_sizes;  // in-group target = Dg of these
    Matrix left, right, similarity;
    RightLastRow last_row;
};

void check_group(const Group& g, const Field& f) {
    const std::size_t n = g.left.rows();
    NilpotentPartition p{g.block_sizes};
    const Matrix target = jordan_matrix(f, p);
    if (g.left * g.right != target.conjugate(g.similarity))
        throw Error("internal: group product mismatch");
    if (!g.left.is_nilpotent() || !g.right.is_nilpotent())
        throw Error("internal: group factor not nilpotent");
    for (std::size_t j = 0; j < n; ++j)
        if (!g.left.at(0, j).is_zero()) throw Error("internal: left factor first row not zero");
    for (std::size_t i = 0; i < n; ++i)
        if (!g.left.at(i, n - 1).is_zero()) throw Error("internal: left factor last column not zero");
    for (std::size_t j = 0; j < n; ++j) {
        const Scalar& v = g.right.at(n - 1, j);
        const bool want_one = g.last_row == RightLastRow::E1T && j == 0;
        if (want_one ? !v.is_one() : !v.is_zero())
            throw Error("internal: right factor last row malformed");
    }
}

Group single_block_group(std::size_t k, const Field& f) {
    if (k == 2) throw UnsupportedSize("no normal-form factorization of a bare J_2");
    if (k == 0) throw InvalidK("block size must be positive");
    Group g{{k}, Matrix(f, k, k), Matrix(f, k, k), Matrix::identity(f, k), RightLastRow::Zero};
    if (k == 1) {
        check_group(g, f);
        return g;  // 0 = 0 * 0
    }
    if (k % 2 == 1) {
        const Matrix q = single_odd_basis(k, f);
        g.left = single_odd_left(k, f).conjugate(q);
        g.right = single_odd_right(k, f).conjugate(q);
        g.similarity = q;
        g.last_row = RightLastRow::Zero;
    } else {
        const Matrix q = single_even_basis(k, f);
        g.left = single_even_left(k, f).conjugate(q);
        g.right = single_even_right(k, f).conjugate(q);
        g.similarity = q;
        g.last_row = RightLastRow::E1T;
    }
    check_group(g, f);
    return g;
}

// Group Dg[J_k, J_2] for any k >= 1.
Group pair_group(std::size_t k, const Field& f) {
    const std::size_t n = k + 2;
    Group g{{k, 2}, Matrix(f, n, n), Matrix(f, n, n), Matrix::identity(f, n), RightLastRow::Zero};
    if (k == 1) {
        g.left = Matrix::unit(f, 3, 2, 0);   // E_(3,1)
        g.right = Matrix::unit(f, 3, 0, 1);  // E_(1,2)
    } else if (k % 2 == 0) {
        g.left = even_pair_left(k, f);
        g.right = even_pair_right(k, f);
    } else {
        const Matrix q = left_factor_jordan_basis(k, f);
        g.left = odd_pair_left(k, f).conjugate(q);
        g.right = odd_pair_right(k, f).conjugate(q);
        g.similarity = q;
    }
    check_group(g, f);
    return g;
}

Group triple_group(const Field& f) {
    const Matrix q = triple_basis(f);
    Group g{{2, 2, 2},
            triple_left(f).conjugate(q),
            triple_right(f).conjugate(q),
            q,
            RightLastRow::Zero};
    check_group(g, f);
    return g;
}

}  // namespace

std::pair<std::size_t, std::size_t> left_factor_jordan_sizes(std::size_t k) {
    const std::size_t q = (k - 3) / 4;
    const bool even_half = ((k - 3) / 2) % 2 == 0;
    const std::size_t a = k - 2 * q + (even_half ? 1 : -1);
    const std::size_t b = k - 2 * (1 + q);
    return {a, b};
}

std::pair<std::size_t, std::size_t> right_factor_jordan_sizes(std::size_t k) {
    const std::size_t q = (k - 3) / 4;
    return {k - q, 2 + q};
}

Matrix left_factor_jordan_basis(std::size_t k, const Field& f) {
    if (k < 3 || k % 2 == 0) throw InvalidK("need odd k >= 3");
    return chain_basis(f, odd_pair_left(k, f), left_factor_jordan_sizes(k));
}

Matrix right_factor_jordan_basis(std::size_t k, const Field& f) {
    if (k < 3 || k % 2 == 0) throw InvalidK("need odd k >= 3");
    return chain_basis(f, odd_pair_right(k, f), right_factor_jordan_sizes(k));
}

std::pair<Matrix, Matrix> factor_jk_j2(std::size_t k, const Field& f) {
    if (k == 0) throw InvalidK("need k >= 1");
    std::pair<Matrix, Matrix> r = [&] {
        if (k == 1)
            return std::make_pair(Matrix::unit(f, 3, 2, 0), Matrix::unit(f, 3, 0, 1));
        if (k % 2 == 0)
            return std::make_pair(even_pair_left(k, f), even_pair_right(k, f));
        return std::make_pair(odd_pair_left(k, f), odd_pair_right(k, f));
    }();
    const Matrix target =
        Matrix::block_diag({Matrix::jordan_block(f, k), Matrix::jordan_block(f, 2)});
    if (r.first * r.second != target) throw Error("internal: pair product mismatch");
    if (!r.first.is_nilpotent() || !r.second.is_nilpotent())
        throw Error("internal: pair factor not nilpotent");
    if (k % 2 == 1 && (r.first.rank() != k || r.second.rank() != k))
        throw Error("internal: pair factor rank mismatch");
    return r;
}

NormalFormFactorization factor_single_block(std::size_t k, const Field& f) {
    Group g = single_block_group(k, f);
    return {std::move(g.left), std::move(g.right), g.last_row, Matrix::identity(f, k),
            std::move(g.similarity)};
}

NormalFormFactorization factor_triple_j2(const Field& f) {
    Group g = triple_group(f);
    return {std::move(g.left), std::move(g.right), g.last_row, Matrix::identity(f, 6),
            std::move(g.similarity)};
}

NormalFormFactorization factor_nilpotent_normal_form(const NilpotentPartition& partition,
                                                     const Field& f) {
    std::vector<std::size_t> sizes = partition.sizes;
    std::sort(sizes.rbegin(), sizes.rend());
    if (sizes.size() == 1 && sizes[0] == 2)
        throw ExceptionalCase("a bare 2x2 nilpotent block has no such factorization");
    const std::size_t n = partition.sum();

    // Split off the size-2 blocks and decide the grouping.
    std::vector<std::size_t> others;
    std::size_t twos = 0;
    for (std::size_t s : sizes) {
        if (s == 2)
            ++twos;
        else
            others.push_back(s);
    }

    std::vector<Group> groups;
    if (twos % 2 == 1) {
        if (!others.empty()) {
            // Attach one J_2 to the largest other block.
            groups.push_back(pair_group(others.front(), f));
            others.erase(others.begin());
            twos -= 1;
        } else {
            // Only size-2 blocks and an odd count: one triple, pairs for the rest.
            groups.push_back(triple_group(f));
            twos -= 3;
        }
    }
    for (; twos >= 2; twos -= 2) groups.push_back(pair_group(2, f));
    for (std::size_t s : others) groups.push_back(single_block_group(s, f));

    // A group whose right factor ends in a zero row goes last whenever one
    // exists, so the assembled last row is zero. Stable: relative order of
    // equal keys is the construction order.
    std::stable_partition(groups.begin(), groups.end(),
                          [](const Group& g) { return g.last_row == RightLastRow::E1T; });

    // Reordering permutation from the canonical descending block order to the
    // grouped order.
    std::vector<std::size_t> grouped_sizes;
    for (const auto& g : groups)
        grouped_sizes.insert(grouped_sizes.end(), g.block_sizes.begin(), g.block_sizes.end());
    std::vector<std::size_t> offsets_canonical(sizes.size()), used(sizes.size(), 0);
    {
        std::size_t off = 0;
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            offsets_canonical[i] = off;
            off += sizes[i];
        }
    }
    Matrix reorder(f, n, n);
    {
        std::size_t target_off = 0;
        for (std::size_t s : grouped_sizes) {
            // first unused canonical block of this size
            std::size_t src = sizes.size();
            for (std::size_t i = 0; i < sizes.size(); ++i)
                if (!used[i] && sizes[i] == s) {
                    src = i;
                    break;
                }
            used[src] = 1;
            for (std::size_t t = 0; t < s; ++t)
                reorder.set(offsets_canonical[src] + t, target_off + t, Scalar::one(f));
            target_off += s;
        }
    }

    NormalFormFactorization out{Matrix(f, n, n), Matrix(f, n, n), RightLastRow::Zero,
                                std::move(reorder), Matrix(f, n, n)};
    if (groups.empty()) {  // empty partition
        out.similarity = Matrix::identity(f, 0);
        return out;
    }

    std::vector<Matrix> lefts, rights, sims;
    for (const auto& g : groups) {
        lefts.push_back(g.left);
        rights.push_back(g.right);
        sims.push_back(g.similarity);
    }
    out.left = Matrix::block_diag(lefts);
    out.right = Matrix::block_diag(rights);
    out.right_last_row = groups.back().last_row;
    out.similarity = out.reorder * Matrix::block_diag(sims);

    // When the final group ends in a block-local e1^T and is not the leading
    // group, one extra transposition moves that unit into global column 1.
    if (out.right_last_row == RightLastRow::E1T) {
        const std::size_t c = n - groups.back().left.rows();  // 0-based start of last group
        if (c > 0) {
            Matrix swap = Matrix::identity(f, n);
            swap.set(0, 0, Scalar::zero(f));
            swap.set(c, c, Scalar::zero(f));
            swap.set(0, c, Scalar::one(f));
            swap.set(c, 0, Scalar::one(f));
            out.left = out.left.conjugate(swap);
            out.right = out.right.conjugate(swap);
            out.similarity = out.similarity * swap;
        }
    }

    // Whole-matrix certification.
    NilpotentPartition canonical{sizes};
    if (out.left * out.right != jordan_matrix(f, canonical).conjugate(out.similarity))
        throw Error("internal: assembled normal form product mismatch");
    if (!out.left.is_nilpotent() || !out.right.is_nilpotent())
        throw Error("internal: assembled factor not nilpotent");
    for (std::size_t j = 0; j < n; ++j) {
        if (!out.left.at(0, j).is_zero())
            throw Error("internal: assembled left first row not zero");
        if (!out.left.at(j, n - 1).is_zero())
            throw Error("internal: assembled left last column not zero");
        const Scalar& v = out.right.at(n - 1, j);
        const bool want_one = out.right_last_row == RightLastRow::E1T && j == 0;
        if (want_one ? !v.is_one() : !v.is_zero())
            throw Error("internal: assembled right last row malformed");
    }
    return out;
}

}  // namespace nilfactor
