#pragma once

#include <cstdint>
#include <random>

#include "nilfactor/matrix.hpp"

namespace nilfactor {

inline constexpr std::uint64_t kDefaultSeed = 20240613ULL;

// Seeded deterministic sampler. Draws use explicit modular reduction of the
// raw engine output so runs reproduce across compilers.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    std::uint64_t below(std::uint64_t bound) { return bound ? engine_() % bound : 0; }

    // Uniform residue over GF(p); small integer in [-3, 3] over QQ.
    Scalar scalar(const Field& f) {
        if (f.is_rationals())
            return Scalar::from_int(f, static_cast<long long>(below(7)) - 3);
        return Scalar::residue(f, below(f.modulus()));
    }

    Matrix matrix(const Field& f, std::size_t rows, std::size_t cols) {
        Matrix m(f, rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m.set(i, j, scalar(f));
        return m;
    }

    // Rejection sampling on the rank.
    Matrix invertible(const Field& f, std::size_t n) {
        while (true) {
            Matrix m = matrix(f, n, n);
            if (m.rank() == n) return m;
        }
    }

    // Singular matrix of the given rank: X * D * Y with invertible X, Y and
    // a rank-deficient diagonal core.
    Matrix singular(const Field& f, std::size_t n, std::size_t rank) {
        Matrix d(f, n, n);
        for (std::size_t i = 0; i < rank; ++i) {
            Scalar v = scalar(f);
            while (v.is_zero()) v = scalar(f);
            d.set(i, i, v);
        }
        return invertible(f, n) * d * invertible(f, n);
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace nilfactor
