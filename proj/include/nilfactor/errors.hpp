#pragma once

#include <stdexcept>
#include <string>

namespace nilfactor {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arithmetic on scalars from different fields.
struct FieldMismatch : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

// Inverse/conjugation/LU of a matrix without full rank.
struct SingularMatrix : Error {
    using Error::Error;
};

struct NotNilpotent : Error {
    using Error::Error;
};

// factor() on an invertible input: a product of two nilpotent matrices can
// never have full rank.
struct NotSingular : Error {
    using Error::Error;
};

// The 2x2 nonzero nilpotent class, which has no two-nilpotent factorization.
struct ExceptionalCase : Error {
    using Error::Error;
};

struct UnsupportedSize : Error {
    using Error::Error;
};

struct InvalidK : Error {
    using Error::Error;
};

// lu_similarity ran out of candidates; certified search means this is an
// internal fault, not a wrong answer.
struct SearchExhausted : Error {
    using Error::Error;
};

struct SquareZero : Error {
    using Error::Error;
};

struct ScalarMatrix : Error {
    using Error::Error;
};

// A acts as a scalar on F^n / N(A) (equivalently A^2 = mu*A with mu != 0):
// no x0 yields an independent bordering basis; callers take a direct branch.
struct QuotientScalar : Error {
    using Error::Error;
};

// Bordering basis came out dependent.
struct DependentSystem : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace nilfactor
