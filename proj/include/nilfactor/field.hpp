#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "nilfactor/errors.hpp"

namespace nilfactor {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// An exact coefficient field: the rationals, or GF(p) for a prime p that
// fits comfortably in a machine word. All arithmetic downstream is exact;
// there is no floating point anywhere in the library.
class Field {
  public:
    enum class Kind { Rationals, Prime };

    static Field rationals() { return Field(Kind::Rationals, 0); }
    static Field prime(std::uint64_t p);

    // Textual forms "QQ" and "GF(p)", used by the CLI and file formats.
    static Field parse(const std::string& text);
    std::string str() const;

    Kind kind() const { return kind_; }
    std::uint64_t modulus() const { return p_; }
    bool is_rationals() const { return kind_ == Kind::Rationals; }

    // Number of elements; 0 means infinite.
    std::uint64_t size() const { return kind_ == Kind::Prime ? p_ : 0; }

    bool operator==(const Field& other) const = default;

  private:
    Field(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}

    Kind kind_;
    std::uint64_t p_;
};

// A value in a specific Field: a rational in lowest terms, or a canonical
// residue in [0, p). Immutable; all operations return fresh values.
class Scalar {
  public:
    Scalar() : field_(Field::rationals()), rat_(0), res_(0) {}

    static Scalar zero(const Field& f) { return from_int(f, 0); }
    static Scalar one(const Field& f) { return from_int(f, 1); }
    static Scalar from_int(const Field& f, long long v);
    static Scalar from_integer(const Field& f, const Integer& v);
    static Scalar rational(const Rational& q);
    static Scalar residue(const Field& f, std::uint64_t r);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inv() const;
    Scalar operator/(const Scalar& o) const { return *this * o.inv(); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // The rational payload (QQ only).
    const Rational& rat() const;
    // The canonical residue (GF(p) only).
    std::uint64_t res() const;

    std::string str() const;
    // Parses "a", "-a" or "a/b"; integers are reduced mod p over GF(p).
    static Scalar parse(const Field& f, const std::string& text);

  private:
    Scalar(const Field& f, Rational q, std::uint64_t r)
        : field_(f), rat_(std::move(q)), res_(r) {}

    void check_same_field(const Scalar& o) const;

    Field field_;
    Rational rat_;       // used iff field is QQ
    std::uint64_t res_;  // used iff field is GF(p)
};

}  // namespace nilfactor
