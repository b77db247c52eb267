#include "nilfactor/field.hpp"

#include <cstdlib>

namespace nilfactor {

namespace {

bool is_prime_u64(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    // Extended Euclid on (a, p), p prime, a in [1, p).
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

}  // namespace

Field Field::prime(std::uint64_t p) {
    // Trial division: moduli here are desk-scale. The bound keeps products
    // of two residues inside 64 bits.
    if (p > (1ULL << 31)) throw Error("prime modulus too large: " + std::to_string(p));
    if (!is_prime_u64(p)) throw Error("modulus is not prime: " + std::to_string(p));
    return Field(Kind::Prime, p);
}

Field Field::parse(const std::string& text) {
    if (text == "QQ") return rationals();
    if (text.size() > 4 && text.compare(0, 3, "GF(") == 0 && text.back() == ')') {
        const std::string body = text.substr(3, text.size() - 4);
        if (body.empty() || body.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad field spec: " + text);
        return prime(std::strtoull(body.c_str(), nullptr, 10));
    }
    throw ParseError("bad field spec: " + text);
}

std::string Field::str() const {
    if (kind_ == Kind::Rationals) return "QQ";
    return "GF(" + std::to_string(p_) + ")";
}

Scalar Scalar::from_int(const Field& f, long long v) {
    if (f.is_rationals()) return Scalar(f, Rational(v), 0);
    const std::int64_t p = static_cast<std::int64_t>(f.modulus());
    std::int64_t r = static_cast<std::int64_t>(v % p);
    if (r < 0) r += p;
    return Scalar(f, Rational(0), static_cast<std::uint64_t>(r));
}

Scalar Scalar::from_integer(const Field& f, const Integer& v) {
    if (f.is_rationals()) return Scalar(f, Rational(v), 0);
    Integer p(f.modulus());
    Integer r = v % p;
    if (r < 0) r += p;
    return Scalar(f, Rational(0), r.convert_to<std::uint64_t>());
}

Scalar Scalar::rational(const Rational& q) {
    return Scalar(Field::rationals(), q, 0);
}

Scalar Scalar::residue(const Field& f, std::uint64_t r) {
    if (f.is_rationals()) throw FieldMismatch("residue() needs a prime field");
    return Scalar(f, Rational(0), r % f.modulus());
}

bool Scalar::is_zero() const {
    return field_.is_rationals() ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_rationals() ? rat_ == 1 : res_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (!(field_ == o.field_))
        throw FieldMismatch("operands from " + field_.str() + " and " + o.field_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_rationals()) return Scalar(field_, rat_ + o.rat_, 0);
    return Scalar(field_, Rational(0), (res_ + o.res_) % field_.modulus());
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_rationals()) return Scalar(field_, rat_ - o.rat_, 0);
    const std::uint64_t p = field_.modulus();
    return Scalar(field_, Rational(0), (res_ + p - o.res_) % p);
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_rationals()) return Scalar(field_, rat_ * o.rat_, 0);
    return Scalar(field_, Rational(0), (res_ * o.res_) % field_.modulus());
}

Scalar Scalar::operator-() const {
    if (field_.is_rationals()) return Scalar(field_, -rat_, 0);
    const std::uint64_t p = field_.modulus();
    return Scalar(field_, Rational(0), (p - res_) % p);
}

Scalar Scalar::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in " + field_.str());
    if (field_.is_rationals()) return Scalar(field_, Rational(1) / rat_, 0);
    return Scalar(field_, Rational(0), mod_inverse(res_, field_.modulus()));
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(field_ == o.field_)) return false;
    return field_.is_rationals() ? rat_ == o.rat_ : res_ == o.res_;
}

const Rational& Scalar::rat() const {
    if (!field_.is_rationals()) throw FieldMismatch("rat() on a prime-field scalar");
    return rat_;
}

std::uint64_t Scalar::res() const {
    if (field_.is_rationals()) throw FieldMismatch("res() on a rational scalar");
    return res_;
}

std::string Scalar::str() const {
    if (!field_.is_rationals()) return std::to_string(res_);
    const Integer num = numerator(rat_);
    const Integer den = denominator(rat_);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
    if (text.empty()) throw ParseError("empty scalar");
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            Integer v(text);
            return from_integer(f, v);
        }
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + text + "'");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        if (f.is_rationals()) return rational(Rational(num, den));
        return from_integer(f, num) * from_integer(f, den).inv();
    } catch (const std::runtime_error& e) {
        throw ParseError("bad scalar '" + text + "': " + e.what());
    }
}

}  // namespace nilfactor
