#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "maninkit/errors.hpp"

namespace maninkit {

using Rational = boost::multiprecision::cpp_rational;

// An exact coefficient field: the rationals, or a prime field F_p with
// p < 2^16.  Value type; equality is structural.
class Field {
public:
    static Field rationals() { return Field(0); }
    static Field prime(std::uint32_t p);

    bool is_rational() const { return p_ == 0; }
    bool is_prime_field() const { return p_ != 0; }
    // Characteristic: 0 for the rationals, p for F_p.
    std::uint32_t characteristic() const { return p_; }
    std::uint32_t p() const;

    bool operator==(const Field&) const = default;
    std::string to_string() const;

private:
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_;
};

// One exact field element.  Every Scalar carries its field tag; arithmetic
// between different fields is rejected rather than coerced.
class Scalar {
public:
    // Default-constructed Scalar is 0 in Q; containers use the explicit
    // zero(field) factory everywhere a prime field may be in play.
    Scalar() : field_(Field::rationals()) {}

    static Scalar zero(const Field& f);
    static Scalar one(const Field& f);
    static Scalar of_int(const Field& f, long long value);
    static Scalar of_rational(Rational value);
    /// num/den in the given field; in F_p this is num * den^{-1} and den
    /// must be invertible.
    static Scalar of_rational(const Field& f, long long num, long long den);
    // Accepts "12", "-7", "3/4" (the slash form requires an invertible
    // denominator; over F_p it means a * b^{-1}).
    static Scalar parse(const Field& f, const std::string& token);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string to_string() const;

    // Raw accessors; precondition: the matching field kind.
    const Rational& rat() const;
    std::uint32_t residue() const;

private:
    explicit Scalar(const Field& f) : field_(f) {}
    void require_same_field(const Scalar& o, const char* op) const;

    Field field_;
    Rational q_;            // used when field_ is rational
    std::uint32_t r_ = 0;   // used when field_ is prime
};

}  // namespace maninkit
