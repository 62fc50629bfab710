#include "maninkit/scalar.hpp"

#include <cctype>
#include <limits>

namespace maninkit {

namespace {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) acc = acc * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
    if (p >= (1u << 16))
        throw InputError("prime field modulus must be below 2^16, got " +
                         std::to_string(p));
    if (!is_prime_u32(p))
        throw InputError("prime field modulus must be prime, got " +
                         std::to_string(p));
    return Field(p);
}

std::uint32_t Field::p() const {
    if (p_ == 0) throw InternalError("Field::p() called on the rationals");
    return p_;
}

std::string Field::to_string() const {
    return is_rational() ? "Q" : "F" + std::to_string(p_);
}

Scalar Scalar::zero(const Field& f) { return Scalar(f); }

Scalar Scalar::one(const Field& f) { return of_int(f, 1); }

Scalar Scalar::of_int(const Field& f, long long value) {
    Scalar s(f);
    if (f.is_rational()) {
        s.q_ = Rational(value);
    } else {
        long long p = f.p();
        long long r = value % p;
        if (r < 0) r += p;
        s.r_ = static_cast<std::uint32_t>(r);
    }
    return s;
}

Scalar Scalar::of_rational(Rational value) {
    Scalar s(Field::rationals());
    s.q_ = std::move(value);
    return s;
}

Scalar Scalar::of_rational(const Field& f, long long num, long long den) {
    return of_int(f, num) / of_int(f, den);
}

Scalar Scalar::parse(const Field& f, const std::string& token) {
    auto bad = [&]() -> InputError {
        return InputError("cannot parse scalar token \"" + token + "\" over " +
                          f.to_string());
    };
    auto parse_int = [&](const std::string& part) -> long long {
        if (part.empty()) throw bad();
        std::size_t i = 0;
        bool neg = false;
        if (part[0] == '+' || part[0] == '-') {
            neg = part[0] == '-';
            i = 1;
        }
        if (i == part.size()) throw bad();
        // Guard against overflow of long long while staying exact: fall back
        // to Rational for huge rational literals.
        long long acc = 0;
        for (; i < part.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) throw bad();
            if (acc > (std::numeric_limits<long long>::max() - 9) / 10)
                throw InputError("integer literal too large: " + part);
            acc = acc * 10 + (part[i] - '0');
        }
        return neg ? -acc : acc;
    };
    auto slash = token.find('/');
    if (slash == std::string::npos) return of_int(f, parse_int(token));
    long long num = parse_int(token.substr(0, slash));
    long long den = parse_int(token.substr(slash + 1));
    Scalar d = of_int(f, den);
    if (d.is_zero())
        throw InputError("scalar token \"" + token +
                         "\" has a non-invertible denominator over " +
                         f.to_string());
    return of_int(f, num) / d;
}

bool Scalar::is_zero() const {
    return field_.is_rational() ? q_.is_zero() : r_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_rational() ? q_ == 1 : r_ == 1;
}

void Scalar::require_same_field(const Scalar& o, const char* op) const {
    if (!(field_ == o.field_))
        throw FieldMismatchError(std::string("mixed-field arithmetic (") + op +
                                 ") between " + field_.to_string() + " and " +
                                 o.field_.to_string());
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_field(o, "+");
    Scalar s(field_);
    if (field_.is_rational())
        s.q_ = q_ + o.q_;
    else
        s.r_ = (r_ + o.r_) % field_.p();
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_same_field(o, "-");
    Scalar s(field_);
    if (field_.is_rational())
        s.q_ = q_ - o.q_;
    else
        s.r_ = (r_ + field_.p() - o.r_) % field_.p();
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_field(o, "*");
    Scalar s(field_);
    if (field_.is_rational())
        s.q_ = q_ * o.q_;
    else
        s.r_ = static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(r_) * o.r_ % field_.p());
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
    require_same_field(o, "/");
    return *this * o.inverse();
}

Scalar Scalar::operator-() const {
    Scalar s(field_);
    if (field_.is_rational())
        s.q_ = -q_;
    else if (r_ != 0)
        s.r_ = field_.p() - r_;
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw InputError("division by zero in " + field_.to_string());
    Scalar s(field_);
    if (field_.is_rational())
        s.q_ = Rational(1) / q_;
    else
        s.r_ = mod_pow(r_, field_.p() - 2, field_.p());
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(field_ == o.field_)) return false;
    return field_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::to_string() const {
    if (field_.is_rational()) {
        return q_.str();
    }
    return std::to_string(r_);
}

const Rational& Scalar::rat() const {
    if (!field_.is_rational())
        throw InternalError("Scalar::rat() on a prime-field element");
    return q_;
}

std::uint32_t Scalar::residue() const {
    if (field_.is_rational())
        throw InternalError("Scalar::residue() on a rational element");
    return r_;
}

}  // namespace maninkit
