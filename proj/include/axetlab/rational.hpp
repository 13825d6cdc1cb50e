#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "axetlab/errors.hpp"

namespace axetlab {

/// Arbitrary-precision rational number, always stored in lowest terms with a
/// positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(int value) : value_(value) {}
    Rational(const mpz_class& value) : value_(value) {}
    Rational(long numerator, long denominator)
    {
        if (denominator == 0) {
            fail(ErrorKind::DivisionByZero, "rational with zero denominator");
        }
        value_ = mpq_class(numerator, denominator);
        value_.canonicalize();
    }
    Rational(const mpz_class& numerator, const mpz_class& denominator)
    {
        if (denominator == 0) {
            fail(ErrorKind::DivisionByZero, "rational with zero denominator");
        }
        value_ = mpq_class(numerator, denominator);
        value_.canonicalize();
    }
    explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

    /// Parses "n" or "n/d" with optional leading sign.
    static Rational parse(std::string_view text)
    {
        mpq_class q;
        if (text.empty() || q.set_str(std::string(text), 10) != 0) {
            fail(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'");
        }
        if (q.get_den() == 0) {
            fail(ErrorKind::DivisionByZero, "rational with zero denominator");
        }
        q.canonicalize();
        return Rational(std::move(q));
    }

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& value() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational inverse() const
    {
        if (is_zero()) {
            fail(ErrorKind::DivisionByZero, "inverse of zero");
        }
        return Rational(mpq_class(1) / value_);
    }

    Rational operator-() const { return Rational(mpq_class(-value_)); }

    Rational& operator+=(const Rational& other)
    {
        value_ += other.value_;
        return *this;
    }
    Rational& operator-=(const Rational& other)
    {
        value_ -= other.value_;
        return *this;
    }
    Rational& operator*=(const Rational& other)
    {
        value_ *= other.value_;
        return *this;
    }
    Rational& operator/=(const Rational& other)
    {
        if (other.is_zero()) {
            fail(ErrorKind::DivisionByZero, "rational division by zero");
        }
        value_ /= other.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::string to_string() const { return value_.get_str(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

private:
    mpq_class value_{0};
};

inline Rational pow(Rational base, unsigned exponent)
{
    Rational result(1);
    while (exponent > 0) {
        if (exponent & 1U) {
            result *= base;
        }
        base *= base;
        exponent >>= 1U;
    }
    return result;
}

/// The field of rationals as a descriptor; values carry no field state.
struct RationalField {
    using value_type = Rational;

    value_type zero() const { return Rational(0); }
    value_type one() const { return Rational(1); }
    value_type from_rational(const Rational& q) const { return q; }
    std::uint64_t characteristic() const { return 0; }
    std::string describe() const { return "rational"; }
    bool contains(const value_type&) const { return true; }

    friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

} // namespace axetlab
