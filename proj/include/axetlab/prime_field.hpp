#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "axetlab/errors.hpp"
#include "axetlab/rational.hpp"

namespace axetlab {

inline bool is_prime(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

/// Residue class modulo an odd prime. The modulus travels with the value so
/// that mixing two different prime fields is caught at the operation.
class PrimeFieldElement {
public:
    PrimeFieldElement() = default;
    PrimeFieldElement(std::uint64_t residue, std::uint64_t modulus)
        : residue_(modulus == 0 ? 0 : residue % modulus), modulus_(modulus)
    {
    }

    std::uint64_t residue() const { return residue_; }
    std::uint64_t modulus() const { return modulus_; }
    bool is_zero() const { return residue_ == 0; }
    bool is_one() const { return residue_ == 1; }

    PrimeFieldElement operator-() const { return {residue_ == 0 ? 0 : modulus_ - residue_, modulus_}; }

    PrimeFieldElement& operator+=(const PrimeFieldElement& other)
    {
        check(other);
        residue_ = (residue_ + other.residue_) % modulus_;
        return *this;
    }
    PrimeFieldElement& operator-=(const PrimeFieldElement& other)
    {
        check(other);
        residue_ = (residue_ + modulus_ - other.residue_) % modulus_;
        return *this;
    }
    PrimeFieldElement& operator*=(const PrimeFieldElement& other)
    {
        check(other);
        residue_ = static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(residue_) * other.residue_) % modulus_);
        return *this;
    }
    PrimeFieldElement& operator/=(const PrimeFieldElement& other) { return *this *= other.inverse(); }

    PrimeFieldElement inverse() const
    {
        if (residue_ == 0) {
            fail(ErrorKind::DivisionByZero, "inverse of zero in F_" + std::to_string(modulus_));
        }
        // Fermat: x^(p-2)
        return power(modulus_ - 2);
    }

    PrimeFieldElement power(std::uint64_t exponent) const
    {
        PrimeFieldElement base = *this;
        PrimeFieldElement result(1, modulus_);
        while (exponent > 0) {
            if (exponent & 1U) {
                result *= base;
            }
            base *= base;
            exponent >>= 1U;
        }
        return result;
    }

    friend PrimeFieldElement operator+(PrimeFieldElement a, const PrimeFieldElement& b) { return a += b; }
    friend PrimeFieldElement operator-(PrimeFieldElement a, const PrimeFieldElement& b) { return a -= b; }
    friend PrimeFieldElement operator*(PrimeFieldElement a, const PrimeFieldElement& b) { return a *= b; }
    friend PrimeFieldElement operator/(PrimeFieldElement a, const PrimeFieldElement& b) { return a /= b; }

    friend bool operator==(const PrimeFieldElement& a, const PrimeFieldElement& b)
    {
        a.check(b);
        return a.residue_ == b.residue_;
    }

    std::string to_string() const { return std::to_string(residue_); }
    friend std::ostream& operator<<(std::ostream& os, const PrimeFieldElement& x) { return os << x.residue_; }

private:
    void check(const PrimeFieldElement& other) const
    {
        if (modulus_ != other.modulus_) {
            fail(ErrorKind::MixedFields, "F_" + std::to_string(modulus_) + " vs F_" + std::to_string(other.modulus_));
        }
    }

    std::uint64_t residue_ = 0;
    std::uint64_t modulus_ = 0;
};

inline PrimeFieldElement pow(const PrimeFieldElement& base, unsigned exponent) { return base.power(exponent); }

class PrimeField {
public:
    using value_type = PrimeFieldElement;

    explicit PrimeField(std::uint64_t p) : p_(p)
    {
        if (p == 2) {
            fail(ErrorKind::BadField, "characteristic 2 is not supported");
        }
        if (!is_prime(p)) {
            fail(ErrorKind::BadField, std::to_string(p) + " is not prime");
        }
        if (p > (std::uint64_t{1} << 62U)) {
            fail(ErrorKind::BadField, "modulus too large");
        }
    }

    std::uint64_t modulus() const { return p_; }
    value_type zero() const { return {0, p_}; }
    value_type one() const { return {1, p_}; }
    value_type element(std::int64_t value) const
    {
        auto p = static_cast<std::int64_t>(p_);
        return {static_cast<std::uint64_t>(((value % p) + p) % p), p_};
    }

    /// Reduces n/d mod p; fails when p divides the denominator.
    value_type from_rational(const Rational& q) const
    {
        mpz_class p(std::to_string(p_));
        mpz_class num = q.numerator() % p;
        if (num < 0) {
            num += p;
        }
        mpz_class den = q.denominator() % p;
        if (den == 0) {
            fail(ErrorKind::DivisionByZero, q.to_string() + " has no image in F_" + std::to_string(p_));
        }
        value_type n(std::stoull(num.get_str()), p_);
        value_type d(std::stoull(den.get_str()), p_);
        return n / d;
    }

    std::uint64_t characteristic() const { return p_; }
    std::string describe() const { return "prime " + std::to_string(p_); }
    bool contains(const value_type& x) const { return x.modulus() == p_; }

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

private:
    std::uint64_t p_;
};

} // namespace axetlab
