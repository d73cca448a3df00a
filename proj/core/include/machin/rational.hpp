#ifndef MACHIN_RATIONAL_HPP
#define MACHIN_RATIONAL_HPP

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "machin/errors.hpp"

namespace machin {

/// Arbitrary-precision signed integer (GMP-backed).
using BigInt = mpz_class;

/// Exact arbitrary-precision rational, always kept canonical:
/// den > 0 and gcd(|num|, den) = 1 after every public operation.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt num, BigInt den);
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return sgn(num_); }

    /// Multiplicative inverse. Throws DivisionByZero on zero.
    Rational reciprocal() const;

    /// Parses "p", "p/q", or exact decimal/scientific forms such as
    /// "0.25" and "1e-30". Throws ParseError.
    static Rational from_string(std::string_view text);

    /// Canonical "num/den" form ("num" alone when den = 1).
    std::string to_string() const;

    /// Decimal expansion truncated toward zero at `places` fractional
    /// digits. A printed digit is exact, never rounded.
    std::string to_decimal(long places) const;

    /// True iff den > 0 and gcd(|num|, den) = 1. Always holds for
    /// values produced by this class; exposed for invariant tests.
    bool is_canonical() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        // Canonical form makes field equality agree with cross-multiplication.
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    void normalize();

    BigInt num_;
    BigInt den_;  // > 0
};

Rational abs(const Rational& x);
BigInt floor(const Rational& x);
BigInt ceil(const Rational& x);

/// 10^k as an exact Rational (k may be negative).
Rational pow10(long k);

/// Number of decimal digits of |n| (0 -> 1).
long decimal_digits(const BigInt& n);

}  // namespace machin

#endif
