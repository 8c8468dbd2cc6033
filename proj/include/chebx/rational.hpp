#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

namespace chebx {

/// Unbounded signed integer.
using Integer = mpz_class;

/// C(n, k); zero when k > n.
Integer binomial(unsigned long n, unsigned long k);

/// n! exactly.
Integer factorial(unsigned long n);

/// 2^e exactly.
Integer pow2(unsigned long e);

/// Arbitrary-precision rational, always reduced: gcd(|num|, den) = 1,
/// den > 0, zero stored as 0/1. Equality is therefore structural.
/// Immutable in spirit; every operation returns a fresh value.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& num, const Integer& den);
    Rational(long num, long den);

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a);

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    friend Rational abs(const Rational& a);

    /// Canonical text form: "p/q" with q > 0, or "p" alone when q = 1.
    std::string str() const;

    /// Display-only decimal approximation.
    double approx() const { return v_.get_d(); }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

/// An exact value coefficient * pi. Closed under addition and Rational
/// scaling; deliberately not convertible to or addable with Rational.
class PiScaled {
public:
    PiScaled() = default;
    explicit PiScaled(Rational coefficient) : c_(std::move(coefficient)) {}

    const Rational& coefficient() const { return c_; }
    bool is_zero() const { return c_.is_zero(); }

    friend PiScaled operator+(const PiScaled& a, const PiScaled& b) {
        return PiScaled(a.c_ + b.c_);
    }
    friend PiScaled operator-(const PiScaled& a, const PiScaled& b) {
        return PiScaled(a.c_ - b.c_);
    }
    friend PiScaled operator-(const PiScaled& a) { return PiScaled(-a.c_); }
    friend PiScaled operator*(const Rational& s, const PiScaled& p) {
        return PiScaled(s * p.c_);
    }
    friend PiScaled operator*(const PiScaled& p, const Rational& s) {
        return PiScaled(p.c_ * s);
    }
    friend bool operator==(const PiScaled& a, const PiScaled& b) = default;

    /// Canonical text form: "(p/q)*pi" (q always printed), "0" when zero.
    std::string str() const;

private:
    Rational c_;
};

}  // namespace chebx
