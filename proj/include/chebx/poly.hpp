#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "chebx/rational.hpp"

namespace chebx {

/// Dense univariate polynomial over Rational, monomial basis.
/// coeffs()[i] is the coefficient of x^i; the top stored coefficient is
/// nonzero, and the zero polynomial stores nothing (degree() == -1).
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static Poly constant(Rational v) { return Poly({std::move(v)}); }
    /// c * x^k
    static Poly monomial(unsigned k, Rational c = Rational(1));
    static Poly x() { return monomial(1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    /// Coefficient of x^i; zero beyond the degree.
    Rational coeff(unsigned i) const {
        return i < c_.size() ? c_[i] : Rational(0);
    }
    /// Pre: !is_zero().
    const Rational& leading() const { return c_.back(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    friend bool operator==(const Poly& a, const Poly& b) = default;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Rational& s, const Poly& p);
Poly operator*(const Poly& p, const Rational& s);

/// Formal derivative.
Poly derivative(const Poly& p);

/// Antiderivative with constant term fixed to 0.
Poly antiderivative(const Poly& p);

/// p(a*x + b).
Poly compose_linear(const Poly& p, const Rational& a, const Rational& b);

/// Exact value p(x0).
Rational eval(const Poly& p, const Rational& x0);

/// Long division: p = q*d + r with deg r < deg d. Throws on zero divisor.
std::pair<Poly, Poly> divmod(const Poly& p, const Poly& d);

/// Canonical text form: terms in decreasing degree, e.g. "8*x^4 - 8*x^2 + 1".
std::string to_string(const Poly& p);

}  // namespace chebx
