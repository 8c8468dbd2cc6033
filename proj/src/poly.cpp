#include "chebx/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace chebx {

Poly Poly::monomial(unsigned k, Rational c) {
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = std::move(c);
    return Poly(std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> v(std::max(a.coeffs().size(), b.coeffs().size()), Rational(0));
    for (size_t i = 0; i < v.size(); ++i)
        v[i] = a.coeff(static_cast<unsigned>(i)) + b.coeff(static_cast<unsigned>(i));
    return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator-(const Poly& a) {
    std::vector<Rational> v = a.coeffs();
    for (auto& c : v) c = -c;
    return Poly(std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> v(a.coeffs().size() + b.coeffs().size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs().size(); ++i)
        for (size_t j = 0; j < b.coeffs().size(); ++j)
            v[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return Poly(std::move(v));
}

Poly operator*(const Rational& s, const Poly& p) {
    std::vector<Rational> v = p.coeffs();
    for (auto& c : v) c *= s;
    return Poly(std::move(v));
}

Poly operator*(const Poly& p, const Rational& s) { return s * p; }

Poly derivative(const Poly& p) {
    if (p.degree() < 1) return Poly();
    std::vector<Rational> v(p.coeffs().size() - 1, Rational(0));
    for (size_t i = 1; i < p.coeffs().size(); ++i)
        v[i - 1] = Rational(static_cast<long>(i)) * p.coeffs()[i];
    return Poly(std::move(v));
}

Poly antiderivative(const Poly& p) {
    if (p.is_zero()) return Poly();
    std::vector<Rational> v(p.coeffs().size() + 1, Rational(0));
    for (size_t i = 0; i < p.coeffs().size(); ++i)
        v[i + 1] = p.coeffs()[i] / Rational(static_cast<long>(i + 1));
    return Poly(std::move(v));
}

Poly compose_linear(const Poly& p, const Rational& a, const Rational& b) {
    // Horner in (a*x + b).
    const Poly lin({b, a});
    Poly out;
    for (int k = p.degree(); k >= 0; --k)
        out = out * lin + Poly::constant(p.coeff(static_cast<unsigned>(k)));
    return out;
}

Rational eval(const Poly& p, const Rational& x0) {
    Rational out(0);
    for (int k = p.degree(); k >= 0; --k)
        out = out * x0 + p.coeff(static_cast<unsigned>(k));
    return out;
}

std::pair<Poly, Poly> divmod(const Poly& p, const Poly& d) {
    if (d.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
    Poly q, r = p;
    while (!r.is_zero() && r.degree() >= d.degree()) {
        const unsigned shift = static_cast<unsigned>(r.degree() - d.degree());
        const Poly t = Poly::monomial(shift, r.leading() / d.leading());
        q = q + t;
        r = r - t * d;
    }
    return {q, r};
}

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const Rational c = p.coeff(static_cast<unsigned>(k));
        if (c.is_zero()) continue;
        const bool neg = c.sign() < 0;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        const Rational a = abs(c);
        const bool unit_coeff = (a == Rational(1)) && k > 0;
        if (!unit_coeff) out += a.str();
        if (k > 0) {
            if (!unit_coeff) out += "*";
            out += (k == 1) ? "x" : "x^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace chebx
