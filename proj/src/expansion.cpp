#include "chebx/expansion.hpp"

#include <algorithm>
#include <json.hpp>
#include <stdexcept>
#include <utility>

#include "chebx/chebyshev.hpp"
#include "chebx/moments.hpp"

namespace chebx {

namespace {

Rational delta_k(unsigned k) { return Rational(k == 0 ? 1 : 2); }

Integer half_factorial(unsigned twice) {
    if (twice % 2 != 0)
        throw std::logic_error("closed form: half-integer factorial argument");
    return factorial(twice / 2);
}

// sum over even l <= top of  C(top,l) a_{top-l} l! / (2^l ((2k+l)/2)! (l/2)!)
Rational t_inner_binomial(unsigned k, unsigned top, const std::vector<Rational>& a) {
    Rational acc(0);
    for (unsigned l = 0; l <= top; l += 2)
        acc += Rational(binomial(top, l) * factorial(l),
                        pow2(l) * half_factorial(2 * k + l) * factorial(l / 2)) *
               a[top - l];
    return acc;
}

// sum over even l <= top of  a_{top-l} / ((top-l)! ((2k+l)/2)! (l/2)!)
Rational t_inner_hermite(unsigned k, unsigned top, const std::vector<Rational>& a) {
    Rational acc(0);
    for (unsigned l = 0; l <= top; l += 2)
        acc += Rational(Integer(1), factorial(top - l) * half_factorial(2 * k + l) *
                                        factorial(l / 2)) *
               a[top - l];
    return acc;
}

// sum over even l <= top of  a_{top-l} / ((top-l)! 2^l ((2k+l+2)/2)! (l/2)!)
Rational u_inner_binomial(unsigned k, unsigned top, const std::vector<Rational>& a) {
    Rational acc(0);
    for (unsigned l = 0; l <= top; l += 2)
        acc += Rational(Integer(1),
                        factorial(top - l) * pow2(l) *
                            half_factorial(2 * k + l + 2) * factorial(l / 2)) *
               a[top - l];
    return acc;
}

// sum over even l <= top of  a_{top-l} / ((top-l)! ((2k+l+2)/2)! (l/2)!)
Rational u_inner_hermite(unsigned k, unsigned top, const std::vector<Rational>& a) {
    Rational acc(0);
    for (unsigned l = 0; l <= top; l += 2)
        acc += Rational(Integer(1), factorial(top - l) *
                                        half_factorial(2 * k + l + 2) *
                                        factorial(l / 2)) *
               a[top - l];
    return acc;
}

Expansion closed(Basis b, std::vector<Rational> c) {
    return {b, std::move(c), ExpansionSource::ClosedForm};
}

}  // namespace

Expansion expand_monomial_t(unsigned n) {
    std::vector<Rational> c(n + 1, Rational(0));
    for (unsigned k = 0; k <= n; ++k) {
        if ((n - k) % 2 != 0) continue;
        c[k] = delta_k(k) * Rational(factorial(n), pow2(n) * half_factorial(n + k) *
                                                       half_factorial(n - k));
    }
    return closed(Basis::ChebyshevT, std::move(c));
}

Expansion expand_monomial_u(unsigned n) {
    std::vector<Rational> c(n + 1, Rational(0));
    for (unsigned k = 0; k <= n; ++k) {
        if ((n - k) % 2 != 0) continue;
        c[k] = Rational(factorial(n) * Integer(k + 1),
                        pow2(n) * half_factorial(n + k + 2) * half_factorial(n - k));
    }
    return closed(Basis::ChebyshevU, std::move(c));
}

Expansion expand_bernoulli_t(unsigned n) {
    const std::vector<Rational> b = bernoulli_numbers(n);
    std::vector<Rational> c(n + 1, Rational(0));
    for (unsigned k = 0; k <= n; ++k)
        c[k] = delta_k(k) * Rational(factorial(n), pow2(k) * factorial(n - k)) *
               t_inner_binomial(k, n - k, b);
    return closed(Basis::ChebyshevT, std::move(c));
}

Expansion expand_euler_t(unsigned n) {
    const std::vector<Rational> e = euler_numbers(n);
    std::vector<Rational> c(n + 1, Rational(0));
    for (unsigned k = 0; k <= n; ++k)
        c[k] = delta_k(k) * Rational(factorial(n), pow2(k) * factorial(n - k)) *
               t_inner_binomial(k, n - k, e);
    return closed(Basis::ChebyshevT, std::move(c));
}

Expansion expand_hermite_t(unsigned n) {
    const std::vector<Rational> h = hermite_numbers(n);
    std::vector<Rational> c(n + 1, Rational(0));
    for (unsigned k = 0; k <= n; ++k)
        c[k] = delta_k(k) * Rational(factorial(n)) * t_inner_hermite(k, n - k, h);
    return closed(Basis::ChebyshevT, std::move(c));
}

Expansion expand_bernoulli_u(unsigned n) {
    const std::vector<Rational> b = bernoulli_numbers(n);
    std::vector<Rational> c(n + 1, Rational(0));
    for (unsigned k = 0; k <= n; ++k)
        c[k] = Rational(Integer(k + 1) * factorial(n), pow2(k)) *
               u_inner_binomial(k, n - k, b);
    return closed(Basis::ChebyshevU, std::move(c));
}

Expansion expand_euler_u(unsigned n) {
    const std::vector<Rational> e = euler_numbers(n);
    std::vector<Rational> c(n + 1, Rational(0));
    for (unsigned k = 0; k <= n; ++k)
        c[k] = Rational(Integer(k + 1) * factorial(n), pow2(k)) *
               u_inner_binomial(k, n - k, e);
    return closed(Basis::ChebyshevU, std::move(c));
}

Expansion expand_hermite_u(unsigned n) {
    const std::vector<Rational> h = hermite_numbers(n);
    std::vector<Rational> c(n + 1, Rational(0));
    for (unsigned k = 0; k <= n; ++k) {
        const Integer pre = Integer(k + 1) * factorial(n);
        c[k] = Rational(pre) * u_inner_hermite(k, n - k, h);
    }
    return closed(Basis::ChebyshevU, std::move(c));
}

Expansion expand_closed_form(Family family, Basis basis, unsigned n) {
    if (basis == Basis::Monomial) {
        const Poly p = family_poly(family, n);
        std::vector<Rational> c(n + 1, Rational(0));
        for (unsigned i = 0; i <= n; ++i) c[i] = p.coeff(i);
        return closed(Basis::Monomial, std::move(c));
    }
    const bool t = basis == Basis::ChebyshevT;
    switch (family) {
        case Family::Monomial: return t ? expand_monomial_t(n) : expand_monomial_u(n);
        case Family::Bernoulli:
            return t ? expand_bernoulli_t(n) : expand_bernoulli_u(n);
        case Family::Euler: return t ? expand_euler_t(n) : expand_euler_u(n);
        case Family::Hermite: return t ? expand_hermite_t(n) : expand_hermite_u(n);
    }
    throw std::logic_error("expand_closed_form: bad family");
}

Expansion expand_projection(const Poly& p, Basis basis) {
    const int deg = p.degree();
    std::vector<Rational> c(static_cast<std::size_t>(deg + 1), Rational(0));
    if (basis == Basis::Monomial) {
        for (int i = 0; i <= deg; ++i) c[i] = p.coeff(static_cast<unsigned>(i));
    } else if (deg >= 0) {
        const unsigned d = static_cast<unsigned>(deg);
        if (basis == Basis::ChebyshevT) {
            const std::vector<Poly> table = cheb_t_table(d);
            for (unsigned k = 0; k <= d; ++k)
                c[k] = delta_k(k) * inner_t(p, table[k]).coefficient();
        } else {
            const std::vector<Poly> table = cheb_u_table(d);
            for (unsigned k = 0; k <= d; ++k)
                c[k] = Rational(2) * inner_u(p, table[k]).coefficient();
        }
    }
    return {basis, std::move(c), ExpansionSource::Projection};
}

Expansion expand_triangular(const Poly& p, Basis basis) {
    const int deg = p.degree();
    std::vector<Rational> c(static_cast<std::size_t>(deg + 1), Rational(0));
    if (basis == Basis::Monomial) {
        for (int i = 0; i <= deg; ++i) c[i] = p.coeff(static_cast<unsigned>(i));
    } else if (deg >= 0) {
        const std::vector<Poly> table = basis == Basis::ChebyshevT
                                            ? cheb_t_table(static_cast<unsigned>(deg))
                                            : cheb_u_table(static_cast<unsigned>(deg));
        Poly r = p;
        while (r.degree() >= 1) {
            const unsigned d = static_cast<unsigned>(r.degree());
            const unsigned lead_pow = basis == Basis::ChebyshevT ? d - 1 : d;
            const Rational cd = r.leading() / Rational(pow2(lead_pow));
            c[d] = cd;
            r = r - cd * table[d];
        }
        c[0] = r.coeff(0);
    }
    return {basis, std::move(c), ExpansionSource::TriangularSolve};
}

Poly reconstruct(const Expansion& e) {
    if (e.basis == Basis::Monomial) return Poly(e.coefficients);
    if (e.coefficients.empty()) return Poly();
    const unsigned top = static_cast<unsigned>(e.coefficients.size() - 1);
    const std::vector<Poly> table =
        e.basis == Basis::ChebyshevT ? cheb_t_table(top) : cheb_u_table(top);
    Poly acc;
    for (unsigned k = 0; k <= top; ++k) acc = acc + e.coefficients[k] * table[k];
    return acc;
}

namespace {
std::optional<CoefficientMismatch> first_diff(const Expansion& a, const Expansion& b) {
    const std::size_t len = std::max(a.coefficients.size(), b.coefficients.size());
    for (std::size_t i = 0; i < len; ++i) {
        const Rational va = i < a.coefficients.size() ? a.coefficients[i] : Rational(0);
        const Rational vb = i < b.coefficients.size() ? b.coefficients[i] : Rational(0);
        if (va != vb)
            return CoefficientMismatch{a.source, b.source,
                                       static_cast<unsigned>(i), va, vb};
    }
    return std::nullopt;
}
}  // namespace

CrossReport cross_validate(Family family, Basis basis, unsigned n) {
    CrossReport rep{family, basis, n, false, {}, std::nullopt, false};
    const Poly source = family_poly(family, n);
    const Expansion cf = expand_closed_form(family, basis, n);
    const Expansion pr = expand_projection(source, basis);
    const Expansion tr = expand_triangular(source, basis);

    rep.mismatch = first_diff(cf, pr);
    if (!rep.mismatch) rep.mismatch = first_diff(cf, tr);
    rep.reconstruction_ok = reconstruct(cf) == source;
    rep.pass = !rep.mismatch && rep.reconstruction_ok;
    rep.coefficients = cf.coefficients;
    return rep;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::Monomial: return "monomial";
        case Family::Bernoulli: return "bernoulli";
        case Family::Euler: return "euler";
        case Family::Hermite: return "hermite";
    }
    return "?";
}

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::Monomial: return "monomial";
        case Basis::ChebyshevT: return "T";
        case Basis::ChebyshevU: return "U";
    }
    return "?";
}

std::string source_name(ExpansionSource s) {
    switch (s) {
        case ExpansionSource::ClosedForm: return "closed_form";
        case ExpansionSource::Projection: return "projection";
        case ExpansionSource::TriangularSolve: return "triangular_solve";
    }
    return "?";
}

namespace {
std::string monomial_term(unsigned k) {
    if (k == 0) return "1";
    if (k == 1) return "x";
    return "x^" + std::to_string(k);
}

std::string basis_term(Basis b, unsigned k) {
    switch (b) {
        case Basis::Monomial: return monomial_term(k);
        case Basis::ChebyshevT: return "T_" + std::to_string(k) + "(x)";
        case Basis::ChebyshevU: return "U_" + std::to_string(k) + "(x)";
    }
    return "?";
}

std::string subscripted(const std::string& head, unsigned n) {
    const std::string s = std::to_string(n);
    return s.size() == 1 ? head + "_" + s : head + "_{" + s + "}";
}

std::string latex_basis_term(Basis b, unsigned k) {
    switch (b) {
        case Basis::Monomial:
            if (k == 0) return "1";
            if (k == 1) return "x";
            return k < 10 ? "x^" + std::to_string(k)
                          : "x^{" + std::to_string(k) + "}";
        case Basis::ChebyshevT: return subscripted("T", k) + "(x)";
        case Basis::ChebyshevU: return subscripted("U", k) + "(x)";
    }
    return "?";
}

std::string latex_magnitude(const Rational& r) {
    const Rational a = abs(r);
    if (a.is_integer()) return a.numerator().get_str();
    return "\\frac{" + a.numerator().get_str() + "}{" + a.denominator().get_str() +
           "}";
}
}  // namespace

std::string family_symbol(Family f, unsigned n) {
    switch (f) {
        case Family::Monomial: return monomial_term(n);
        case Family::Bernoulli: return "B_" + std::to_string(n) + "(x)";
        case Family::Euler: return "E_" + std::to_string(n) + "(x)";
        case Family::Hermite: return "H_" + std::to_string(n) + "(x)";
    }
    return "?";
}

std::string render_json(Family f, unsigned n, const Expansion& e) {
    nlohmann::ordered_json j;
    j["family"] = family_name(f);
    j["basis"] = basis_name(e.basis);
    j["n"] = n;
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const Rational& c : e.coefficients) coeffs.push_back(c.str());
    j["coefficients"] = std::move(coeffs);
    j["source"] = source_name(e.source);
    return j.dump();
}

std::string render_text(Family f, unsigned n, const Expansion& e) {
    std::string out = family_symbol(f, n) + " =";
    bool any = false;
    for (unsigned k = 0; k < e.coefficients.size(); ++k) {
        const Rational& c = e.coefficients[k];
        if (c.is_zero()) continue;
        out += !any ? (c.sign() < 0 ? " -" : " ") : (c.sign() < 0 ? " - " : " + ");
        out += abs(c).str() + "*" + basis_term(e.basis, k);
        any = true;
    }
    if (!any) out += " 0";
    return out;
}

std::string render_table(Family f, unsigned n, const Expansion& e) {
    std::string out = render_text(f, n, e);
    for (unsigned k = 0; k < e.coefficients.size(); ++k) {
        const Rational& c = e.coefficients[k];
        if (c.is_zero()) continue;
        out += "\nk=" + std::to_string(k) + ": " + c.str();
    }
    return out;
}

std::string render_latex(Family f, unsigned n, const Expansion& e) {
    std::string lhs;
    switch (f) {
        case Family::Monomial: lhs = latex_basis_term(Basis::Monomial, n); break;
        case Family::Bernoulli: lhs = subscripted("B", n) + "(x)"; break;
        case Family::Euler: lhs = subscripted("E", n) + "(x)"; break;
        case Family::Hermite: lhs = subscripted("H", n) + "(x)"; break;
    }
    std::string out = lhs + " =";
    bool any = false;
    for (unsigned k = 0; k < e.coefficients.size(); ++k) {
        const Rational& c = e.coefficients[k];
        if (c.is_zero()) continue;
        out += !any ? (c.sign() < 0 ? " -" : " ") : (c.sign() < 0 ? " - " : " + ");
        const std::string body = latex_basis_term(e.basis, k);
        const bool unit = abs(c) == Rational(1) && body != "1";
        if (!unit) out += latex_magnitude(c);
        if (body != "1") out += body;
        any = true;
    }
    if (!any) out += " 0";
    return out;
}

}  // namespace chebx
