#include "chebx/families.hpp"

namespace chebx {

std::vector<Rational> bernoulli_numbers(unsigned max_n) {
    std::vector<Rational> b;
    b.reserve(max_n + 1);
    b.emplace_back(1);
    for (unsigned n = 1; n <= max_n; ++n) {
        // (B+1)^{n+1} - B_{n+1} = delta_{1,n+1} solved for B_n; the delta
        // term is zero for every n >= 1.
        Rational acc(0);
        for (unsigned k = 0; k < n; ++k) acc -= Rational(binomial(n + 1, k)) * b[k];
        b.push_back(acc / Rational(binomial(n + 1, n)));
    }
    return b;
}

std::vector<Rational> euler_numbers(unsigned max_n) {
    std::vector<Rational> e;
    e.reserve(max_n + 1);
    e.emplace_back(1);
    for (unsigned n = 1; n <= max_n; ++n) {
        // 2 E_n = -sum_{k<n} C(n,k) E_k, from (e^t + 1) * 2/(e^t+1) = 2.
        Rational acc(0);
        for (unsigned k = 0; k < n; ++k) acc -= Rational(binomial(n, k)) * e[k];
        e.push_back(acc / Rational(2));
    }
    return e;
}

std::vector<Rational> hermite_numbers(unsigned max_n) {
    std::vector<Rational> h;
    h.reserve(max_n + 1);
    for (unsigned n = 0; n <= max_n; ++n) {
        if (n % 2 == 1) {
            h.emplace_back(0);
        } else {
            const unsigned m = n / 2;
            const Integer v = factorial(n) / factorial(m);
            h.push_back(m % 2 == 0 ? Rational(v) : -Rational(v));
        }
    }
    return h;
}

namespace {
Poly umbral_poly(unsigned n, const std::vector<Rational>& numbers) {
    // (A + x)^n = sum_l C(n,l) A_{n-l} x^l
    std::vector<Rational> c(n + 1, Rational(0));
    for (unsigned l = 0; l <= n; ++l)
        c[l] = Rational(binomial(n, l)) * numbers[n - l];
    return Poly(std::move(c));
}
}  // namespace

Poly bernoulli_poly(unsigned n) { return umbral_poly(n, bernoulli_numbers(n)); }

Poly euler_poly(unsigned n) { return umbral_poly(n, euler_numbers(n)); }

Poly hermite_poly(unsigned n) {
    Poly prev = Poly::constant(Rational(1));
    if (n == 0) return prev;
    Poly cur = Poly::monomial(1, Rational(2));
    for (unsigned m = 1; m < n; ++m) {
        Poly next = Rational(2) * (Poly::x() * cur) - Rational(2L * m) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Poly family_poly(Family family, unsigned n) {
    switch (family) {
        case Family::Monomial: return Poly::monomial(n);
        case Family::Bernoulli: return bernoulli_poly(n);
        case Family::Euler: return euler_poly(n);
        case Family::Hermite: return hermite_poly(n);
    }
    return Poly();
}

FamilyTable build_family_table(Family family, unsigned max_degree) {
    FamilyTable t;
    t.family = family;
    t.polys.reserve(max_degree + 1);
    for (unsigned n = 0; n <= max_degree; ++n)
        t.polys.push_back(family_poly(family, n));
    t.numbers.reserve(max_degree + 1);
    for (const Poly& p : t.polys) t.numbers.push_back(p.coeff(0));
    return t;
}

IdentityCheck check_bernoulli_euler_identity(unsigned n, bool literal) {
    const std::vector<Rational> b = bernoulli_numbers(n);
    Poly rhs;
    for (unsigned k = 0; k <= n; ++k) {
        if (k == 1) continue;
        Rational c = Rational(binomial(n, k));
        if (!literal) c *= b[k];
        rhs = rhs + c * euler_poly(n - k);
    }
    const Poly lhs = bernoulli_poly(n);
    return {lhs == rhs, lhs, rhs};
}

IdentityCheck check_euler_self_identity(unsigned n, bool literal) {
    const std::vector<Rational> e = euler_numbers(n + 1);
    Poly rhs;
    for (unsigned l = 0; l <= n; ++l) {
        const Rational c =
            Rational(binomial(n, l)) * e[l + 1] / Rational(static_cast<long>(l) + 1);
        rhs = rhs + c * (literal ? euler_poly(n - l) : bernoulli_poly(n - l));
    }
    rhs = Rational(-2) * rhs;
    const Poly lhs = euler_poly(n);
    return {lhs == rhs, lhs, rhs};
}

IdentityCheck check_monomial_bernoulli_identity(unsigned n) {
    const Poly lhs = Poly::monomial(n);
    const Rational inv(Integer(1), Integer(n) + 1);

    const Poly bn1 = bernoulli_poly(n + 1);
    const Poly diff_form =
        inv * (compose_linear(bn1, Rational(1), Rational(1)) - bn1);
    if (lhs != diff_form) return {false, lhs, diff_form};

    Poly sum;
    for (unsigned l = 0; l <= n; ++l)
        sum = sum + Rational(binomial(n + 1, l)) * bernoulli_poly(l);
    const Poly sum_form = inv * sum;
    return {lhs == sum_form, lhs, sum_form};
}

}  // namespace chebx
