#include "chebx/chebyshev.hpp"

#include <stdexcept>

#include "chebx/series.hpp"
#include "chebx/surd.hpp"
#include "chebx/weighted.hpp"

namespace chebx {

namespace {
std::vector<Poly> cheb_table(unsigned max_n, const Poly& p1) {
    std::vector<Poly> t;
    t.reserve(max_n + 1);
    t.push_back(Poly::constant(Rational(1)));
    if (max_n == 0) return t;
    t.push_back(p1);
    for (unsigned n = 2; n <= max_n; ++n)
        t.push_back(Rational(2) * (Poly::x() * t[n - 1]) - t[n - 2]);
    return t;
}
}  // namespace

std::vector<Poly> cheb_t_table(unsigned max_n) {
    return cheb_table(max_n, Poly::x());
}

std::vector<Poly> cheb_u_table(unsigned max_n) {
    return cheb_table(max_n, Poly::monomial(1, Rational(2)));
}

Poly cheb_t(unsigned n) { return cheb_t_table(n).back(); }

Poly cheb_u(unsigned n) { return cheb_u_table(n).back(); }

Poly cheb_t_rodrigues(unsigned n) {
    WeightedFn w(Poly::constant(Rational(1)), 2 * static_cast<int>(n) - 1);
    w = nth_derivative(w, n);
    w = w * WeightedFn(Poly::constant(Rational(1)), 1);
    Rational pre(pow2(n) * factorial(n), factorial(2 * n));
    if (n % 2 == 1) pre = -pre;
    return pre * w.as_poly();
}

Poly cheb_u_rodrigues(unsigned n) {
    WeightedFn w(Poly::constant(Rational(1)), 2 * static_cast<int>(n) + 1);
    w = nth_derivative(w, n);
    w = w * WeightedFn(Poly::constant(Rational(1)), -1);
    Rational pre(pow2(n) * factorial(n + 1), factorial(2 * n + 1));
    if (n % 2 == 1) pre = -pre;
    return pre * w.as_poly();
}

Poly cheb_t_surd(unsigned n) {
    const SurdPoly plus{Poly::x(), Poly::constant(Rational(1))};
    const SurdPoly minus{Poly::x(), Poly::constant(Rational(-1))};
    const SurdPoly sum = surd_pow(plus, n) + surd_pow(minus, n);
    if (!sum.surd_part.is_zero())
        throw std::logic_error("cheb_t_surd: surd parts did not cancel");
    return Rational(1, 2) * sum.rational_part;
}

Poly cheb_u_surd(unsigned n) {
    const SurdPoly plus{Poly::x(), Poly::constant(Rational(1))};
    const SurdPoly minus{Poly::x(), Poly::constant(Rational(-1))};
    const SurdPoly diff = surd_pow(plus, n + 1) - surd_pow(minus, n + 1);
    if (!diff.rational_part.is_zero())
        throw std::logic_error("cheb_u_surd: rational parts did not cancel");
    return Rational(1, 2) * diff.surd_part;
}

GenFuncCheck gen_func_check(ChebKind kind, const Rational& x0, unsigned order) {
    const std::vector<Rational> den{Rational(1), Rational(-2) * x0, Rational(1)};
    const std::vector<Rational> num =
        kind == ChebKind::FirstKind ? std::vector<Rational>{Rational(1), -x0}
                                    : std::vector<Rational>{Rational(1)};
    const std::vector<Rational> series = series_div(num, den, order);
    const std::vector<Poly> table = kind == ChebKind::FirstKind
                                        ? cheb_t_table(order)
                                        : cheb_u_table(order);
    for (unsigned j = 0; j <= order; ++j) {
        const Rational value = eval(table[j], x0);
        if (series[j] != value) return {false, j, series[j], value};
    }
    return {true, 0, Rational(0), Rational(0)};
}

bool gen_func_matches(ChebKind kind, const Rational& x0, unsigned order) {
    return gen_func_check(kind, x0, order).pass;
}

CalculusCheck check_cheb_calculus(unsigned n) {
    const std::vector<Poly> t = cheb_t_table(n + 1);
    const std::vector<Poly> u = cheb_u_table(n + 1);
    const Poly x2m1({Rational(-1), Rational(0), Rational(1)});
    const Rational rn(static_cast<long>(n));

    if (n >= 1 && derivative(t[n]) != rn * u[n - 1]) return {false, "(i)"};

    const Poly lhs2 = x2m1 * derivative(u[n]);
    const Poly rhs2 = (rn + Rational(1)) * t[n + 1] - Poly::x() * u[n];
    if (lhs2 != rhs2) return {false, "(ii)"};

    if (derivative(Rational(Integer(1), Integer(n) + 1) * t[n + 1]) != u[n])
        return {false, "(iii)"};

    if (n >= 2) {
        const Rational a = Rational(Integer(n), Integer(n) * n - 1);
        const Rational b = Rational(Integer(1), Integer(n) - 1);
        const Poly primitive = a * t[n + 1] - b * (Poly::x() * t[n]);
        if (derivative(primitive) != t[n]) return {false, "(iv)"};
    }
    return {true, ""};
}

}  // namespace chebx
