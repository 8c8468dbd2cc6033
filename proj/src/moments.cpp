#include "chebx/moments.hpp"

#include <stdexcept>

namespace chebx {

PiScaled moment(const MomentKey& key) {
    if (key.m % 2 == 1) return PiScaled();
    const unsigned k = key.k, m = key.m, h = m / 2;
    if (key.sign == WeightSign::MinusHalf) {
        // m!(2k)! / (2^{m+2k} ((m+2k)/2)! (m/2)! k!)
        const Integer num = factorial(m) * factorial(2 * k);
        const Integer den = pow2(m + 2 * k) * factorial((m + 2 * k) / 2) *
                            factorial(h) * factorial(k);
        return PiScaled(Rational(num, den));
    }
    // (2k+2)! m! / (2^{2k+2+m} ((2k+2+m)/2)! (k+1)! (m/2)!)
    const Integer num = factorial(2 * k + 2) * factorial(m);
    const Integer den = pow2(2 * k + 2 + m) * factorial((2 * k + 2 + m) / 2) *
                        factorial(k + 1) * factorial(h);
    return PiScaled(Rational(num, den));
}

namespace {

// Gamma(t/2) as value * sqrt(pi)^pi_halves; t >= 1.
struct GammaHalf {
    Rational value;
    unsigned pi_halves;
};

GammaHalf gamma_of_half(unsigned t) {
    if (t == 0) throw std::domain_error("gamma_of_half: pole at zero");
    if (t % 2 == 0) return {Rational(factorial(t / 2 - 1)), 0};
    // Gamma(j + 1/2) = (2j)! / (4^j j!) * sqrt(pi), with j = (t-1)/2.
    const unsigned j = (t - 1) / 2;
    Integer four_j;
    mpz_ui_pow_ui(four_j.get_mpz_t(), 4, j);
    return {Rational(factorial(2 * j), four_j * factorial(j)), 1};
}

}  // namespace

PiScaled moment_oracle(const MomentKey& key) {
    if (key.m % 2 == 1) return PiScaled();
    // Even m: integral = B(a, b) with a = k + 1/2 (MinusHalf) or k + 3/2
    // (PlusHalf) and b = (m+1)/2, after y = x^2.
    const unsigned a2 =
        key.sign == WeightSign::MinusHalf ? 2 * key.k + 1 : 2 * key.k + 3;
    const unsigned b2 = key.m + 1;
    const GammaHalf ga = gamma_of_half(a2);
    const GammaHalf gb = gamma_of_half(b2);
    const GammaHalf gab = gamma_of_half(a2 + b2);
    if (ga.pi_halves + gb.pi_halves != gab.pi_halves + 2)
        throw std::logic_error("moment_oracle: sqrt(pi) bookkeeping off");
    return PiScaled(ga.value * gb.value / gab.value);
}

namespace {
PiScaled inner_by_moments(const Poly& p, const Poly& q, WeightSign sign) {
    const Poly r = p * q;
    PiScaled acc;
    for (int m = 0; m <= r.degree(); m += 2)
        acc = acc + r.coeff(static_cast<unsigned>(m)) *
                        moment({0, sign, static_cast<unsigned>(m)});
    return acc;
}
}  // namespace

PiScaled inner_t(const Poly& p, const Poly& q) {
    return inner_by_moments(p, q, WeightSign::MinusHalf);
}

PiScaled inner_u(const Poly& p, const Poly& q) {
    return inner_by_moments(p, q, WeightSign::PlusHalf);
}

}  // namespace chebx
