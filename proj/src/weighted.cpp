#include "chebx/weighted.hpp"

#include <stdexcept>
#include <utility>

namespace chebx {

namespace {
const Poly& one_minus_x_squared() {
    static const Poly w({Rational(1), Rational(0), Rational(-1)});
    return w;
}
}  // namespace

WeightedFn::WeightedFn(Poly p, int half_power) : p_(std::move(p)), m_(half_power) {
    if (p_.is_zero()) {
        m_ = 0;
        return;
    }
    while (p_.degree() >= 2) {
        auto [q, r] = divmod(p_, one_minus_x_squared());
        if (!r.is_zero()) break;
        p_ = std::move(q);
        m_ += 2;
    }
}

const Poly& WeightedFn::as_poly() const {
    if (!p_.is_zero() && m_ != 0)
        throw std::logic_error("WeightedFn: weight exponent did not cancel");
    return p_;
}

WeightedFn operator+(const WeightedFn& a, const WeightedFn& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if ((a.half_power() - b.half_power()) % 2 != 0)
        throw std::domain_error("WeightedFn: weight exponents differ in parity");
    const WeightedFn& hi = a.half_power() >= b.half_power() ? a : b;
    const WeightedFn& lo = a.half_power() >= b.half_power() ? b : a;
    Poly lifted = hi.poly();
    for (int i = 0; i < (hi.half_power() - lo.half_power()) / 2; ++i)
        lifted = lifted * one_minus_x_squared();
    return WeightedFn(lifted + lo.poly(), lo.half_power());
}

WeightedFn operator-(const WeightedFn& a, const WeightedFn& b) {
    return a + WeightedFn(-b.poly(), b.half_power());
}

WeightedFn operator*(const WeightedFn& a, const WeightedFn& b) {
    return WeightedFn(a.poly() * b.poly(), a.half_power() + b.half_power());
}

WeightedFn derivative(const WeightedFn& f) {
    if (f.is_zero()) return {};
    const Poly q = derivative(f.poly()) * one_minus_x_squared() -
                   Rational(f.half_power()) * (Poly::x() * f.poly());
    return WeightedFn(q, f.half_power() - 2);
}

WeightedFn nth_derivative(WeightedFn f, unsigned n) {
    for (unsigned i = 0; i < n; ++i) f = derivative(f);
    return f;
}

}  // namespace chebx
