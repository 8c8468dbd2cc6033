#pragma once

#include "chebx/poly.hpp"

namespace chebx {

/// Function p(x) * (1 - x^2)^(half_power / 2) on (-1, 1); half_power may be
/// negative or odd. Canonical form: every polynomial factor (1 - x^2) of p
/// is absorbed into half_power, and the zero function is (0, 0), so equal
/// functions compare equal structurally.
class WeightedFn {
public:
    WeightedFn() = default;
    WeightedFn(Poly p, int half_power);

    const Poly& poly() const { return p_; }
    int half_power() const { return m_; }
    bool is_zero() const { return p_.is_zero(); }

    /// The underlying Poly when the weight exponent is zero.
    /// Throws std::logic_error otherwise: callers reach this only after a
    /// flow that must have cancelled the weight exactly.
    const Poly& as_poly() const;

    friend bool operator==(const WeightedFn& a, const WeightedFn& b) = default;

private:
    Poly p_;
    int m_ = 0;
};

/// Addition requires equal half_power parity (otherwise the sum leaves the
/// representable family); throws std::domain_error.
WeightedFn operator+(const WeightedFn& a, const WeightedFn& b);
WeightedFn operator-(const WeightedFn& a, const WeightedFn& b);
WeightedFn operator*(const WeightedFn& a, const WeightedFn& b);

/// d/dx [p * (1-x^2)^(m/2)] = [p' * (1-x^2) - m*x*p] * (1-x^2)^((m-2)/2).
WeightedFn derivative(const WeightedFn& f);
WeightedFn nth_derivative(WeightedFn f, unsigned n);

}  // namespace chebx
