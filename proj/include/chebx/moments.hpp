#pragma once

#include "chebx/poly.hpp"
#include "chebx/rational.hpp"

namespace chebx {

/// Selects the weight (1-x^2)^(k - 1/2) (MinusHalf) or (1-x^2)^(k + 1/2)
/// (PlusHalf) in the moment integral over [-1, 1].
enum class WeightSign { MinusHalf, PlusHalf };

struct MomentKey {
    unsigned k;
    WeightSign sign;
    unsigned m;  // power of x; odd m gives the zero moment
};

/// Closed-form factorial evaluation of int_{-1}^{1} (1-x^2)^(k -+ 1/2) x^m dx.
PiScaled moment(const MomentKey& key);

/// Independent route through half-integer Gamma values (Beta function),
/// pairing every sqrt(pi) into a pi. Shares no helper with moment().
PiScaled moment_oracle(const MomentKey& key);

/// <p, q> = int p q / sqrt(1-x^2): the first-kind inner product.
PiScaled inner_t(const Poly& p, const Poly& q);

/// <p, q> = int p q sqrt(1-x^2): the second-kind inner product.
PiScaled inner_u(const Poly& p, const Poly& q);

}  // namespace chebx
