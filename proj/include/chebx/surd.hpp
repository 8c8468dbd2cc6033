#pragma once

#include "chebx/poly.hpp"

namespace chebx {

/// Element a(x) + b(x)*sqrt(x^2 - 1) of the quadratic extension of the
/// polynomial ring, with (sqrt(x^2-1))^2 = x^2 - 1.
struct SurdPoly {
    Poly rational_part;
    Poly surd_part;

    friend bool operator==(const SurdPoly& a, const SurdPoly& b) = default;
};

SurdPoly operator+(const SurdPoly& a, const SurdPoly& b);
SurdPoly operator-(const SurdPoly& a, const SurdPoly& b);
SurdPoly operator*(const SurdPoly& a, const SurdPoly& b);

/// a - b*sqrt(x^2-1).
SurdPoly conjugate(const SurdPoly& s);

/// base^n by repeated squaring; n = 0 gives (1, 0).
SurdPoly surd_pow(const SurdPoly& base, unsigned n);

}  // namespace chebx
