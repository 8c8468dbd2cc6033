#include "chebx/surd.hpp"

namespace chebx {

namespace {
const Poly& x_squared_minus_one() {
    static const Poly w({Rational(-1), Rational(0), Rational(1)});
    return w;
}
}  // namespace

SurdPoly operator+(const SurdPoly& a, const SurdPoly& b) {
    return {a.rational_part + b.rational_part, a.surd_part + b.surd_part};
}

SurdPoly operator-(const SurdPoly& a, const SurdPoly& b) {
    return {a.rational_part - b.rational_part, a.surd_part - b.surd_part};
}

SurdPoly operator*(const SurdPoly& a, const SurdPoly& b) {
    return {a.rational_part * b.rational_part +
                x_squared_minus_one() * (a.surd_part * b.surd_part),
            a.rational_part * b.surd_part + b.rational_part * a.surd_part};
}

SurdPoly conjugate(const SurdPoly& s) { return {s.rational_part, -s.surd_part}; }

SurdPoly surd_pow(const SurdPoly& base, unsigned n) {
    SurdPoly out{Poly::constant(Rational(1)), Poly()};
    SurdPoly sq = base;
    while (n > 0) {
        if (n & 1u) out = out * sq;
        n >>= 1u;
        if (n > 0) sq = sq * sq;
    }
    return out;
}

}  // namespace chebx
