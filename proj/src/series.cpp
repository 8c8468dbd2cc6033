#include "chebx/series.hpp"

#include <stdexcept>

namespace chebx {

std::vector<Rational> series_div(const std::vector<Rational>& num,
                                 const std::vector<Rational>& den,
                                 std::size_t order) {
    if (den.empty() || den[0].is_zero())
        throw std::domain_error("series_div: denominator constant term is zero");
    std::vector<Rational> q(order + 1, Rational(0));
    for (std::size_t n = 0; n <= order; ++n) {
        Rational acc = n < num.size() ? num[n] : Rational(0);
        for (std::size_t k = 1; k <= n && k < den.size(); ++k)
            acc -= den[k] * q[n - k];
        q[n] = acc / den[0];
    }
    return q;
}

}  // namespace chebx
