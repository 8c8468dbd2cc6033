#pragma once

#include <cstddef>
#include <vector>

#include "chebx/rational.hpp"

namespace chebx {

/// Truncated power series in t: index = power of t, inclusive of `order`.
/// Missing high-order input coefficients are treated as zero. The ring of
/// coefficients only needs default construction (= zero), + and *.
template <typename R>
std::vector<R> series_mul(const std::vector<R>& a, const std::vector<R>& b,
                          std::size_t order) {
    std::vector<R> out(order + 1, R());
    for (std::size_t i = 0; i < a.size() && i <= order; ++i)
        for (std::size_t j = 0; j < b.size() && i + j <= order; ++j)
            out[i + j] = out[i + j] + a[i] * b[j];
    return out;
}

/// num / den to the given order. den must have a nonzero constant term;
/// throws std::domain_error otherwise.
std::vector<Rational> series_div(const std::vector<Rational>& num,
                                 const std::vector<Rational>& den,
                                 std::size_t order);

}  // namespace chebx
