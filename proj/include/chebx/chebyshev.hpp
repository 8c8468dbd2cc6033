#pragma once

#include <string>
#include <vector>

#include "chebx/poly.hpp"

namespace chebx {

enum class ChebKind { FirstKind, SecondKind };

/// T_0..T_max_n (resp. U) by the three-term recurrence; the canonical
/// construction. Everything else in this header is a verification oracle.
std::vector<Poly> cheb_t_table(unsigned max_n);
std::vector<Poly> cheb_u_table(unsigned max_n);
Poly cheb_t(unsigned n);
Poly cheb_u(unsigned n);

/// Rodrigues routes: scaled n-th weighted derivative of (1-x^2)^(n -+ 1/2).
/// Throw std::logic_error if the weight exponent fails to cancel.
Poly cheb_t_rodrigues(unsigned n);
Poly cheb_u_rodrigues(unsigned n);

/// Surd routes: (x +- sqrt(x^2-1))^n combinations. Throw std::logic_error
/// if the part that must cancel is nonzero.
Poly cheb_t_surd(unsigned n);
Poly cheb_u_surd(unsigned n);

/// Truncated series of (1 - x0 t)/(1 - 2 x0 t + t^2) (FirstKind) or
/// 1/(1 - 2 x0 t + t^2) (SecondKind) against [P_0(x0), .., P_order(x0)].
/// On mismatch, order/series_value/poly_value describe the first bad term.
struct GenFuncCheck {
    bool pass;
    unsigned order;
    Rational series_value;
    Rational poly_value;
};
GenFuncCheck gen_func_check(ChebKind kind, const Rational& x0, unsigned order);
bool gen_func_matches(ChebKind kind, const Rational& x0, unsigned order);

struct CalculusCheck {
    bool pass;
    std::string detail;  // failing relation tag, empty on pass
};

/// Polynomial identities at one n:
///   (i)   T_n' = n U_{n-1}                      (n >= 1)
///   (ii)  (x^2-1) U_n' = (n+1) T_{n+1} - x U_n
///   (iii) d/dx [T_{n+1}/(n+1)] = U_n
///   (iv)  d/dx [n T_{n+1}/(n^2-1) - x T_n/(n-1)] = T_n   (n >= 2)
CalculusCheck check_cheb_calculus(unsigned n);

}  // namespace chebx
