#pragma once

#include <string>
#include <vector>

#include "chebx/poly.hpp"

namespace chebx {

enum class Family { Monomial, Bernoulli, Euler, Hermite };

/// B_0..B_max_n from the umbral recurrence (B+1)^n - B_n = delta_{1,n}.
std::vector<Rational> bernoulli_numbers(unsigned max_n);
/// E_n = E_n(0) (rationals: E_1 = -1/2), from 2/(e^t+1).
std::vector<Rational> euler_numbers(unsigned max_n);
/// H_n = H_n(0), from e^{-t^2}: H_{2m} = (-1)^m (2m)!/m!, odd indices 0.
std::vector<Rational> hermite_numbers(unsigned max_n);

Poly bernoulli_poly(unsigned n);
Poly euler_poly(unsigned n);
/// Physicists' convention: H_{n+1} = 2x H_n - 2n H_{n-1}.
Poly hermite_poly(unsigned n);
/// Monomial family gives x^n.
Poly family_poly(Family family, unsigned n);

struct FamilyTable {
    Family family;
    std::vector<Rational> numbers;  // value at 0 of each poly
    std::vector<Poly> polys;        // degree n at index n
};
FamilyTable build_family_table(Family family, unsigned max_degree);

/// Outcome of one cross-family identity at a single n. On failure rhs keeps
/// the offending right-hand side so callers can report the first differing
/// coefficient.
struct IdentityCheck {
    bool pass;
    Poly lhs;
    Poly rhs;
};

/// B_n(x) = sum_{k=0, k != 1}^{n} C(n,k) B_k E_{n-k}(x). The printed source
/// omits the B_k factor; `literal` evaluates that variant (it fails at n=2).
IdentityCheck check_bernoulli_euler_identity(unsigned n, bool literal = false);

/// E_n(x) = -2 sum_{l=0}^{n} C(n,l) (E_{l+1}/(l+1)) B_{n-l}(x). The printed
/// source has E_{n-l}(x) in place of B_{n-l}(x); `literal` evaluates that
/// variant (it fails at n=2).
IdentityCheck check_euler_self_identity(unsigned n, bool literal = false);

/// x^n = (1/(n+1))(B_{n+1}(x+1) - B_{n+1}(x)) = (1/(n+1)) sum C(n+1,l) B_l(x);
/// both forms are checked.
IdentityCheck check_monomial_bernoulli_identity(unsigned n);

}  // namespace chebx
