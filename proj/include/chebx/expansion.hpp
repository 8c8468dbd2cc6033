#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chebx/families.hpp"
#include "chebx/poly.hpp"

namespace chebx {

enum class Basis { Monomial, ChebyshevT, ChebyshevU };
enum class ExpansionSource { ClosedForm, Projection, TriangularSolve };

/// Coefficient vector of a polynomial in the tagged basis: index k is the
/// coefficient of T_k / U_k / x^k. Length is degree + 1 of the expanded
/// polynomial (empty for the zero polynomial).
struct Expansion {
    Basis basis;
    std::vector<Rational> coefficients;
    ExpansionSource source;
};

/// C_k = delta_k <p, T_k> / pi (delta_0 = 1, else 2), or 2 <p, U_k> / pi;
/// the pi divides out exactly. Monomial basis returns p's coefficients.
Expansion expand_projection(const Poly& p, Basis basis);

/// Back-substitution on leading coefficients: C_d = lead / 2^(d-1) for T
/// (d >= 1), lead / 2^d for U.
Expansion expand_triangular(const Poly& p, Basis basis);

// Closed forms, one per identity in scope.
Expansion expand_monomial_t(unsigned n);
Expansion expand_monomial_u(unsigned n);
Expansion expand_bernoulli_t(unsigned n);
Expansion expand_euler_t(unsigned n);
Expansion expand_hermite_t(unsigned n);
Expansion expand_bernoulli_u(unsigned n);
Expansion expand_euler_u(unsigned n);
Expansion expand_hermite_u(unsigned n);

/// Dispatch to the closed form for (family, basis); Monomial basis returns
/// the trivial self-expansion.
Expansion expand_closed_form(Family family, Basis basis, unsigned n);

/// Sum coefficients[k] * basis_poly(k) back into the monomial basis.
Poly reconstruct(const Expansion& e);

struct CoefficientMismatch {
    ExpansionSource lhs_source;
    ExpansionSource rhs_source;
    unsigned index;
    Rational lhs;
    Rational rhs;
};

struct CrossReport {
    Family family;
    Basis basis;
    unsigned n;
    bool pass;
    std::vector<Rational> coefficients;  // the agreed vector when pass
    std::optional<CoefficientMismatch> mismatch;
    bool reconstruction_ok;
};

/// Closed form vs projection vs triangular solve, plus reconstruction of the
/// source polynomial; pass only if all three vectors are identical and the
/// reconstruction is exact.
CrossReport cross_validate(Family family, Basis basis, unsigned n);

// Canonical renderings. JSON is the bit-exact contract, e.g.
// {"family":"bernoulli","basis":"T","n":3,
//  "coefficients":["-3/4","5/4","-3/4","1/4"],"source":"closed_form"}
std::string family_name(Family f);
std::string basis_name(Basis b);
std::string source_name(ExpansionSource s);
std::string family_symbol(Family f, unsigned n);  // "B_3(x)", "x^3", ...

std::string render_json(Family f, unsigned n, const Expansion& e);
std::string render_text(Family f, unsigned n, const Expansion& e);
std::string render_table(Family f, unsigned n, const Expansion& e);
std::string render_latex(Family f, unsigned n, const Expansion& e);

}  // namespace chebx
