#include "chebx/verify.hpp"

#include <algorithm>

#include "chebx/chebyshev.hpp"
#include "chebx/expansion.hpp"
#include "chebx/families.hpp"
#include "chebx/moments.hpp"

namespace chebx {

const std::vector<VerifyTarget>& all_targets() {
    static const std::vector<VerifyTarget> targets{
        VerifyTarget::BernoulliT,    VerifyTarget::EulerT,
        VerifyTarget::HermiteT,      VerifyTarget::MonomialT,
        VerifyTarget::BernoulliU,    VerifyTarget::EulerU,
        VerifyTarget::HermiteU,      VerifyTarget::MonomialU,
        VerifyTarget::OrthogonalityT, VerifyTarget::OrthogonalityU,
        VerifyTarget::RodriguesT,    VerifyTarget::RodriguesU,
        VerifyTarget::SurdT,         VerifyTarget::SurdU,
        VerifyTarget::GenfuncT,      VerifyTarget::GenfuncU,
        VerifyTarget::Calculus,      VerifyTarget::Identities,
        VerifyTarget::Moments,
    };
    return targets;
}

std::string target_name(VerifyTarget t) {
    switch (t) {
        case VerifyTarget::BernoulliT: return "bernoulli-T";
        case VerifyTarget::EulerT: return "euler-T";
        case VerifyTarget::HermiteT: return "hermite-T";
        case VerifyTarget::MonomialT: return "monomial-T";
        case VerifyTarget::BernoulliU: return "bernoulli-U";
        case VerifyTarget::EulerU: return "euler-U";
        case VerifyTarget::HermiteU: return "hermite-U";
        case VerifyTarget::MonomialU: return "monomial-U";
        case VerifyTarget::OrthogonalityT: return "orthogonality-T";
        case VerifyTarget::OrthogonalityU: return "orthogonality-U";
        case VerifyTarget::RodriguesT: return "rodrigues-T";
        case VerifyTarget::RodriguesU: return "rodrigues-U";
        case VerifyTarget::SurdT: return "surd-T";
        case VerifyTarget::SurdU: return "surd-U";
        case VerifyTarget::GenfuncT: return "genfunc-T";
        case VerifyTarget::GenfuncU: return "genfunc-U";
        case VerifyTarget::Calculus: return "calculus";
        case VerifyTarget::Identities: return "identities-8-9-10";
        case VerifyTarget::Moments: return "moments";
    }
    return "?";
}

std::optional<VerifyTarget> parse_target(const std::string& name) {
    for (VerifyTarget t : all_targets())
        if (target_name(t) == name) return t;
    return std::nullopt;
}

namespace {

struct PolyDiff {
    unsigned k;
    Rational expected;
    Rational actual;
};

// First coefficient where the two polynomials differ; `a` is the expected
// side of the report.
std::optional<PolyDiff> poly_diff(const Poly& a, const Poly& b) {
    const int top = std::max(a.degree(), b.degree());
    for (int k = 0; k <= top; ++k) {
        const Rational va = a.coeff(static_cast<unsigned>(k));
        const Rational vb = b.coeff(static_cast<unsigned>(k));
        if (va != vb) return PolyDiff{static_cast<unsigned>(k), va, vb};
    }
    return std::nullopt;
}

void expansion_target(VerifyReport& rep, const std::string& name, Family family,
                      Basis basis, unsigned max_n) {
    for (unsigned n = 0; n <= max_n; ++n) {
        const CrossReport r = cross_validate(family, basis, n);
        ++rep.checks;
        if (r.pass) {
            rep.lines.push_back(name + " n=" + std::to_string(n) + " ok");
            continue;
        }
        ++rep.failures;
        std::string line = name + " n=" + std::to_string(n) + " FAIL";
        if (r.mismatch) {
            line += " k=" + std::to_string(r.mismatch->index) + " expected=" +
                    r.mismatch->lhs.str() + " (" + source_name(r.mismatch->lhs_source) +
                    ") actual=" + r.mismatch->rhs.str() + " (" +
                    source_name(r.mismatch->rhs_source) + ")";
        } else {
            line += " reconstruction";
        }
        rep.lines.push_back(line);
    }
}

void orthogonality_target(VerifyReport& rep, const std::string& name, bool first_kind,
                          unsigned max_n) {
    const std::vector<Poly> table =
        first_kind ? cheb_t_table(max_n) : cheb_u_table(max_n);
    const PiScaled pi(Rational(1));
    const PiScaled half_pi(Rational(1, 2));
    const PiScaled zero;
    for (unsigned i = 0; i <= max_n; ++i) {
        std::string fail;
        for (unsigned j = 0; j <= max_n; ++j) {
            const PiScaled actual = first_kind ? inner_t(table[i], table[j])
                                               : inner_u(table[i], table[j]);
            PiScaled expected = zero;
            if (i == j) expected = (first_kind && i == 0) ? pi : half_pi;
            ++rep.checks;
            if (actual == expected) continue;
            ++rep.failures;
            if (fail.empty())
                fail = " j=" + std::to_string(j) + " expected=" + expected.str() +
                       " actual=" + actual.str();
        }
        rep.lines.push_back(name + " i=" + std::to_string(i) +
                            (fail.empty() ? " ok" : " FAIL" + fail));
    }
}

void reconstruction_target(VerifyReport& rep, const std::string& name,
                           const std::vector<Poly>& expected_table,
                           Poly (*build)(unsigned), unsigned max_n) {
    for (unsigned n = 0; n <= max_n; ++n) {
        const Poly actual = build(n);
        ++rep.checks;
        const auto diff = poly_diff(expected_table[n], actual);
        if (!diff) {
            rep.lines.push_back(name + " n=" + std::to_string(n) + " ok");
        } else {
            ++rep.failures;
            rep.lines.push_back(name + " n=" + std::to_string(n) + " FAIL k=" +
                                std::to_string(diff->k) + " expected=" +
                                diff->expected.str() + " actual=" +
                                diff->actual.str());
        }
    }
}

void genfunc_target(VerifyReport& rep, const std::string& name, ChebKind kind,
                    unsigned max_n) {
    const std::vector<Rational> points{Rational(0), Rational(1), Rational(-1),
                                       Rational(1, 2)};
    for (const Rational& x0 : points) {
        const GenFuncCheck r = gen_func_check(kind, x0, max_n);
        rep.checks += max_n + 1;
        if (r.pass) {
            rep.lines.push_back(name + " x0=" + x0.str() + " ok");
        } else {
            ++rep.failures;
            rep.lines.push_back(name + " x0=" + x0.str() + " FAIL order=" +
                                std::to_string(r.order) + " expected=" +
                                r.poly_value.str() + " actual=" +
                                r.series_value.str());
        }
    }
}

void calculus_target(VerifyReport& rep, unsigned max_n) {
    for (unsigned n = 0; n <= max_n; ++n) {
        std::string fail;
        auto note = [&](const std::string& tag, const std::optional<PolyDiff>& d) {
            ++rep.checks;
            if (!d) return;
            ++rep.failures;
            if (fail.empty())
                fail = " " + tag + " k=" + std::to_string(d->k) + " expected=" +
                       d->expected.str() + " actual=" + d->actual.str();
        };
        if (n >= 1) {
            note("bernoulli-derivative",
                 poly_diff(Rational(static_cast<long>(n)) * bernoulli_poly(n - 1),
                           derivative(bernoulli_poly(n))));
            note("hermite-derivative",
                 poly_diff(Rational(static_cast<long>(2 * n)) * hermite_poly(n - 1),
                           derivative(hermite_poly(n))));
            const Poly h = hermite_poly(n);
            Poly reflected = compose_linear(h, Rational(-1), Rational(0));
            if (n % 2 == 1) reflected = -reflected;
            note("hermite-parity", poly_diff(h, reflected));
        }
        const CalculusCheck c = check_cheb_calculus(n);
        ++rep.checks;
        if (!c.pass) {
            ++rep.failures;
            if (fail.empty()) fail = " chebyshev" + c.detail;
        }
        rep.lines.push_back("calculus n=" + std::to_string(n) +
                            (fail.empty() ? " ok" : " FAIL" + fail));
    }
}

void identities_target(VerifyReport& rep, const VerifyOptions& opts) {
    const std::string name = "identities-8-9-10";
    for (unsigned n = 0; n <= opts.max_n; ++n) {
        std::string fail;
        auto note = [&](const std::string& tag, const IdentityCheck& c) {
            ++rep.checks;
            if (c.pass) return;
            ++rep.failures;
            if (!fail.empty()) return;
            const auto d = poly_diff(c.lhs, c.rhs);
            fail = " " + tag;
            if (d)
                fail += " k=" + std::to_string(d->k) + " expected=" +
                        d->expected.str() + " actual=" + d->actual.str();
        };
        note(opts.literal_eq8 ? "identity-8(literal)" : "identity-8",
             check_bernoulli_euler_identity(n, opts.literal_eq8));
        note(opts.literal_eq9 ? "identity-9(literal)" : "identity-9",
             check_euler_self_identity(n, opts.literal_eq9));
        note("identity-10", check_monomial_bernoulli_identity(n));
        rep.lines.push_back(name + " n=" + std::to_string(n) +
                            (fail.empty() ? " ok" : " FAIL" + fail));
    }
}

void moments_target(VerifyReport& rep, unsigned max_n) {
    for (unsigned k = 0; k <= max_n; ++k) {
        std::string fail;
        for (const WeightSign sign : {WeightSign::MinusHalf, WeightSign::PlusHalf}) {
            for (unsigned m = 0; m <= 2 * max_n; ++m) {
                const MomentKey key{k, sign, m};
                const PiScaled closed = moment(key);
                const PiScaled oracle = moment_oracle(key);
                ++rep.checks;
                if (closed == oracle &&
                    (m % 2 == 0 ? closed.coefficient().sign() > 0 : closed.is_zero()))
                    continue;
                ++rep.failures;
                if (fail.empty())
                    fail = std::string(" sign=") +
                           (sign == WeightSign::MinusHalf ? "minus" : "plus") +
                           " m=" + std::to_string(m) + " expected=" + closed.str() +
                           " actual=" + oracle.str();
            }
        }
        rep.lines.push_back("moments k=" + std::to_string(k) +
                            (fail.empty() ? " ok" : " FAIL" + fail));
    }
}

}  // namespace

VerifyReport run_verify(VerifyTarget t, const VerifyOptions& opts) {
    VerifyReport rep;
    const std::string name = target_name(t);
    switch (t) {
        case VerifyTarget::BernoulliT:
            expansion_target(rep, name, Family::Bernoulli, Basis::ChebyshevT, opts.max_n);
            break;
        case VerifyTarget::EulerT:
            expansion_target(rep, name, Family::Euler, Basis::ChebyshevT, opts.max_n);
            break;
        case VerifyTarget::HermiteT:
            expansion_target(rep, name, Family::Hermite, Basis::ChebyshevT, opts.max_n);
            break;
        case VerifyTarget::MonomialT:
            expansion_target(rep, name, Family::Monomial, Basis::ChebyshevT, opts.max_n);
            break;
        case VerifyTarget::BernoulliU:
            expansion_target(rep, name, Family::Bernoulli, Basis::ChebyshevU, opts.max_n);
            break;
        case VerifyTarget::EulerU:
            expansion_target(rep, name, Family::Euler, Basis::ChebyshevU, opts.max_n);
            break;
        case VerifyTarget::HermiteU:
            expansion_target(rep, name, Family::Hermite, Basis::ChebyshevU, opts.max_n);
            break;
        case VerifyTarget::MonomialU:
            expansion_target(rep, name, Family::Monomial, Basis::ChebyshevU, opts.max_n);
            break;
        case VerifyTarget::OrthogonalityT:
            orthogonality_target(rep, name, true, opts.max_n);
            break;
        case VerifyTarget::OrthogonalityU:
            orthogonality_target(rep, name, false, opts.max_n);
            break;
        case VerifyTarget::RodriguesT:
            reconstruction_target(rep, name, cheb_t_table(opts.max_n),
                                  &cheb_t_rodrigues, opts.max_n);
            break;
        case VerifyTarget::RodriguesU:
            reconstruction_target(rep, name, cheb_u_table(opts.max_n),
                                  &cheb_u_rodrigues, opts.max_n);
            break;
        case VerifyTarget::SurdT:
            reconstruction_target(rep, name, cheb_t_table(opts.max_n), &cheb_t_surd,
                                  opts.max_n);
            break;
        case VerifyTarget::SurdU:
            reconstruction_target(rep, name, cheb_u_table(opts.max_n), &cheb_u_surd,
                                  opts.max_n);
            break;
        case VerifyTarget::GenfuncT:
            genfunc_target(rep, name, ChebKind::FirstKind, opts.max_n);
            break;
        case VerifyTarget::GenfuncU:
            genfunc_target(rep, name, ChebKind::SecondKind, opts.max_n);
            break;
        case VerifyTarget::Calculus:
            calculus_target(rep, opts.max_n);
            break;
        case VerifyTarget::Identities:
            identities_target(rep, opts);
            break;
        case VerifyTarget::Moments:
            moments_target(rep, opts.max_n);
            break;
    }
    return rep;
}

}  // namespace chebx
