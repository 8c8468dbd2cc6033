#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "chebx/chebyshev.hpp"
#include "chebx/expansion.hpp"
#include "chebx/families.hpp"
#include "chebx/moments.hpp"
#include "chebx/verify.hpp"

namespace {

using namespace chebx;

constexpr unsigned kDefaultCap = 256;

int run_poly(const std::string& family, unsigned n, const std::string& format) {
    Poly p;
    if (family == "bernoulli")
        p = bernoulli_poly(n);
    else if (family == "euler")
        p = euler_poly(n);
    else if (family == "hermite")
        p = hermite_poly(n);
    else if (family == "chebyshev-t")
        p = cheb_t(n);
    else
        p = cheb_u(n);

    if (format == "json") {
        nlohmann::ordered_json j;
        j["family"] = family;
        j["n"] = n;
        nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
        for (int i = 0; i <= p.degree(); ++i)
            coeffs.push_back(p.coeff(static_cast<unsigned>(i)).str());
        j["coefficients"] = std::move(coeffs);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << to_string(p) << "\n";
    }
    return 0;
}

Family parse_family(const std::string& name) {
    if (name == "monomial") return Family::Monomial;
    if (name == "bernoulli") return Family::Bernoulli;
    if (name == "euler") return Family::Euler;
    return Family::Hermite;
}

int run_expand(const std::string& family_name_arg, const std::string& basis_arg,
               unsigned n, const std::string& format, const std::string& source) {
    const Family family = parse_family(family_name_arg);
    const Basis basis = basis_arg == "T" ? Basis::ChebyshevT : Basis::ChebyshevU;

    Expansion e{basis, {}, ExpansionSource::ClosedForm};
    if (source == "all") {
        const CrossReport rep = cross_validate(family, basis, n);
        if (!rep.pass) {
            nlohmann::ordered_json j;
            j["error"] = rep.mismatch ? "cross-oracle mismatch" : "reconstruction mismatch";
            j["family"] = family_name(family);
            j["basis"] = basis_name(basis);
            j["n"] = n;
            if (rep.mismatch) {
                j["k"] = rep.mismatch->index;
                j["expected"] = rep.mismatch->lhs.str();
                j["expected_source"] = source_name(rep.mismatch->lhs_source);
                j["actual"] = rep.mismatch->rhs.str();
                j["actual_source"] = source_name(rep.mismatch->rhs_source);
            }
            std::cerr << j.dump() << "\n";
            return 1;
        }
        e.coefficients = rep.coefficients;
    } else if (source == "closed") {
        e = expand_closed_form(family, basis, n);
    } else if (source == "projection") {
        e = expand_projection(family_poly(family, n), basis);
    } else {
        e = expand_triangular(family_poly(family, n), basis);
    }

    if (format == "json")
        std::cout << render_json(family, n, e) << "\n";
    else if (format == "latex")
        std::cout << render_latex(family, n, e) << "\n";
    else
        std::cout << render_table(family, n, e) << "\n";
    return 0;
}

int run_verify_cmd(const std::string& target_arg, const VerifyOptions& opts) {
    std::vector<VerifyTarget> targets;
    if (target_arg == "all") {
        targets = all_targets();
    } else {
        const auto t = parse_target(target_arg);
        if (!t) {
            std::cerr << "unknown verify target: " << target_arg << "\n";
            return 2;
        }
        targets.push_back(*t);
    }
    unsigned checks = 0, failures = 0;
    for (const VerifyTarget t : targets) {
        const VerifyReport rep = run_verify(t, opts);
        for (const std::string& line : rep.lines) std::cout << line << "\n";
        std::cout << target_name(t) << ": " << rep.checks << " checks, "
                  << rep.failures << " failures\n";
        checks += rep.checks;
        failures += rep.failures;
    }
    if (target_arg == "all")
        std::cout << "total: " << checks << " checks, " << failures << " failures\n";
    return failures == 0 ? 0 : 1;
}

int run_table(const std::vector<std::string>& families_arg,
              const std::vector<std::string>& bases_arg, unsigned max_n,
              const std::string& format) {
    // Canonical emission order regardless of how the lists were given.
    std::vector<Family> families;
    for (const Family f :
         {Family::Monomial, Family::Bernoulli, Family::Euler, Family::Hermite})
        for (const std::string& s : families_arg)
            if (s == family_name(f)) {
                families.push_back(f);
                break;
            }
    std::vector<Basis> bases;
    for (const Basis b : {Basis::ChebyshevT, Basis::ChebyshevU})
        for (const std::string& s : bases_arg)
            if (s == basis_name(b)) {
                bases.push_back(b);
                break;
            }

    if (format == "latex") {
        std::string out = "\\begin{align*}\n";
        bool first = true;
        for (const Family f : families)
            for (const Basis b : bases)
                for (unsigned n = 0; n <= max_n; ++n) {
                    if (!first) out += " \\\\\n";
                    std::string line = render_latex(f, n, expand_closed_form(f, b, n));
                    line.replace(line.find(" = "), 3, " &= ");
                    out += line;
                    first = false;
                }
        out += "\n\\end{align*}";
        std::cout << out << "\n";
    } else {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const Family f : families)
            for (const Basis b : bases)
                for (unsigned n = 0; n <= max_n; ++n) {
                    const Expansion e = expand_closed_form(f, b, n);
                    arr.push_back(
                        nlohmann::ordered_json::parse(render_json(f, n, e)));
                }
        std::cout << arr.dump() << "\n";
    }
    return 0;
}

int run_moment(unsigned k, const std::string& sign, unsigned m) {
    const WeightSign s = sign == "minus" ? WeightSign::MinusHalf : WeightSign::PlusHalf;
    std::cout << moment({k, s, m}).str() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Chebyshev-basis expansions of classical polynomial families"};
    app.require_subcommand(1);

    // poly
    std::string poly_family, poly_format = "text";
    unsigned poly_n = 0, poly_cap = kDefaultCap;
    CLI::App* poly = app.add_subcommand("poly", "Print one polynomial");
    poly->add_option("family", poly_family, "Polynomial family")
        ->required()
        ->check(CLI::IsMember(
            {"bernoulli", "euler", "hermite", "chebyshev-t", "chebyshev-u"}));
    poly->add_option("n", poly_n, "Degree")->required();
    poly->add_option("--format", poly_format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    poly->add_option("--cap", poly_cap, "Largest accepted degree");

    // expand
    std::string ex_family, ex_basis, ex_format = "table", ex_source = "all";
    unsigned ex_n = 0, ex_cap = kDefaultCap;
    CLI::App* expand = app.add_subcommand("expand", "Expand a polynomial in T or U");
    expand->add_option("family", ex_family, "Source family")
        ->required()
        ->check(CLI::IsMember({"monomial", "bernoulli", "euler", "hermite"}));
    expand->add_option("basis", ex_basis, "Target basis")
        ->required()
        ->check(CLI::IsMember({"T", "U"}));
    expand->add_option("n", ex_n, "Degree")->required();
    expand->add_option("--format", ex_format, "Output format")
        ->check(CLI::IsMember({"table", "json", "latex"}));
    expand->add_option("--source", ex_source,
                       "Coefficient route; 'all' cross-validates")
        ->check(CLI::IsMember({"closed", "projection", "solve", "all"}));
    expand->add_option("--cap", ex_cap, "Largest accepted degree");

    // verify
    std::string vf_target;
    VerifyOptions vf_opts;
    CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("target", vf_target, "Suite id or 'all'")->required();
    verify->add_option("--max-n", vf_opts.max_n, "Largest degree / index checked");
    verify->add_flag("--literal-eq8", vf_opts.literal_eq8,
                     "Check the literal printed form of identity 8");
    verify->add_flag("--literal-eq9", vf_opts.literal_eq9,
                     "Check the literal printed form of identity 9");

    // table
    std::vector<std::string> tb_families{"monomial", "bernoulli", "euler", "hermite"};
    std::vector<std::string> tb_bases{"T", "U"};
    unsigned tb_max_n = 8;
    std::string tb_format = "json";
    CLI::App* table = app.add_subcommand("table", "Emit coefficient tables");
    table->add_option("--families", tb_families, "Comma-separated families")
        ->delimiter(',')
        ->check(CLI::IsMember({"monomial", "bernoulli", "euler", "hermite"}));
    table->add_option("--bases", tb_bases, "Comma-separated bases")
        ->delimiter(',')
        ->check(CLI::IsMember({"T", "U"}));
    table->add_option("--max-n", tb_max_n, "Largest degree");
    table->add_option("--format", tb_format, "Output format")
        ->check(CLI::IsMember({"json", "latex"}));

    // moment
    unsigned mo_k = 0, mo_m = 0;
    std::string mo_sign;
    CLI::App* mom = app.add_subcommand("moment", "Print one weighted moment");
    mom->add_option("k", mo_k, "Weight exponent index")->required();
    mom->add_option("sign", mo_sign, "Weight half-power sign")
        ->required()
        ->check(CLI::IsMember({"minus", "plus"}));
    mom->add_option("m", mo_m, "Power of x")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (poly->parsed()) {
        if (poly_n > poly_cap) {
            std::cerr << "poly: n=" << poly_n << " exceeds cap " << poly_cap << "\n";
            return 2;
        }
        return run_poly(poly_family, poly_n, poly_format);
    }
    if (expand->parsed()) {
        if (ex_n > ex_cap) {
            std::cerr << "expand: n=" << ex_n << " exceeds cap " << ex_cap << "\n";
            return 2;
        }
        return run_expand(ex_family, ex_basis, ex_n, ex_format, ex_source);
    }
    if (verify->parsed()) return run_verify_cmd(vf_target, vf_opts);
    if (table->parsed()) return run_table(tb_families, tb_bases, tb_max_n, tb_format);
    if (mom->parsed()) return run_moment(mo_k, mo_sign, mo_m);
    return 2;
}
