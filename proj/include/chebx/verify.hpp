#pragma once

#include <optional>
#include <string>
#include <vector>

namespace chebx {

/// One id per verification routine; together they cover every in-scope
/// identity. The CLI also accepts the pseudo-target "all".
enum class VerifyTarget {
    BernoulliT,
    EulerT,
    HermiteT,
    MonomialT,
    BernoulliU,
    EulerU,
    HermiteU,
    MonomialU,
    OrthogonalityT,
    OrthogonalityU,
    RodriguesT,
    RodriguesU,
    SurdT,
    SurdU,
    GenfuncT,
    GenfuncU,
    Calculus,
    Identities,
    Moments,
};

struct VerifyOptions {
    unsigned max_n = 24;
    // Evaluate the literal printed variants of the two defective identities
    // instead of the corrected ones (each fails at n = 2).
    bool literal_eq8 = false;
    bool literal_eq9 = false;
};

struct VerifyReport {
    std::vector<std::string> lines;  // per-item results, deterministic order
    unsigned checks = 0;
    unsigned failures = 0;
};

const std::vector<VerifyTarget>& all_targets();
std::string target_name(VerifyTarget t);
std::optional<VerifyTarget> parse_target(const std::string& name);

VerifyReport run_verify(VerifyTarget t, const VerifyOptions& opts);

}  // namespace chebx
