#pragma once

#include "legseq/constructions.hpp"

#include <set>
#include <string>
#include <vector>

namespace legseq::conditions {

struct Check {
    std::string id;
    bool passed = false;
    std::string diagnostic;
};

/// Outcome of one or more precondition checks. Passing requires every check to pass.
struct ConditionReport {
    std::vector<Check> checks;

    [[nodiscard]] bool overall() const noexcept;
    void append(const ConditionReport& other);
    void add(std::string id, bool passed, std::string diagnostic);
};

/// f, g and h each have no repeated factor.
[[nodiscard]] ConditionReport check_squarefree_triple(const PolyTriple& t);

/// f does not divide prod_{t=1..p} g(x+t)h(x+t), and g does not divide
/// prod_{t=1..p} h(x+t). Decided by stripping shift gcds from f (resp. g);
/// requires squarefree input and throws Error("precondition ...") otherwise.
[[nodiscard]] ConditionReport check_divisibility_condition(const PolyTriple& t);

/// Mirrored variant with f and g exchanged: g does not divide
/// prod f(x+t)h(x+t), and f does not divide prod h(x+t).
[[nodiscard]] ConditionReport check_divisibility_condition_symmetric(const PolyTriple& t);

/// All of A, B, C are non-residues, A is not inside B u C, B is not inside C.
[[nodiscard]] ConditionReport check_theorem2_sets(const ff::PrimeModulus& p, const std::set<ff::residue>& a,
                                                  const std::set<ff::residue>& b, const std::set<ff::residue>& c);

/// Which of the correlation-order conditions hold:
///   order_i:   l = 2
///   order_ii:  l < p and 2 is a primitive root mod p
///   order_iii: (4k)^l < p
/// overall() here means "at least one holds"; use `satisfied` for the ids.
struct CorrelationOrderReport {
    ConditionReport report;
    std::vector<std::string> satisfied;
    [[nodiscard]] bool any() const noexcept { return !satisfied.empty(); }
};
[[nodiscard]] CorrelationOrderReport check_correlation_order(int order, int k, const ff::PrimeModulus& p);

/// Strips from `target` every irreducible factor dividing some shift
/// prod_{t in [first, last]} of the `shifted` polynomials. `target` must be
/// squarefree. Returns the surviving part (monic) and the shifts that removed
/// a factor. Exposed for testing the scan-order and chunking invariants.
struct StripResult {
    ff::Poly survivor;
    std::vector<std::uint64_t> stripping_shifts;
};
[[nodiscard]] StripResult strip_shift_factors(const ff::Poly& target, const std::vector<ff::Poly>& shifted,
                                              std::uint64_t first, std::uint64_t last, bool descending = false);

/// Same result computed over disjoint t-chunks in parallel and merged.
[[nodiscard]] ff::Poly strip_shift_factors_parallel(const ff::Poly& target, const std::vector<ff::Poly>& shifted);

} // namespace legseq::conditions
