#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace legseq::bounds {

// All logarithms are natural logarithms.

/// 10 k sqrt(p) log p: well-distribution bound for one or three polynomials.
[[nodiscard]] double bound_W(int k, std::uint64_t p);
/// 2^(l+3) l k sqrt(p) log p: correlation bound for the three-polynomial filter.
[[nodiscard]] double bound_C(int order, int k, std::uint64_t p);
/// 10 k l sqrt(p) log p: correlation bound for a single polynomial.
[[nodiscard]] double bound_theoremA_C(int order, int k, std::uint64_t p);
/// 2^l max_{l <= k <= 2l} Phi_k. Throws if an order in [l, 2l] is missing.
[[nodiscard]] std::int64_t bound_theorem3(int order, const std::map<int, std::int64_t>& phi);
/// s sqrt(p) (1 + log p): incomplete character sum bound.
[[nodiscard]] double weil_incomplete_bound(int s, std::uint64_t p);

struct BoundReport {
    std::string name;
    int k = 0;
    std::optional<int> order;
    std::uint64_t p = 0;
    double value = 0.0;
    std::optional<std::int64_t> measured;
    bool guaranteed = false;

    /// measured / value, when a measurement is attached.
    [[nodiscard]] std::optional<double> slack() const;
    /// True when no measurement is attached or measured <= value.
    [[nodiscard]] bool satisfied() const;
};

} // namespace legseq::bounds
