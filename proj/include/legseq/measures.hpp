#pragma once

#include "legseq/sequence.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace legseq::measures {

/// The maximising progression: |sum_{j=1..t} e_{a+jb}|, 1 <= a+b <= a+tb <= N.
struct WellDistributionWitness {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t t = 0;
    friend bool operator==(const WellDistributionWitness&, const WellDistributionWitness&) = default;
};

/// |sum_{n=1..M} e_{n+d_1} ... e_{n+d_l}|, 0 <= d_1 < ... < d_l, M + d_l <= N.
struct CorrelationWitness {
    std::vector<std::int64_t> d;
    std::int64_t m = 0;
    friend bool operator==(const CorrelationWitness&, const CorrelationWitness&) = default;
};

/// Family members (0-based indices into the family), nondecreasing shifts, window length.
struct CrossCorrelationWitness {
    std::vector<std::size_t> members;
    std::vector<std::int64_t> d;
    std::int64_t m = 0;
    friend bool operator==(const CrossCorrelationWitness&, const CrossCorrelationWitness&) = default;
};

using Witness = std::variant<WellDistributionWitness, CorrelationWitness, CrossCorrelationWitness>;

enum class MethodKind { exact, sampled, oracle };

struct Method {
    MethodKind kind = MethodKind::exact;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    friend bool operator==(const Method&, const Method&) = default;
};

struct MeasureResult {
    std::string name; // "W", "C" or "Phi"
    std::optional<int> order;
    std::int64_t value = 0;
    Witness witness;
    Method method;
    std::chrono::nanoseconds elapsed{0};
};

/// Elementary steps (lag tuples x N) allowed for exact correlation engines.
inline constexpr std::uint64_t default_budget = std::uint64_t{1} << 34;
inline constexpr std::uint64_t default_seed = 0x9E3779B97F4A7C15ull;
/// Largest N accepted by the brute-force oracles.
inline constexpr std::size_t oracle_max_length = 64;

/// Work estimate for exact C_l: C(N-1, l-1) * N, saturating at UINT64_MAX.
[[nodiscard]] std::uint64_t correlation_work(std::size_t n, int order);
/// Work estimate for exact Phi_l: |F|^l * C(N+l-2, l-1) * N, saturating.
[[nodiscard]] std::uint64_t cross_correlation_work(std::size_t family_size, std::size_t n, int order);

// OpenMP engines. Results are independent of the thread count: ties are
// broken towards the lexicographically smallest witness, (b, a, t) for W
// and (D, M) for C.
[[nodiscard]] MeasureResult well_distribution(const BinarySequence& e);
[[nodiscard]] MeasureResult correlation(const BinarySequence& e, int order, std::uint64_t budget = default_budget);
[[nodiscard]] MeasureResult cross_correlation(std::span<const BinarySequence> family, int order,
                                              std::uint64_t budget = default_budget);

/// Lower bound for C_l from `samples` uniformly drawn lag tuples, each scanned
/// over all windows. When `samples` covers every lag tuple the scan is exhaustive.
[[nodiscard]] MeasureResult correlation_sampled(const BinarySequence& e, int order, std::uint64_t samples,
                                                std::uint64_t seed = default_seed);
/// Lower bound for Phi_l from sampled member/shift tuples.
[[nodiscard]] MeasureResult cross_correlation_sampled(std::span<const BinarySequence> family, int order,
                                                      std::uint64_t samples, std::uint64_t seed = default_seed);

/// Single-threaded reference implementations of the exact engines.
namespace serial {
[[nodiscard]] MeasureResult well_distribution(const BinarySequence& e);
[[nodiscard]] MeasureResult correlation(const BinarySequence& e, int order, std::uint64_t budget = default_budget);
} // namespace serial

/// Direct loops over the definitions. N <= oracle_max_length.
[[nodiscard]] MeasureResult oracle_well_distribution(const BinarySequence& e);
[[nodiscard]] MeasureResult oracle_correlation(const BinarySequence& e, int order);

/// Signed sum selected by a witness, evaluated from the raw definition.
/// Throws if the witness violates its admissibility constraints.
[[nodiscard]] std::int64_t evaluate_witness(const BinarySequence& e, const WellDistributionWitness& w);
[[nodiscard]] std::int64_t evaluate_witness(const BinarySequence& e, const CorrelationWitness& w);
[[nodiscard]] std::int64_t evaluate_witness(std::span<const BinarySequence> family, const CrossCorrelationWitness& w);

[[nodiscard]] std::string method_name(MethodKind kind);

} // namespace legseq::measures
