#pragma once

#include "legseq/bounds.hpp"
#include "legseq/conditions.hpp"
#include "legseq/measures.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace legseq {

inline constexpr const char* tool_version = "1.0.0";

struct PolyEntry {
    std::string text; // as given on the command line
    std::vector<std::uint64_t> coeffs; // normalised, ascending
    friend bool operator==(const PolyEntry&, const PolyEntry&) = default;
};

/// Everything a `measure` / `crosscorr` / `check` run produces.
///
/// JSON layout:
///   {version, p, polynomials:{f:{text,coeffs},...}, n,
///    conditions:{overall, checks:[{id,passed,diagnostic}]},
///    measures:[{name, order, value, method, seed, samples, witness}],
///    bounds:[{name, k, order, p, value, measured, guaranteed, slack}],
///    timing_ms:{...}}
/// Witness objects: W {a,b,t}; C {d,m}; Phi {members,d,m} with members
/// numbered from 1. Only timing_ms varies between identical invocations.
struct RunReport {
    std::string version = tool_version;
    std::optional<std::uint64_t> p;
    std::map<std::string, PolyEntry> polynomials;
    std::size_t n = 0;
    std::optional<conditions::ConditionReport> conditions;
    std::vector<measures::MeasureResult> measures;
    std::vector<bounds::BoundReport> bounds;
    std::map<std::string, double> timing_ms;
};

[[nodiscard]] nlohmann::ordered_json to_json(const conditions::ConditionReport& r);
[[nodiscard]] nlohmann::ordered_json to_json(const measures::MeasureResult& m);
[[nodiscard]] nlohmann::ordered_json to_json(const bounds::BoundReport& b);
[[nodiscard]] nlohmann::ordered_json to_json(const RunReport& r);

[[nodiscard]] conditions::ConditionReport condition_report_from_json(const nlohmann::ordered_json& j);
[[nodiscard]] measures::MeasureResult measure_from_json(const nlohmann::ordered_json& j);
[[nodiscard]] bounds::BoundReport bound_from_json(const nlohmann::ordered_json& j);
[[nodiscard]] RunReport run_report_from_json(const nlohmann::ordered_json& j);

/// Serialisation with timing_ms removed, for determinism comparisons.
[[nodiscard]] std::string deterministic_dump(nlohmann::ordered_json j);

} // namespace legseq
