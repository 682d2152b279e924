#pragma once

#include "legseq/error.hpp"
#include "legseq/measures.hpp"

#include <algorithm>
#include <array>
#include <span>
#include <cstdint>
#include <string>
#include <vector>

namespace legseq::measures::detail {

/// Best window of a +-1 stream: sum over elements [start, end) (0-based).
/// Maximises |sum|, then minimises start, then end.
struct WindowBest {
    std::int64_t value = -1;
    std::int64_t start = 0;
    std::int64_t end = 0;
};

template <class Get>
WindowBest best_window(std::size_t len, Get&& get)
{
    WindowBest best;
    std::int64_t prefix = 0, hi = 0, lo = 0;
    std::int64_t hi_at = 0, lo_at = 0;
    auto consider = [&](std::int64_t v, std::int64_t s, std::int64_t e) {
        if (v > best.value || (v == best.value && (s < best.start || (s == best.start && e < best.end))))
            best = {v, s, e};
    };
    for (std::size_t j = 1; j <= len; ++j) {
        prefix += get(j - 1);
        const auto jj = static_cast<std::int64_t>(j);
        consider(prefix - lo, lo_at, jj);
        consider(hi - prefix, hi_at, jj);
        if (prefix > hi) {
            hi = prefix;
            hi_at = jj;
        }
        if (prefix < lo) {
            lo = prefix;
            lo_at = jj;
        }
    }
    return best;
}

/// Candidate ordering shared by all reductions: larger value wins, ties go
/// to the lexicographically smaller key.
template <class Key>
bool better(std::int64_t va, const Key& ka, std::int64_t vb, const Key& kb)
{
    if (va != vb)
        return va > vb;
    return ka < kb;
}

/// Key for W candidates: (b, a, t).
struct WCandidate {
    std::int64_t value = -1;
    std::array<std::int64_t, 3> key{}; // b, a, t
};

/// Best progression window for a fixed difference b (1-based N-length sequence).
inline WCandidate well_distribution_for_step(std::span<const std::int8_t> e, std::int64_t b)
{
    const auto n = static_cast<std::int64_t>(e.size());
    WCandidate best;
    for (std::int64_t r = 1; r <= std::min(b, n); ++r) {
        const auto len = static_cast<std::size_t>((n - r) / b + 1);
        auto w = best_window(len, [&](std::size_t j) {
            return static_cast<std::int64_t>(e[static_cast<std::size_t>(r - 1 + static_cast<std::int64_t>(j) * b)]);
        });
        std::array<std::int64_t, 3> key{b, r + (w.start - 1) * b, w.end - w.start};
        if (better(w.value, key, best.value, best.key))
            best = {w.value, key};
    }
    return best;
}

inline MeasureResult make_w_result(const WCandidate& c, MethodKind kind)
{
    MeasureResult r;
    r.name = "W";
    r.value = c.value;
    r.witness = WellDistributionWitness{c.key[1], c.key[0], c.key[2]};
    r.method.kind = kind;
    return r;
}

/// Key for C candidates: (d_1, lags..., M) with lags relative to d_1.
struct CCandidate {
    std::int64_t value = -1;
    std::vector<std::int64_t> key;
};

/// Scans all windows of the lag-product stream for lags 0 < delta_2 < ... .
inline CCandidate correlation_for_lags(std::span<const std::int8_t> e, std::span<const std::int64_t> lags)
{
    const auto n = static_cast<std::int64_t>(e.size());
    const auto len = static_cast<std::size_t>(n - lags.back());
    auto w = best_window(len, [&](std::size_t m) {
        int prod = e[m];
        for (auto d : lags)
            prod *= e[m + static_cast<std::size_t>(d)];
        return static_cast<std::int64_t>(prod);
    });
    CCandidate c;
    c.value = w.value;
    c.key.reserve(lags.size() + 2);
    c.key.push_back(w.start);
    c.key.insert(c.key.end(), lags.begin(), lags.end());
    c.key.push_back(w.end - w.start);
    return c;
}

inline MeasureResult make_c_result(const CCandidate& c, int order, MethodKind kind)
{
    MeasureResult r;
    r.name = "C";
    r.order = order;
    r.value = c.value;
    CorrelationWitness w;
    const auto d1 = c.key.front();
    w.d.push_back(d1);
    for (std::size_t i = 1; i + 1 < c.key.size(); ++i)
        w.d.push_back(d1 + c.key[i]);
    w.m = c.key.back();
    r.witness = std::move(w);
    r.method.kind = kind;
    return r;
}

/// Advances a strictly increasing tuple in [lo, hi] to its lexicographic successor.
inline bool next_increasing(std::vector<std::int64_t>& v, std::size_t from, std::int64_t hi)
{
    const auto k = v.size();
    for (std::size_t i = k; i-- > from;) {
        if (v[i] < hi - static_cast<std::int64_t>(k - 1 - i)) {
            ++v[i];
            for (std::size_t j = i + 1; j < k; ++j)
                v[j] = v[j - 1] + 1;
            return true;
        }
    }
    return false;
}

inline void validate_order(const BinarySequence& e, int order)
{
    if (order < 2)
        throw Error("correlation order must be at least 2");
    if (static_cast<std::size_t>(order) >= e.size())
        throw Error("correlation order must be below the sequence length");
}

inline void enforce_budget(std::size_t n, int order, std::uint64_t budget)
{
    const auto work = correlation_work(n, order);
    if (work > budget)
        throw BudgetExceeded("exact C_" + std::to_string(order) + " needs " + std::to_string(work) +
                             " steps, budget is " + std::to_string(budget) +
                             "; use the sampled estimator or raise the budget");
}

} // namespace legseq::measures::detail
