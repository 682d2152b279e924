#include "measures_detail.hpp"

namespace legseq::measures {

MeasureResult well_distribution(const BinarySequence& e)
{
    const auto start = std::chrono::steady_clock::now();
    if (e.size() == 0)
        throw Error("well-distribution of an empty sequence");
    const auto vals = e.values();
    const auto n = static_cast<std::int64_t>(vals.size());

    // One slot per step b; the ordered fold below makes the result schedule-independent.
    std::vector<detail::WCandidate> per_step(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t b = 1; b <= n; ++b)
        per_step[static_cast<std::size_t>(b - 1)] = detail::well_distribution_for_step(vals, b);

    detail::WCandidate best;
    for (const auto& c : per_step)
        if (detail::better(c.value, c.key, best.value, best.key))
            best = c;
    auto r = detail::make_w_result(best, MethodKind::exact);
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

MeasureResult correlation(const BinarySequence& e, int order, std::uint64_t budget)
{
    const auto start = std::chrono::steady_clock::now();
    detail::validate_order(e, order);
    detail::enforce_budget(e.size(), order, budget);
    const auto vals = e.values();
    const auto hi = static_cast<std::int64_t>(vals.size()) - 1;
    const auto tail = static_cast<std::int64_t>(order - 2);

    // Parallel over the first lag; each task enumerates the remaining lags.
    const std::int64_t first_max = hi - tail;
    std::vector<detail::CCandidate> per_first(static_cast<std::size_t>(first_max));
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t first = 1; first <= first_max; ++first) {
        std::vector<std::int64_t> lags(static_cast<std::size_t>(order - 1));
        for (std::size_t i = 0; i < lags.size(); ++i)
            lags[i] = first + static_cast<std::int64_t>(i);
        detail::CCandidate local;
        do {
            auto c = detail::correlation_for_lags(vals, lags);
            if (detail::better(c.value, c.key, local.value, local.key))
                local = std::move(c);
        } while (detail::next_increasing(lags, 1, hi));
        per_first[static_cast<std::size_t>(first - 1)] = std::move(local);
    }

    detail::CCandidate best;
    for (auto& c : per_first)
        if (detail::better(c.value, c.key, best.value, best.key))
            best = std::move(c);
    auto r = detail::make_c_result(best, order, MethodKind::exact);
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

} // namespace legseq::measures
