#include "legseq/rng.hpp"
#include "measures_detail.hpp"

#include <set>

namespace legseq::measures {

namespace {

/// Uniform (l-1)-subset of {1, ..., N-1} by Floyd's algorithm, ascending.
std::vector<std::int64_t> draw_lags(SplitMix64& rng, std::int64_t n, std::size_t k)
{
    std::set<std::int64_t> chosen;
    const auto universe = n - 1;
    for (auto j = universe - static_cast<std::int64_t>(k) + 1; j <= universe; ++j) {
        const auto t = 1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(j)));
        if (!chosen.insert(t).second)
            chosen.insert(j);
    }
    return {chosen.begin(), chosen.end()};
}

} // namespace

MeasureResult correlation_sampled(const BinarySequence& e, int order, std::uint64_t samples, std::uint64_t seed)
{
    const auto start = std::chrono::steady_clock::now();
    detail::validate_order(e, order);
    if (samples == 0)
        throw Error("sample count must be positive");

    MeasureResult r;
    const auto tuples = correlation_work(e.size(), order) / e.size();
    if (samples >= tuples) {
        r = correlation(e, order, ~std::uint64_t{0});
    } else {
        const auto vals = e.values();
        SplitMix64 rng(seed);
        std::vector<std::vector<std::int64_t>> draws(samples);
        for (auto& d : draws)
            d = draw_lags(rng, static_cast<std::int64_t>(vals.size()), static_cast<std::size_t>(order - 1));

        std::vector<detail::CCandidate> scanned(samples);
        const auto count = static_cast<std::int64_t>(samples);
#pragma omp parallel for schedule(dynamic, 4)
        for (std::int64_t i = 0; i < count; ++i)
            scanned[static_cast<std::size_t>(i)] =
                detail::correlation_for_lags(vals, draws[static_cast<std::size_t>(i)]);

        detail::CCandidate best;
        for (auto& c : scanned)
            if (detail::better(c.value, c.key, best.value, best.key))
                best = std::move(c);
        r = detail::make_c_result(best, order, MethodKind::sampled);
    }
    r.method = {MethodKind::sampled, samples, seed};
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

} // namespace legseq::measures
