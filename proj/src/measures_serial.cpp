#include "measures_detail.hpp"

#include <limits>

namespace legseq::measures {

namespace {

constexpr auto saturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b)
{
    if (a != 0 && b > saturated / a)
        return saturated;
    return a * b;
}

/// Binomial coefficient, saturating.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > saturated)
            return saturated;
    }
    return static_cast<std::uint64_t>(acc);
}

} // namespace

std::uint64_t correlation_work(std::size_t n, int order)
{
    if (order < 1 || n == 0)
        return 0;
    return sat_mul(binomial(n - 1, static_cast<std::uint64_t>(order - 1)), n);
}

std::uint64_t cross_correlation_work(std::size_t family_size, std::size_t n, int order)
{
    if (order < 1 || n == 0)
        return 0;
    std::uint64_t tuples = 1;
    for (int i = 0; i < order; ++i)
        tuples = sat_mul(tuples, family_size);
    const auto lags = binomial(n + static_cast<std::uint64_t>(order) - 2, static_cast<std::uint64_t>(order - 1));
    return sat_mul(sat_mul(tuples, lags), n);
}

std::string method_name(MethodKind kind)
{
    switch (kind) {
    case MethodKind::exact:
        return "exact";
    case MethodKind::sampled:
        return "sampled";
    case MethodKind::oracle:
        return "oracle";
    }
    return "unknown";
}

std::int64_t evaluate_witness(const BinarySequence& e, const WellDistributionWitness& w)
{
    const auto n = static_cast<std::int64_t>(e.size());
    if (w.b < 1 || w.t < 1 || w.a + w.b < 1 || w.a + w.t * w.b > n)
        throw Error("well-distribution witness out of range");
    std::int64_t sum = 0;
    for (std::int64_t j = 1; j <= w.t; ++j)
        sum += e.at(static_cast<std::size_t>(w.a + j * w.b));
    return sum;
}

std::int64_t evaluate_witness(const BinarySequence& e, const CorrelationWitness& w)
{
    const auto n = static_cast<std::int64_t>(e.size());
    if (w.d.empty() || w.d.front() < 0 || w.m < 1 || w.m + w.d.back() > n)
        throw Error("correlation witness out of range");
    for (std::size_t i = 1; i < w.d.size(); ++i)
        if (w.d[i] <= w.d[i - 1])
            throw Error("correlation witness shifts must be strictly increasing");
    std::int64_t sum = 0;
    for (std::int64_t k = 1; k <= w.m; ++k) {
        int prod = 1;
        for (auto d : w.d)
            prod *= e.at(static_cast<std::size_t>(k + d));
        sum += prod;
    }
    return sum;
}

std::int64_t evaluate_witness(std::span<const BinarySequence> family, const CrossCorrelationWitness& w)
{
    if (w.members.empty() || w.members.size() != w.d.size())
        throw Error("cross-correlation witness is malformed");
    const auto n = static_cast<std::int64_t>(family[w.members.front()].size());
    if (w.d.front() < 0 || w.m < 1 || w.m + w.d.back() > n)
        throw Error("cross-correlation witness out of range");
    for (std::size_t i = 0; i < w.d.size(); ++i) {
        if (i > 0 && w.d[i] < w.d[i - 1])
            throw Error("cross-correlation witness shifts must be nondecreasing");
        for (std::size_t j = 0; j < i; ++j)
            if (w.d[i] == w.d[j] && family[w.members[i]] == family[w.members[j]])
                throw Error("cross-correlation witness repeats a sequence at an equal shift");
    }
    std::int64_t sum = 0;
    for (std::int64_t k = 1; k <= w.m; ++k) {
        int prod = 1;
        for (std::size_t i = 0; i < w.d.size(); ++i)
            prod *= family[w.members[i]].at(static_cast<std::size_t>(k + w.d[i]));
        sum += prod;
    }
    return sum;
}

namespace serial {

MeasureResult well_distribution(const BinarySequence& e)
{
    const auto start = std::chrono::steady_clock::now();
    if (e.size() == 0)
        throw Error("well-distribution of an empty sequence");
    const auto vals = e.values();
    detail::WCandidate best;
    for (std::int64_t b = 1; b <= static_cast<std::int64_t>(vals.size()); ++b) {
        auto c = detail::well_distribution_for_step(vals, b);
        if (detail::better(c.value, c.key, best.value, best.key))
            best = c;
    }
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
    std::vector<std::int64_t> lags(static_cast<std::size_t>(order - 1));
    for (std::size_t i = 0; i < lags.size(); ++i)
        lags[i] = static_cast<std::int64_t>(i) + 1;
    detail::CCandidate best;
    do {
        auto c = detail::correlation_for_lags(vals, lags);
        if (detail::better(c.value, c.key, best.value, best.key))
            best = std::move(c);
    } while (detail::next_increasing(lags, 0, hi));
    auto r = detail::make_c_result(best, order, MethodKind::exact);
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

} // namespace serial

} // namespace legseq::measures
