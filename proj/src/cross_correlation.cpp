#include "legseq/rng.hpp"
#include "measures_detail.hpp"

namespace legseq::measures {

namespace {

struct Family {
    std::span<const BinarySequence> seqs;
    std::vector<std::vector<bool>> equal; // value equality between members
    std::int64_t n = 0;

    Family(std::span<const BinarySequence> s, int order) : seqs(s)
    {
        if (s.empty())
            throw Error("cross-correlation of an empty family");
        if (order < 1)
            throw Error("cross-correlation order must be at least 1");
        n = static_cast<std::int64_t>(s.front().size());
        if (n == 0)
            throw Error("cross-correlation of empty sequences");
        for (const auto& x : s)
            if (static_cast<std::int64_t>(x.size()) != n)
                throw Error("cross-correlation family members differ in length");
        equal.assign(s.size(), std::vector<bool>(s.size(), false));
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = 0; j < s.size(); ++j)
                equal[i][j] = s[i] == s[j];
    }

    /// Forbidden when two equal sequences sit at the same shift.
    [[nodiscard]] bool admissible(std::span<const std::size_t> members, std::span<const std::int64_t> lags) const
    {
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (lags[i] == lags[j] && equal[members[i]][members[j]])
                    return false;
        return true;
    }

    /// Best window for members at relative shifts `lags` (lags[0] == 0).
    /// Key layout: members..., d_1, lags[1..]..., M.
    [[nodiscard]] detail::CCandidate scan(std::span<const std::size_t> members, std::span<const std::int64_t> lags) const
    {
        const auto len = static_cast<std::size_t>(n - lags.back());
        auto w = detail::best_window(len, [&](std::size_t m) {
            int prod = 1;
            for (std::size_t i = 0; i < members.size(); ++i)
                prod *= seqs[members[i]].values()[m + static_cast<std::size_t>(lags[i])];
            return static_cast<std::int64_t>(prod);
        });
        detail::CCandidate c;
        c.value = w.value;
        for (auto m : members)
            c.key.push_back(static_cast<std::int64_t>(m));
        c.key.push_back(w.start);
        c.key.insert(c.key.end(), lags.begin() + 1, lags.end());
        c.key.push_back(w.end - w.start);
        return c;
    }
};

MeasureResult make_phi_result(const detail::CCandidate& c, int order, MethodKind kind)
{
    MeasureResult r;
    r.name = "Phi";
    r.order = order;
    r.value = c.value;
    CrossCorrelationWitness w;
    const auto k = static_cast<std::size_t>(order);
    if (c.value >= 0) {
        for (std::size_t i = 0; i < k; ++i)
            w.members.push_back(static_cast<std::size_t>(c.key[i]));
        const auto d1 = c.key[k];
        w.d.push_back(d1);
        for (std::size_t i = k + 1; i + 1 < c.key.size(); ++i)
            w.d.push_back(d1 + c.key[i]);
        w.m = c.key.back();
    }
    r.witness = std::move(w);
    r.method.kind = kind;
    return r;
}

/// Advances a nondecreasing tuple (positions from..end) bounded by hi.
bool next_nondecreasing(std::vector<std::int64_t>& v, std::size_t from, std::int64_t hi)
{
    for (std::size_t i = v.size(); i-- > from;) {
        if (v[i] < hi) {
            ++v[i];
            for (std::size_t j = i + 1; j < v.size(); ++j)
                v[j] = v[i];
            return true;
        }
    }
    return false;
}

} // namespace

MeasureResult cross_correlation(std::span<const BinarySequence> family, int order, std::uint64_t budget)
{
    const auto start = std::chrono::steady_clock::now();
    const Family fam(family, order);
    const auto work = cross_correlation_work(family.size(), static_cast<std::size_t>(fam.n), order);
    if (work > budget)
        throw BudgetExceeded("exact Phi_" + std::to_string(order) + " needs " + std::to_string(work) +
                             " steps, budget is " + std::to_string(budget) +
                             "; use the sampled estimator or raise the budget");

    const auto k = static_cast<std::size_t>(order);
    std::int64_t tuple_count = 1;
    for (std::size_t i = 0; i < k; ++i)
        tuple_count *= static_cast<std::int64_t>(family.size());

    std::vector<detail::CCandidate> per_tuple(static_cast<std::size_t>(tuple_count));
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t idx = 0; idx < tuple_count; ++idx) {
        std::vector<std::size_t> members(k);
        auto rest = idx;
        for (std::size_t i = k; i-- > 0;) {
            members[i] = static_cast<std::size_t>(rest % static_cast<std::int64_t>(family.size()));
            rest /= static_cast<std::int64_t>(family.size());
        }
        std::vector<std::int64_t> lags(k, 0);
        detail::CCandidate local;
        do {
            if (!fam.admissible(members, lags))
                continue;
            auto c = fam.scan(members, lags);
            if (detail::better(c.value, c.key, local.value, local.key))
                local = std::move(c);
        } while (next_nondecreasing(lags, 1, fam.n - 1));
        per_tuple[static_cast<std::size_t>(idx)] = std::move(local);
    }

    detail::CCandidate best;
    for (auto& c : per_tuple)
        if (c.value >= 0 && detail::better(c.value, c.key, best.value, best.key))
            best = std::move(c);
    if (best.value < 0)
        throw Error("no admissible shift tuple for this family and order");
    auto r = make_phi_result(best, order, MethodKind::exact);
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

MeasureResult cross_correlation_sampled(std::span<const BinarySequence> family, int order, std::uint64_t samples,
                                        std::uint64_t seed)
{
    const auto start = std::chrono::steady_clock::now();
    const Family fam(family, order);
    if (samples == 0)
        throw Error("sample count must be positive");
    const auto k = static_cast<std::size_t>(order);
    constexpr int max_attempts = 64;

    SplitMix64 rng(seed);
    std::vector<std::vector<std::size_t>> members(samples);
    std::vector<std::vector<std::int64_t>> lags(samples);
    for (std::uint64_t s = 0; s < samples; ++s) {
        for (int attempt = 0; attempt < max_attempts; ++attempt) {
            std::vector<std::size_t> mem(k);
            for (auto& m : mem)
                m = static_cast<std::size_t>(rng.below(family.size()));
            std::vector<std::int64_t> lag(k, 0);
            for (std::size_t i = 1; i < k; ++i)
                lag[i] = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(fam.n)));
            std::sort(lag.begin() + 1, lag.end());
            if (fam.admissible(mem, lag)) {
                members[s] = std::move(mem);
                lags[s] = std::move(lag);
                break;
            }
        }
    }

    std::vector<detail::CCandidate> scanned(samples);
    const auto count = static_cast<std::int64_t>(samples);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < count; ++i) {
        const auto s = static_cast<std::size_t>(i);
        if (!members[s].empty())
            scanned[s] = fam.scan(members[s], lags[s]);
    }
    detail::CCandidate best;
    for (auto& c : scanned)
        if (c.value >= 0 && detail::better(c.value, c.key, best.value, best.key))
            best = std::move(c);
    if (best.value < 0)
        throw Error("sampling found no admissible shift tuple");
    auto r = make_phi_result(best, order, MethodKind::sampled);
    r.method = {MethodKind::sampled, samples, seed};
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

} // namespace legseq::measures
