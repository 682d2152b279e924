#include "legseq/error.hpp"
#include "legseq/measures.hpp"

#include <cstdlib>

namespace legseq::measures {

namespace {

void check_oracle_size(const BinarySequence& e)
{
    if (e.size() == 0 || e.size() > oracle_max_length)
        throw Error("oracle accepts 1 <= N <= " + std::to_string(oracle_max_length));
}

} // namespace

MeasureResult oracle_well_distribution(const BinarySequence& e)
{
    const auto start = std::chrono::steady_clock::now();
    check_oracle_size(e);
    const auto n = static_cast<std::int64_t>(e.size());
    std::int64_t best = -1;
    WellDistributionWitness arg;
    // Every (b, a, t) with 1 <= a + b <= a + t*b <= N, in lexicographic order.
    for (std::int64_t b = 1; b <= n; ++b)
        for (std::int64_t a = 1 - b; a + b <= n; ++a)
            // The partial sum for t is the partial sum for t-1 plus e_{a+tb}.
            for (std::int64_t t = 1, sum = 0; a + t * b <= n; ++t) {
                sum += e.at(static_cast<std::size_t>(a + t * b));
                if (std::llabs(sum) > best) {
                    best = std::llabs(sum);
                    arg = {a, b, t};
                }
            }
    MeasureResult r;
    r.name = "W";
    r.value = best;
    r.witness = arg;
    r.method.kind = MethodKind::oracle;
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

MeasureResult oracle_correlation(const BinarySequence& e, int order)
{
    const auto start = std::chrono::steady_clock::now();
    check_oracle_size(e);
    if (order < 2 || static_cast<std::size_t>(order) >= e.size())
        throw Error("correlation order must satisfy 2 <= l < N");
    const auto n = static_cast<std::int64_t>(e.size());
    const auto k = static_cast<std::size_t>(order);
    std::int64_t best = -1;
    CorrelationWitness arg;

    std::vector<std::int64_t> d(k);
    for (std::size_t i = 0; i < k; ++i)
        d[i] = static_cast<std::int64_t>(i);
    while (true) {
        std::int64_t sum = 0;
        for (std::int64_t m = 1; m + d.back() <= n; ++m) {
            int prod = 1;
            for (auto di : d)
                prod *= e.at(static_cast<std::size_t>(m + di));
            sum += prod;
            if (std::llabs(sum) > best) {
                best = std::llabs(sum);
                arg = {d, m};
            }
        }
        // next strictly increasing tuple in [0, n-1]
        std::size_t i = k;
        while (i > 0 && d[i - 1] == n - static_cast<std::int64_t>(k - i) - 1)
            --i;
        if (i == 0)
            break;
        ++d[i - 1];
        for (std::size_t j = i; j < k; ++j)
            d[j] = d[j - 1] + 1;
    }

    MeasureResult r;
    r.name = "C";
    r.order = order;
    r.value = best;
    r.witness = std::move(arg);
    r.method.kind = MethodKind::oracle;
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

} // namespace legseq::measures
