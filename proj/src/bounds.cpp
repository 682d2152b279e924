#include "legseq/bounds.hpp"

#include "legseq/error.hpp"

#include <algorithm>
#include <cmath>

namespace legseq::bounds {

namespace {

void check_base(int k, std::uint64_t p)
{
    if (k < 1)
        throw Error("degree bound k must be at least 1");
    if (p < 3)
        throw Error("p must be at least 3");
}

double root_log(std::uint64_t p)
{
    const auto x = static_cast<double>(p);
    return std::sqrt(x) * std::log(x);
}

} // namespace

double bound_W(int k, std::uint64_t p)
{
    check_base(k, p);
    return 10.0 * k * root_log(p);
}

double bound_C(int order, int k, std::uint64_t p)
{
    check_base(k, p);
    if (order < 2)
        throw Error("correlation order must be at least 2");
    return std::ldexp(1.0, order + 3) * order * k * root_log(p);
}

double bound_theoremA_C(int order, int k, std::uint64_t p)
{
    check_base(k, p);
    if (order < 2)
        throw Error("correlation order must be at least 2");
    return 10.0 * k * order * root_log(p);
}

std::int64_t bound_theorem3(int order, const std::map<int, std::int64_t>& phi)
{
    if (order < 1 || order > 60)
        throw Error("order out of range");
    std::int64_t best = 0;
    for (int k = order; k <= 2 * order; ++k) {
        auto it = phi.find(k);
        if (it == phi.end())
            throw Error("missing cross-correlation of order " + std::to_string(k));
        best = std::max(best, it->second);
    }
    return (std::int64_t{1} << order) * best;
}

double weil_incomplete_bound(int s, std::uint64_t p)
{
    if (s < 1)
        throw Error("s must be at least 1");
    const auto x = static_cast<double>(p);
    return s * std::sqrt(x) * (1.0 + std::log(x));
}

std::optional<double> BoundReport::slack() const
{
    if (!measured)
        return std::nullopt;
    return static_cast<double>(*measured) / value;
}

bool BoundReport::satisfied() const
{
    return !measured || static_cast<double>(*measured) <= value;
}

} // namespace legseq::bounds
