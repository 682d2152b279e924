#include "legseq/conditions.hpp"

#include "legseq/error.hpp"

#include <algorithm>
#include <sstream>

namespace legseq::conditions {

using ff::Poly;

bool ConditionReport::overall() const noexcept
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void ConditionReport::append(const ConditionReport& other)
{
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

void ConditionReport::add(std::string id, bool passed, std::string diagnostic)
{
    checks.push_back({std::move(id), passed, std::move(diagnostic)});
}

ConditionReport check_squarefree_triple(const PolyTriple& t)
{
    ConditionReport r;
    const std::pair<const char*, const Poly*> roles[] = {{"f", &t.f}, {"g", &t.g}, {"h", &t.h}};
    for (auto [name, poly] : roles) {
        const std::string id = std::string("squarefree_") + name;
        try {
            const bool ok = ff::is_squarefree(*poly);
            r.add(id, ok,
                  ok ? "" : std::string(name) + "(x) = " + poly->to_string() + " has a repeated factor " +
                                ff::gcd(*poly, ff::derivative(*poly)).to_string());
        } catch (const Error& e) {
            r.add(id, false, std::string(name) + ": " + e.what());
        }
    }
    return r;
}

namespace {

Poly shifted_product_mod(const std::vector<Poly>& shifted, std::uint64_t t, const Poly& modulus_poly)
{
    Poly acc = Poly::constant(modulus_poly.modulus(), 1);
    for (const auto& s : shifted)
        acc = ff::mod(ff::mul(acc, ff::mod(ff::shift(s, t), modulus_poly)), modulus_poly);
    return acc;
}

/// Removes from r every factor shared with `product` (r squarefree).
bool strip_once(Poly& r, const Poly& product)
{
    bool stripped = false;
    while (r.degree() >= 1) {
        Poly common = ff::gcd(r, product.is_zero() ? Poly(r.modulus()) : ff::mod(product, r));
        if (common.degree() < 1)
            break;
        r = ff::divmod(r, common).quotient;
        stripped = true;
    }
    return stripped;
}

void require_squarefree(const Poly& f, const char* role)
{
    bool ok = false;
    try {
        ok = ff::is_squarefree(f);
    } catch (const Error&) {
        ok = false;
    }
    if (!ok)
        throw Error(std::string("precondition: ") + role + " must be squarefree of degree in [1, p)");
}

/// One non-divisibility condition: target does not divide prod_{t=1..p} prod(shifted)(x+t).
Check divisibility_check(const std::string& id, const char* target_name, const Poly& target,
                         const std::vector<std::pair<const char*, const Poly*>>& shifted)
{
    std::vector<Poly> polys;
    std::string product_text;
    for (auto [name, poly] : shifted) {
        polys.push_back(*poly);
        product_text += std::string(name) + "(x+t)";
    }
    const auto p = target.p();
    auto res = strip_shift_factors(target, polys, 1, p);
    Check c{id, res.survivor.degree() >= 1, ""};
    if (c.passed) {
        c.diagnostic = std::string("surviving factor ") + res.survivor.to_string() + " of " + target_name +
                       " divides no shift";
        return c;
    }
    std::ostringstream os;
    os << target_name << "(x) divides prod_{t=1}^{p} " << product_text << "; factors removed at t=";
    for (std::size_t i = 0; i < res.stripping_shifts.size(); ++i) {
        if (i)
            os << ',';
        if (res.stripping_shifts[i] == p)
            os << 'p';
        else
            os << res.stripping_shifts[i];
    }
    // The t = p term is the unshifted product.
    Poly unshifted = Poly::constant(target.modulus(), 1);
    for (const auto& s : polys)
        unshifted = ff::mul(unshifted, s);
    if (ff::mod(unshifted, target).is_zero())
        os << "; t=p shift reproduces " << target_name;
    c.diagnostic = os.str();
    return c;
}

} // namespace

StripResult strip_shift_factors(const Poly& target, const std::vector<Poly>& shifted, std::uint64_t first,
                                std::uint64_t last, bool descending)
{
    StripResult res{ff::monic(target), {}};
    if (first > last)
        return res;
    for (std::uint64_t i = 0; i <= last - first && res.survivor.degree() >= 1; ++i) {
        const auto t = descending ? last - i : first + i;
        if (strip_once(res.survivor, shifted_product_mod(shifted, t, res.survivor)))
            res.stripping_shifts.push_back(t);
    }
    if (descending)
        std::reverse(res.stripping_shifts.begin(), res.stripping_shifts.end());
    return res;
}

Poly strip_shift_factors_parallel(const Poly& target, const std::vector<Poly>& shifted)
{
    const auto p = static_cast<std::int64_t>(target.p());
    constexpr std::int64_t chunk = 256;
    const auto chunks = (p + chunk - 1) / chunk;
    // Each chunk records the part of target that its shifts cover.
    std::vector<Poly> covered(static_cast<std::size_t>(chunks), Poly(target.modulus()));
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t c = 0; c < chunks; ++c) {
        const auto lo = static_cast<std::uint64_t>(c * chunk + 1);
        const auto hi = static_cast<std::uint64_t>(std::min(p, (c + 1) * chunk));
        const auto part = strip_shift_factors(target, shifted, lo, hi).survivor;
        covered[static_cast<std::size_t>(c)] = ff::divmod(ff::monic(target), part).quotient;
    }
    Poly survivor = ff::monic(target);
    for (const auto& cov : covered)
        strip_once(survivor, cov);
    return survivor;
}

ConditionReport check_divisibility_condition(const PolyTriple& t)
{
    require_squarefree(t.f, "f");
    require_squarefree(t.g, "g");
    require_squarefree(t.h, "h");
    ConditionReport r;
    r.checks.push_back(divisibility_check("f_not_divides_shifts_gh", "f", t.f, {{"g", &t.g}, {"h", &t.h}}));
    r.checks.push_back(divisibility_check("g_not_divides_shifts_h", "g", t.g, {{"h", &t.h}}));
    return r;
}

ConditionReport check_divisibility_condition_symmetric(const PolyTriple& t)
{
    require_squarefree(t.f, "f");
    require_squarefree(t.g, "g");
    require_squarefree(t.h, "h");
    ConditionReport r;
    r.checks.push_back(divisibility_check("g_not_divides_shifts_fh", "g", t.g, {{"f", &t.f}, {"h", &t.h}}));
    r.checks.push_back(divisibility_check("f_not_divides_shifts_h", "f", t.f, {{"h", &t.h}}));
    return r;
}

namespace {

std::string set_text(const std::set<ff::residue>& s)
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (auto v : s) {
        if (!first)
            os << ',';
        first = false;
        os << v;
    }
    os << '}';
    return os.str();
}

} // namespace

ConditionReport check_theorem2_sets(const ff::PrimeModulus& p, const std::set<ff::residue>& a,
                                    const std::set<ff::residue>& b, const std::set<ff::residue>& c)
{
    ConditionReport r;
    const std::pair<const char*, const std::set<ff::residue>*> sets[] = {{"A", &a}, {"B", &b}, {"C", &c}};
    for (auto [name, s] : sets) {
        std::vector<ff::residue> bad;
        for (auto v : *s)
            if (ff::legendre_residue(v, p) != -1)
                bad.push_back(v);
        std::string diag;
        if (s->empty())
            diag = std::string(name) + " is empty";
        for (auto v : bad)
            diag += (diag.empty() ? "" : "; ") + std::to_string(v) + " in " + name + " is not a quadratic non-residue";
        r.add(std::string("qnr_") + name, bad.empty() && !s->empty(), diag);
    }

    std::vector<ff::residue> a_outside;
    for (auto v : a)
        if (!b.count(v) && !c.count(v))
            a_outside.push_back(v);
    r.add("A_not_subset_B_union_C", !a_outside.empty(),
          a_outside.empty() ? "A=" + set_text(a) + " is contained in B u C"
                            : "witness " + std::to_string(a_outside.front()));

    std::vector<ff::residue> b_outside;
    for (auto v : b)
        if (!c.count(v))
            b_outside.push_back(v);
    r.add("B_not_subset_C", !b_outside.empty(),
          b_outside.empty() ? "B=" + set_text(b) + " is contained in C=" + set_text(c)
                            : "witness " + std::to_string(b_outside.front()));
    return r;
}

CorrelationOrderReport check_correlation_order(int order, int k, const ff::PrimeModulus& p)
{
    CorrelationOrderReport out;
    const auto pv = p.value();

    const bool i = order == 2;
    out.report.add("order_i", i, i ? "l = 2" : "l = " + std::to_string(order));

    const bool lt = order >= 0 && static_cast<std::uint64_t>(order) < pv;
    const bool prim = ff::is_primitive_root(2, p);
    out.report.add("order_ii", lt && prim,
                   std::string(lt ? "l < p" : "l >= p") + (prim ? ", 2 is a primitive root" : ", 2 is not a primitive root"));

    // (4k)^l < p, exactly: multiply with an early exit once the product reaches p.
    bool iii = k >= 1 && order >= 0;
    if (iii) {
        const unsigned __int128 base = 4 * static_cast<unsigned __int128>(k);
        unsigned __int128 acc = 1;
        for (int j = 0; j < order && iii; ++j) {
            acc *= base;
            if (acc >= pv)
                iii = false;
        }
        iii = iii && acc < pv;
    }
    out.report.add("order_iii", iii,
                   "(4*" + std::to_string(k) + ")^" + std::to_string(order) + (iii ? " < " : " >= ") + std::to_string(pv));

    for (const auto& c : out.report.checks)
        if (c.passed)
            out.satisfied.push_back(c.id);
    return out;
}

} // namespace legseq::conditions
