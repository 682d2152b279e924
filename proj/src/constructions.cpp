#include "legseq/constructions.hpp"

#include "legseq/error.hpp"

#include <algorithm>
#include <string>

namespace legseq {

using ff::Poly;
using ff::residue;

PolyTriple::PolyTriple(Poly f_, Poly g_, Poly h_) : f(std::move(f_)), g(std::move(g_)), h(std::move(h_))
{
    if (!(f.modulus() == g.modulus()) || !(f.modulus() == h.modulus()))
        throw Error("triple polynomials must share a modulus");
    if (f.degree() < 1 || g.degree() < 1 || h.degree() < 1)
        throw Error("constant polynomial in triple");
}

int PolyTriple::k() const noexcept
{
    return std::max({f.degree(), g.degree(), h.degree()});
}

QnrSet::QnrSet(ff::PrimeModulus p, std::set<residue> elements) : p_(p)
{
    if (elements.empty())
        throw Error("non-residue set must not be empty");
    for (auto n : elements) {
        const auto r = n % p.value();
        if (ff::legendre_residue(r, p) != -1)
            throw Error(std::to_string(n) + " is not a quadratic non-residue modulo " + std::to_string(p.value()));
        elements_.insert(r);
    }
}

namespace {

std::int8_t symbol_or_one(residue v, const ff::PrimeModulus& p)
{
    return v == 0 ? std::int8_t{1} : static_cast<std::int8_t>(ff::legendre_residue(v, p));
}

std::int8_t triple_element(const PolyTriple& t, residue n)
{
    const auto& p = t.modulus();
    const residue fv = t.f.eval(n);
    const residue gv = t.g.eval(n);
    if (fv == 0 || gv == 0)
        return 1;
    const int hs = ff::legendre_residue(t.h.eval(n), p);
    return static_cast<std::int8_t>(hs >= 0 ? ff::legendre_residue(fv, p) : ff::legendre_residue(gv, p));
}

} // namespace

BinarySequence construct_single(const Poly& f)
{
    if (f.degree() < 1)
        throw Error("constant polynomial");
    const auto p = f.p();
    std::vector<std::int8_t> out(p);
    const auto np = static_cast<std::int64_t>(p);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < np; ++i)
        out[static_cast<std::size_t>(i)] = symbol_or_one(f.eval(static_cast<residue>(i + 1)), f.modulus());
    SequenceMeta meta;
    meta.p = p;
    meta.construction = "single";
    meta.polynomials["f"] = f.to_string();
    return BinarySequence(std::move(out), std::move(meta));
}

BinarySequence construct_triple(const PolyTriple& t)
{
    const auto p = t.modulus().value();
    std::vector<std::int8_t> out(p);
    const auto np = static_cast<std::int64_t>(p);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < np; ++i)
        out[static_cast<std::size_t>(i)] = triple_element(t, static_cast<residue>(i + 1));
    SequenceMeta meta;
    meta.p = p;
    meta.construction = "triple";
    meta.polynomials["f"] = t.f.to_string();
    meta.polynomials["g"] = t.g.to_string();
    meta.polynomials["h"] = t.h.to_string();
    return BinarySequence(std::move(out), std::move(meta));
}

int closed_form_element(const PolyTriple& t, std::uint64_t n)
{
    const auto& p = t.modulus();
    const int fs = ff::legendre_residue(t.f.eval(n), p);
    const int gs = ff::legendre_residue(t.g.eval(n), p);
    const int hs = ff::legendre_residue(t.h.eval(n), p);
    if (fs == 0 || gs == 0 || hs == 0)
        throw Error("formula undefined at n=" + std::to_string(n));
    return ((1 + hs) * fs + (1 - hs) * gs) / 2;
}

BinarySequence construct_combined(const BinarySequence& f, const BinarySequence& g, const BinarySequence& h)
{
    if (f.size() != g.size() || f.size() != h.size())
        throw Error("combine: sequence lengths differ");
    std::vector<std::int8_t> out(f.size());
    const auto fv = f.values(), gv = g.values(), hv = h.values();
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = hv[i] > 0 ? fv[i] : gv[i];
    SequenceMeta meta;
    meta.construction = "combined";
    return BinarySequence(std::move(out), std::move(meta));
}

namespace {

Poly product_of_quadratics(const QnrSet& s)
{
    const auto& p = s.modulus();
    Poly acc = Poly::constant(p, 1);
    for (auto n : s.elements())
        acc = ff::mul(acc, Poly(p, {ff::submod(0, n, p.value()), 0, 1}));
    return acc;
}

} // namespace

PolyTriple build_theorem2_polys(const QnrSet& a, const QnrSet& b, const QnrSet& c)
{
    if (!(a.modulus() == b.modulus()) || !(a.modulus() == c.modulus()))
        throw Error("non-residue sets must share a modulus");
    return PolyTriple(product_of_quadratics(a), product_of_quadratics(b), product_of_quadratics(c));
}

BinarySequence truncate_half(const BinarySequence& seq)
{
    const auto keep = (seq.size() + 1) / 2;
    std::vector<std::int8_t> out(seq.values().begin(), seq.values().begin() + static_cast<std::ptrdiff_t>(keep));
    return BinarySequence(std::move(out), seq.meta());
}

} // namespace legseq
