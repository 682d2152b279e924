#include "legseq/poly.hpp"

#include "legseq/error.hpp"

#include <algorithm>
#include <sstream>

namespace legseq::ff {

Poly::Poly(PrimeModulus modulus, std::vector<residue> coeffs) : modulus_(modulus), coeffs_(std::move(coeffs))
{
    for (auto& c : coeffs_)
        c %= modulus_.value();
    normalize();
}

Poly Poly::from_integers(PrimeModulus modulus, std::span<const std::int64_t> coeffs)
{
    std::vector<residue> reduced;
    reduced.reserve(coeffs.size());
    for (auto c : coeffs)
        reduced.push_back(modulus.reduce(c));
    return Poly(modulus, std::move(reduced));
}

Poly Poly::constant(PrimeModulus modulus, residue c)
{
    return Poly(modulus, std::vector<residue>{c});
}

Poly Poly::monomial(PrimeModulus modulus, residue c, std::size_t e)
{
    std::vector<residue> v(e + 1, 0);
    v[e] = c;
    return Poly(modulus, std::move(v));
}

void Poly::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

residue Poly::eval(residue x) const noexcept
{
    const auto m = p();
    x %= m;
    residue acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = addmod(mulmod(acc, x, m), *it, m);
    return acc;
}

std::string Poly::to_string() const
{
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const auto c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0)
            continue;
        if (!first)
            os << " + ";
        first = false;
        if (i == 0 || c != 1)
            os << c;
        if (i > 0) {
            if (c != 1)
                os << '*';
            os << 'x';
            if (i > 1)
                os << '^' << i;
        }
    }
    return os.str();
}

namespace {

void require_same_field(const Poly& a, const Poly& b)
{
    if (!(a.modulus() == b.modulus()))
        throw Error("polynomials live over different fields");
}

} // namespace

Poly add(const Poly& a, const Poly& b)
{
    require_same_field(a, b);
    const auto m = a.p();
    std::vector<residue> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = addmod(a.coeff(i), b.coeff(i), m);
    return Poly(a.modulus(), std::move(out));
}

Poly sub(const Poly& a, const Poly& b)
{
    require_same_field(a, b);
    const auto m = a.p();
    std::vector<residue> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = submod(a.coeff(i), b.coeff(i), m);
    return Poly(a.modulus(), std::move(out));
}

Poly mul(const Poly& a, const Poly& b)
{
    require_same_field(a, b);
    if (a.is_zero() || b.is_zero())
        return Poly(a.modulus());
    const auto m = a.p();
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    std::vector<residue> out(x.size() + y.size() - 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0)
            continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            out[i + j] = addmod(out[i + j], mulmod(x[i], y[j], m), m);
    }
    return Poly(a.modulus(), std::move(out));
}

Poly scale(const Poly& a, residue c)
{
    std::vector<residue> out(a.coeffs());
    for (auto& v : out)
        v = mulmod(v, c % a.p(), a.p());
    return Poly(a.modulus(), std::move(out));
}

DivMod divmod(const Poly& a, const Poly& b)
{
    require_same_field(a, b);
    if (b.is_zero())
        throw Error("zero divisor polynomial");
    const auto m = a.p();
    if (a.degree() < b.degree())
        return {Poly(a.modulus()), a};

    std::vector<residue> rem(a.coeffs());
    const auto& d = b.coeffs();
    const auto db = static_cast<std::size_t>(b.degree());
    const residue lead_inv = invmod(b.leading(), a.modulus());
    std::vector<residue> quot(rem.size() - db, 0);
    for (std::size_t i = rem.size(); i-- > db;) {
        const residue c = mulmod(rem[i], lead_inv, m);
        if (c == 0)
            continue;
        quot[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j)
            rem[i - db + j] = submod(rem[i - db + j], mulmod(c, d[j], m), m);
    }
    rem.resize(db);
    return {Poly(a.modulus(), std::move(quot)), Poly(a.modulus(), std::move(rem))};
}

Poly mod(const Poly& a, const Poly& b)
{
    return divmod(a, b).remainder;
}

Poly monic(const Poly& a)
{
    if (a.is_zero())
        return a;
    return scale(a, invmod(a.leading(), a.modulus()));
}

Poly gcd(const Poly& a, const Poly& b)
{
    require_same_field(a, b);
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = mod(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x);
}

Poly shift(const Poly& f, residue t)
{
    const auto m = f.p();
    t %= m;
    std::vector<residue> c(f.coeffs());
    if (t == 0 || c.size() < 2)
        return f;
    const std::size_t n = c.size() - 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = n - 1; j + 1 > i; --j)
            c[j] = addmod(c[j], mulmod(t, c[j + 1], m), m);
    return Poly(f.modulus(), std::move(c));
}

Poly derivative(const Poly& f)
{
    const auto m = f.p();
    if (f.coeffs().size() < 2)
        return Poly(f.modulus());
    std::vector<residue> out(f.coeffs().size() - 1);
    for (std::size_t i = 1; i < f.coeffs().size(); ++i)
        out[i - 1] = mulmod(f.coeffs()[i], i % m, m);
    return Poly(f.modulus(), std::move(out));
}

bool is_squarefree(const Poly& f)
{
    if (f.degree() < 1)
        throw Error("constant polynomial");
    if (static_cast<std::uint64_t>(f.degree()) >= f.p())
        throw Error("degree exceeds characteristic guard");
    return gcd(f, derivative(f)).degree() == 0;
}

} // namespace legseq::ff
