#include "legseq/ff.hpp"

#include "legseq/error.hpp"

#include <array>
#include <string>

namespace legseq::ff {

namespace {

bool miller_rabin_round(std::uint64_t n, std::uint64_t d, int s, std::uint64_t a)
{
    a %= n;
    if (a == 0)
        return true;
    std::uint64_t x = 1, base = a, e = d;
    while (e) {
        if (e & 1)
            x = mulmod(x, base, n);
        base = mulmod(base, base, n);
        e >>= 1;
    }
    if (x == 1 || x == n - 1)
        return true;
    for (int r = 1; r < s; ++r) {
        x = mulmod(x, x, n);
        if (x == n - 1)
            return true;
    }
    return false;
}

} // namespace

bool is_prime_u64(std::uint64_t n) noexcept
{
    if (n < 2)
        return false;
    constexpr std::array<std::uint64_t, 12> witnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto q : witnesses) {
        if (n == q)
            return true;
        if (n % q == 0)
            return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (auto a : witnesses)
        if (!miller_rabin_round(n, d, s, a))
            return false;
    return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(p)
{
    if (p < 3 || (p & 1) == 0)
        throw Error("modulus must be an odd prime, got " + std::to_string(p));
    if (p >= (std::uint64_t{1} << 63))
        throw Error("modulus must be below 2^63");
    if (!is_prime_u64(p))
        throw Error("modulus is not prime: " + std::to_string(p));
}

residue PrimeModulus::reduce(std::int64_t a) const noexcept
{
    const auto sp = static_cast<std::int64_t>(p_);
    std::int64_t r = a % sp;
    if (r < 0)
        r += sp;
    return static_cast<residue>(r);
}

residue powmod(residue a, std::uint64_t e, const PrimeModulus& p) noexcept
{
    const auto m = p.value();
    residue result = 1 % m;
    residue base = a % m;
    while (e) {
        if (e & 1)
            result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return result;
}

residue invmod(residue a, const PrimeModulus& p)
{
    if (a % p.value() == 0)
        throw Error("zero has no inverse modulo p");
    return powmod(a, p.value() - 2, p);
}

int legendre_residue(residue a, const PrimeModulus& p) noexcept
{
    a %= p.value();
    if (a == 0)
        return 0;
    return powmod(a, (p.value() - 1) / 2, p) == 1 ? 1 : -1;
}

int legendre(std::int64_t a, const PrimeModulus& p) noexcept
{
    return legendre_residue(p.reduce(a), p);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; q <= n / q; q += (q == 2 ? 1 : 2)) {
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0)
                n /= q;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

bool is_primitive_root(residue g, const PrimeModulus& p)
{
    const auto order = p.value() - 1;
    g %= p.value();
    if (g == 0)
        return false;
    for (auto q : prime_factors(order))
        if (powmod(g, order / q, p) == 1)
            return false;
    return true;
}

} // namespace legseq::ff
