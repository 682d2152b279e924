#pragma once

#include <cstdint>
#include <vector>

namespace legseq::ff {

using residue = std::uint64_t;

/// An odd prime p < 2^63. Construction verifies primality with a
/// deterministic Miller-Rabin witness set valid for all 64-bit inputs.
class PrimeModulus {
public:
    explicit PrimeModulus(std::uint64_t p);

    [[nodiscard]] std::uint64_t value() const noexcept { return p_; }
    [[nodiscard]] residue reduce(std::int64_t a) const noexcept;
    [[nodiscard]] residue reduce_unsigned(std::uint64_t a) const noexcept { return a % p_; }

    friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

private:
    std::uint64_t p_;
};

[[nodiscard]] bool is_prime_u64(std::uint64_t n) noexcept;

[[nodiscard]] inline residue mulmod(residue a, residue b, std::uint64_t p) noexcept
{
    return static_cast<residue>(static_cast<unsigned __int128>(a) * b % p);
}
[[nodiscard]] inline residue addmod(residue a, residue b, std::uint64_t p) noexcept
{
    residue s = a + b; // a, b < p < 2^63, no wraparound
    return s >= p ? s - p : s;
}
[[nodiscard]] inline residue submod(residue a, residue b, std::uint64_t p) noexcept
{
    return a >= b ? a - b : a + (p - b);
}

[[nodiscard]] residue powmod(residue a, std::uint64_t e, const PrimeModulus& p) noexcept;
[[nodiscard]] residue invmod(residue a, const PrimeModulus& p);

/// Legendre symbol (a/p) via Euler's criterion; returns -1, 0 or +1.
[[nodiscard]] int legendre(std::int64_t a, const PrimeModulus& p) noexcept;
[[nodiscard]] int legendre_residue(residue a, const PrimeModulus& p) noexcept;

/// Distinct prime factors of n by trial division, ascending.
[[nodiscard]] std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// True iff g has multiplicative order p-1 modulo p. Requires 1 <= g < p.
[[nodiscard]] bool is_primitive_root(residue g, const PrimeModulus& p);

} // namespace legseq::ff
