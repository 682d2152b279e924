#include "legseq/error.hpp"
#include "legseq/ff.hpp"

#include <doctest.h>

using namespace legseq::ff;

TEST_CASE("prime modulus validation")
{
    CHECK_NOTHROW(PrimeModulus(3));
    CHECK_NOTHROW(PrimeModulus(6007));
    CHECK_THROWS_AS(PrimeModulus(2), legseq::Error);
    CHECK_THROWS_AS(PrimeModulus(1), legseq::Error);
    CHECK_THROWS_AS(PrimeModulus(9), legseq::Error);
    CHECK_THROWS_AS(PrimeModulus(2047), legseq::Error); // strong pseudoprime to base 2
}

TEST_CASE("reduce handles negatives")
{
    const PrimeModulus p(7);
    CHECK(p.reduce(-1) == 6);
    CHECK(p.reduce(-14) == 0);
    CHECK(p.reduce(15) == 1);
}

TEST_CASE("miller-rabin against trial division")
{
    auto slow = [](std::uint64_t n) {
        if (n < 2)
            return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0)
                return false;
        return true;
    };
    for (std::uint64_t n = 0; n < 20000; ++n)
        REQUIRE(is_prime_u64(n) == slow(n));
    CHECK(is_prime_u64(18446744073709551557ull));
    CHECK_FALSE(is_prime_u64(3215031751ull));
}

TEST_CASE("powmod")
{
    const PrimeModulus p(7);
    CHECK(powmod(2, 0, p) == 1);
    CHECK(powmod(2, 3, p) == 1);
    CHECK(powmod(3, 3, p) == 6);
    CHECK(powmod(0, 5, p) == 0);
}

TEST_CASE("invmod")
{
    const PrimeModulus p(101);
    for (residue a = 1; a < 101; ++a)
        CHECK(mulmod(a, invmod(a, p), 101) == 1);
    CHECK_THROWS_AS((void)invmod(0, p), legseq::Error);
}

TEST_CASE("legendre symbol")
{
    const PrimeModulus p(7);
    CHECK(legendre(1, p) == 1);
    CHECK(legendre(14, p) == 0);
    CHECK(legendre(3, p) == -1);
    CHECK(legendre(-1, p) == -1);
    CHECK(legendre(2, p) == 1);

    // squares mod 13 are exactly the residues with symbol +1
    const PrimeModulus q(13);
    std::vector<int> sq(13, -1);
    sq[0] = 0;
    for (residue x = 1; x < 13; ++x)
        sq[x * x % 13] = 1;
    for (residue a = 0; a < 13; ++a)
        CHECK(legendre_residue(a, q) == sq[a]);
}

TEST_CASE("legendre is multiplicative")
{
    const PrimeModulus p(1009);
    for (std::int64_t a = 1; a < 60; ++a)
        for (std::int64_t b = 1; b < 60; ++b)
            REQUIRE(legendre(a * b, p) == legendre(a, p) * legendre(b, p));
}

TEST_CASE("prime factors")
{
    CHECK(prime_factors(12) == std::vector<std::uint64_t>{2, 3});
    CHECK(prime_factors(2002) == std::vector<std::uint64_t>{2, 7, 11, 13});
    CHECK(prime_factors(1).empty());
    CHECK(prime_factors(6007) == std::vector<std::uint64_t>{6007});
}

TEST_CASE("primitive roots")
{
    CHECK(is_primitive_root(2, PrimeModulus(3)));
    CHECK(is_primitive_root(2, PrimeModulus(5)));
    CHECK_FALSE(is_primitive_root(2, PrimeModulus(7)));
    CHECK(is_primitive_root(3, PrimeModulus(7)));
    CHECK_FALSE(is_primitive_root(0, PrimeModulus(7)));

    // count equals phi(p-1)
    const PrimeModulus p(101);
    int count = 0;
    for (residue g = 1; g < 101; ++g)
        count += is_primitive_root(g, p);
    CHECK(count == 40);
}
