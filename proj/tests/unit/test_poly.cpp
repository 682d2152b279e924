#include "legseq/error.hpp"
#include "legseq/poly.hpp"
#include "legseq/rng.hpp"

#include <doctest.h>

using namespace legseq::ff;

namespace {

Poly P(std::uint64_t p, std::vector<std::int64_t> c)
{
    return Poly::from_integers(PrimeModulus(p), c);
}

Poly random_poly(const PrimeModulus& p, int degree, legseq::SplitMix64& rng)
{
    std::vector<residue> c(static_cast<std::size_t>(degree) + 1);
    for (auto& x : c)
        x = rng.below(p.value());
    c.back() = 1 + rng.below(p.value() - 1);
    return Poly(p, c);
}

} // namespace

TEST_CASE("normalisation and degree")
{
    CHECK(P(7, {1, 0, 0}).degree() == 0);
    CHECK(P(7, {7, 14}).is_zero());
    CHECK(P(7, {}).degree() == -1);
    CHECK(P(7, {-1, 0, 1}).coeffs() == std::vector<residue>{6, 0, 1});
}

TEST_CASE("eval")
{
    CHECK(P(7, {1, 0, 1}).eval(0) == 1);
    CHECK(P(7, {1, 0, 1}).eval(3) == 3);
    CHECK(P(7, {}).eval(5) == 0);
}

TEST_CASE("to_string")
{
    CHECK(P(7, {1, 3, 1}).to_string() == "x^2 + 3*x + 1");
    CHECK(P(7, {}).to_string() == "0");
    CHECK(P(7, {0, 1}).to_string() == "x");
}

TEST_CASE("taylor shift")
{
    CHECK(shift(P(5, {0, 0, 1}), 1) == P(5, {1, 2, 1}));
    CHECK(shift(P(7, {1, 3, 1}), 2) == P(7, {4, 0, 1}));
    const auto f = P(11, {3, 1, 4, 1, 5});
    CHECK(shift(f, 0) == f);

    legseq::SplitMix64 rng(5);
    const PrimeModulus p(31);
    for (int i = 0; i < 50; ++i) {
        const auto g = random_poly(p, 1 + static_cast<int>(rng.below(6)), rng);
        const residue t = rng.below(31);
        const auto s = shift(g, t);
        for (residue x = 0; x < 31; ++x)
            REQUIRE(s.eval(x) == g.eval((x + t) % 31));
        REQUIRE(shift(s, 31 - t) == g);
    }
}

TEST_CASE("gcd and mod")
{
    CHECK(gcd(P(7, {-1, 0, 1}), P(7, {-1, 1})) == P(7, {-1, 1}));
    CHECK(gcd(P(7, {1, 0, 1}), P(7, {1, 1})) == P(7, {1}));
    CHECK(mod(P(7, {0, 0, 0, 1}), P(7, {0, 0, 1})).is_zero());
    CHECK_THROWS_AS((void)divmod(P(7, {1, 1}), P(7, {})), legseq::Error);
}

TEST_CASE("division identity")
{
    legseq::SplitMix64 rng(9);
    const PrimeModulus p(101);
    for (int i = 0; i < 100; ++i) {
        const auto a = random_poly(p, static_cast<int>(rng.below(9)), rng);
        const auto b = random_poly(p, 1 + static_cast<int>(rng.below(4)), rng);
        const auto [q, r] = divmod(a, b);
        REQUIRE(add(mul(q, b), r) == a);
        REQUIRE(r.degree() < b.degree());
    }
}

TEST_CASE("gcd divides both")
{
    legseq::SplitMix64 rng(10);
    const PrimeModulus p(13);
    for (int i = 0; i < 100; ++i) {
        const auto c = random_poly(p, 1 + static_cast<int>(rng.below(2)), rng);
        const auto a = mul(c, random_poly(p, static_cast<int>(rng.below(3)), rng));
        const auto b = mul(c, random_poly(p, static_cast<int>(rng.below(3)), rng));
        const auto g = gcd(a, b);
        REQUIRE(g.leading() == 1);
        REQUIRE(mod(a, g).is_zero());
        REQUIRE(mod(b, g).is_zero());
        REQUIRE(mod(g, monic(c)).is_zero());
    }
}

TEST_CASE("derivative")
{
    CHECK(derivative(P(7, {1, 3, 1})) == P(7, {3, 2}));
    CHECK(derivative(P(7, {5})).is_zero());
    CHECK(derivative(Poly::monomial(PrimeModulus(7), 1, 7)).is_zero());
}

TEST_CASE("squarefree")
{
    CHECK(is_squarefree(P(3, {1, 0, 1})));
    CHECK_FALSE(is_squarefree(P(5, {0, 0, 1})));
    CHECK_FALSE(is_squarefree(mul(mul(P(7, {-1, 1}), P(7, {-1, 1})), P(7, {1, 1}))));
    CHECK(is_squarefree(P(13, {-2, 0, 1})));
    CHECK_THROWS_AS((void)is_squarefree(P(7, {3})), legseq::Error);
    CHECK_THROWS_AS((void)is_squarefree(Poly::monomial(PrimeModulus(7), 1, 7)), legseq::Error);
}
