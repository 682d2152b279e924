#include "legseq/error.hpp"
#include "legseq/measures.hpp"
#include "legseq/rng.hpp"

#include <doctest.h>

#include <algorithm>
#include <omp.h>

using namespace legseq;
using namespace legseq::measures;

namespace {

BinarySequence random_sequence(SplitMix64& rng, std::size_t n)
{
    std::vector<std::int8_t> v(n);
    for (auto& x : v)
        x = rng.below(2) ? 1 : -1;
    return BinarySequence(v);
}

// Independent brute force: every ell-tuple of (member, shift) with the
// first shift free, windows of every length.
std::int64_t brute_phi(const std::vector<BinarySequence>& fam, int order)
{
    const auto n = static_cast<std::int64_t>(fam.front().size());
    std::int64_t best = 0;
    std::vector<std::size_t> mem(static_cast<std::size_t>(order), 0);
    std::vector<std::int64_t> d(static_cast<std::size_t>(order), 0);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == order) {
            for (int a = 0; a < order; ++a)
                for (int b = a + 1; b < order; ++b)
                    if (fam[mem[a]] == fam[mem[b]] && d[a] == d[b])
                        return;
            const auto top = *std::max_element(d.begin(), d.end());
            std::int64_t s = 0;
            for (std::int64_t m = 1; m + top <= n; ++m) {
                int prod = 1;
                for (int a = 0; a < order; ++a)
                    prod *= fam[mem[a]].at(static_cast<std::size_t>(m + d[a]));
                s += prod;
                best = std::max(best, std::abs(s));
            }
            return;
        }
        for (std::size_t k = 0; k < fam.size(); ++k)
            for (std::int64_t dd = 0; dd < n; ++dd) {
                mem[i] = k;
                d[i] = dd;
                self(self, i + 1);
            }
    };
    rec(rec, 0);
    return best;
}

} // namespace

TEST_CASE("well-distribution small cases")
{
    const auto r = well_distribution(sequence_from_body("++++"));
    CHECK(r.value == 4);
    CHECK(std::get<WellDistributionWitness>(r.witness) == WellDistributionWitness{0, 1, 4});
    CHECK(well_distribution(sequence_from_body("+-+-")).value == 2);
    CHECK(oracle_well_distribution(sequence_from_body("+-+-")).value == 2);
    CHECK(well_distribution(sequence_from_body("-")).value == 1);
}

TEST_CASE("correlation small cases")
{
    const auto r = correlation(sequence_from_body("+++++"), 2);
    CHECK(r.value == 4);
    CHECK(std::get<CorrelationWitness>(r.witness) == CorrelationWitness{{0, 1}, 4});
    CHECK(correlation(sequence_from_body("+-+-+"), 2).value == 4);
    CHECK_THROWS_AS((void)correlation(sequence_from_body("+-+"), 1), Error);
    CHECK_THROWS_AS((void)correlation(sequence_from_body("+-+"), 3), Error);
}

TEST_CASE("witnesses reproduce values")
{
    SplitMix64 rng(21);
    for (int i = 0; i < 50; ++i) {
        const auto e = random_sequence(rng, 5 + rng.below(80));
        const auto w = well_distribution(e);
        CHECK(std::abs(evaluate_witness(e, std::get<WellDistributionWitness>(w.witness))) == w.value);
        for (int l : {2, 3}) {
            const auto c = correlation(e, l);
            CHECK(std::abs(evaluate_witness(e, std::get<CorrelationWitness>(c.witness))) == c.value);
        }
    }
}

TEST_CASE("invalid witnesses are rejected")
{
    const auto e = sequence_from_body("+-+-+");
    CHECK_THROWS_AS((void)evaluate_witness(e, WellDistributionWitness{0, 2, 3}), Error);
    CHECK_THROWS_AS((void)evaluate_witness(e, CorrelationWitness{{1, 1}, 2}), Error);
    CHECK_THROWS_AS((void)evaluate_witness(e, CorrelationWitness{{0, 1}, 5}), Error);
}

TEST_CASE("engines agree with the oracles")
{
    SplitMix64 rng(2024);
    for (int i = 0; i < 120; ++i) {
        const auto e = random_sequence(rng, 3 + rng.below(40));
        const auto w = well_distribution(e);
        const auto ws = serial::well_distribution(e);
        const auto wo = oracle_well_distribution(e);
        REQUIRE(w.value == wo.value);
        REQUIRE(ws.value == wo.value);
        REQUIRE(w.witness == ws.witness);
        REQUIRE(w.witness == wo.witness);
        for (int l = 2; l <= std::min<int>(3, static_cast<int>(e.size()) - 1); ++l) {
            const auto c = correlation(e, l);
            const auto cs = serial::correlation(e, l);
            const auto co = oracle_correlation(e, l);
            REQUIRE(c.value == co.value);
            REQUIRE(cs.value == co.value);
            REQUIRE(c.witness == cs.witness);
            REQUIRE(c.witness == co.witness);
        }
    }
}

TEST_CASE("oracle length guard")
{
    SplitMix64 rng(1);
    CHECK_THROWS_AS((void)oracle_well_distribution(random_sequence(rng, oracle_max_length + 1)), Error);
}

TEST_CASE("results independent of thread count")
{
    SplitMix64 rng(77);
    const auto e = random_sequence(rng, 300);
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    const auto w1 = well_distribution(e);
    const auto c1 = correlation(e, 2);
    omp_set_num_threads(4);
    const auto w4 = well_distribution(e);
    const auto c4 = correlation(e, 2);
    omp_set_num_threads(saved);
    CHECK(w1.value == w4.value);
    CHECK(w1.witness == w4.witness);
    CHECK(c1.value == c4.value);
    CHECK(c1.witness == c4.witness);
}

TEST_CASE("budget")
{
    CHECK(correlation_work(10, 2) == 90);
    SplitMix64 rng(3);
    const auto e = random_sequence(rng, 200);
    CHECK_THROWS_AS((void)correlation(e, 4, 1000), BudgetExceeded);
    CHECK(correlation_work(100000, 40) == ~std::uint64_t{0});
}

TEST_CASE("sampled correlation")
{
    SplitMix64 rng(8);
    const auto e = random_sequence(rng, 30);
    const auto exact = correlation(e, 3);
    const auto full = correlation_sampled(e, 3, 100000, 5);
    CHECK(full.value == exact.value);
    CHECK(full.method.kind == MethodKind::sampled);

    const auto a = correlation_sampled(e, 3, 40, 1);
    const auto b = correlation_sampled(e, 3, 40, 1);
    CHECK(a.value == b.value);
    CHECK(a.witness == b.witness);
    CHECK(a.value <= exact.value);
    CHECK(std::abs(evaluate_witness(e, std::get<CorrelationWitness>(a.witness))) == a.value);

    const auto big = random_sequence(rng, 500);
    const auto s = correlation_sampled(big, 3, 200, 9);
    CHECK(s.value <= correlation(big, 3).value);
}

TEST_CASE("cross-correlation")
{
    const std::vector<BinarySequence> fam{sequence_from_body("++++"), sequence_from_body("----")};
    const auto r = cross_correlation(fam, 2);
    CHECK(r.value == 4);
    const auto& w = std::get<CrossCorrelationWitness>(r.witness);
    CHECK(w.members == std::vector<std::size_t>{0, 1});
    CHECK(w.d == std::vector<std::int64_t>{0, 0});
    CHECK(w.m == 4);
    CHECK(std::abs(evaluate_witness(fam, w)) == 4);
}

TEST_CASE("cross-correlation of a single sequence is the correlation measure")
{
    SplitMix64 rng(31);
    for (int i = 0; i < 30; ++i) {
        const std::vector<BinarySequence> fam{random_sequence(rng, 4 + rng.below(20))};
        CHECK(cross_correlation(fam, 2).value == correlation(fam.front(), 2).value);
    }
}

TEST_CASE("cross-correlation order 1 is the largest window sum")
{
    const std::vector<BinarySequence> fam{sequence_from_body("--+++-")};
    CHECK(cross_correlation(fam, 1).value == 3);
}

TEST_CASE("cross-correlation against brute force")
{
    SplitMix64 rng(404);
    for (int i = 0; i < 15; ++i) {
        std::vector<BinarySequence> fam;
        const auto n = 4 + rng.below(9);
        for (int k = 0; k < 3; ++k)
            fam.push_back(random_sequence(rng, n));
        if (i % 5 == 0)
            fam[2] = fam[0];
        for (int l : {1, 2, 3}) {
            const auto r = cross_correlation(fam, l);
            REQUIRE(r.value == brute_phi(fam, l));
            REQUIRE(std::abs(evaluate_witness(fam, std::get<CrossCorrelationWitness>(r.witness))) == r.value);
        }
    }
}

TEST_CASE("sampled cross-correlation")
{
    SplitMix64 rng(12);
    std::vector<BinarySequence> fam;
    for (int k = 0; k < 3; ++k)
        fam.push_back(random_sequence(rng, 40));
    const auto exact = cross_correlation(fam, 2);
    const auto a = cross_correlation_sampled(fam, 2, 50, 3);
    const auto b = cross_correlation_sampled(fam, 2, 50, 3);
    CHECK(a.value == b.value);
    CHECK(a.value <= exact.value);
}

TEST_CASE("method names")
{
    CHECK(method_name(MethodKind::exact) == "exact");
    CHECK(method_name(MethodKind::sampled) == "sampled");
    CHECK(method_name(MethodKind::oracle) == "oracle");
}
