// Serial reference vs OpenMP engines on Legendre sequences of table size.

#include "legseq/constructions.hpp"
#include "legseq/measures.hpp"
#include "legseq/poly_parse.hpp"

#include <benchmark/benchmark.h>

namespace {

legseq::BinarySequence sequence(std::int64_t p)
{
    const legseq::ff::PrimeModulus m(static_cast<std::uint64_t>(p));
    return legseq::construct_triple(legseq::PolyTriple(legseq::ff::parse_poly("x^2+1", m),
                                                       legseq::ff::parse_poly("x^2+3x+1", m),
                                                       legseq::ff::parse_poly("x^3-1", m)));
}

void W_serial(benchmark::State& state)
{
    const auto e = sequence(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(legseq::measures::serial::well_distribution(e).value);
}

void W_parallel(benchmark::State& state)
{
    const auto e = sequence(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(legseq::measures::well_distribution(e).value);
}

void C2_serial(benchmark::State& state)
{
    const auto e = sequence(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(legseq::measures::serial::correlation(e, 2).value);
}

void C2_parallel(benchmark::State& state)
{
    const auto e = sequence(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(legseq::measures::correlation(e, 2).value);
}

void C3_serial(benchmark::State& state)
{
    const auto e = sequence(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(legseq::measures::serial::correlation(e, 3).value);
}

void C3_parallel(benchmark::State& state)
{
    const auto e = sequence(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(legseq::measures::correlation(e, 3).value);
}

} // namespace

BENCHMARK(W_serial)->Arg(2003)->Arg(6007)->Unit(benchmark::kMillisecond);
BENCHMARK(W_parallel)->Arg(2003)->Arg(6007)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(C2_serial)->Arg(2003)->Arg(6007)->Unit(benchmark::kMillisecond);
BENCHMARK(C2_parallel)->Arg(2003)->Arg(6007)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(C3_serial)->Arg(211)->Arg(503)->Unit(benchmark::kMillisecond);
BENCHMARK(C3_parallel)->Arg(211)->Arg(503)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
