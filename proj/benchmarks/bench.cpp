#include <benchmark/benchmark.h>

#include "drig/regex.hpp"
#include "drig/species.hpp"
#include "drig/poly.hpp"
#include "drig/instances.hpp"

namespace {

using namespace drig;

void BM_RegexDerivWord(benchmark::State& state) {
    auto r = lang::parse_regex("(ab|b)*a(a|b)*");
    std::string w = "abbaabbaabab";
    for (auto _ : state)
        benchmark::DoNotOptimize(lang::deriv_word(r, w));
}
BENCHMARK(BM_RegexDerivWord);

void BM_BuildDfa(benchmark::State& state) {
    auto r = lang::parse_regex("(ab|b)*a(a|b)*b(ab)*");
    for (auto _ : state)
        benchmark::DoNotOptimize(lang::build_dfa(r));
}
BENCHMARK(BM_BuildDfa);

void BM_Enumerate(benchmark::State& state) {
    auto r = lang::parse_regex("(ab|b)*a(a|b)*");
    for (auto _ : state)
        benchmark::DoNotOptimize(lang::enumerate(r, 8));
}
BENCHMARK(BM_Enumerate);

void BM_SpeciesSeq(benchmark::State& state) {
    auto f = species::parse_species("(E o (X*X))' * E + X'");
    for (auto _ : state)
        benchmark::DoNotOptimize(species::seq_of(f, 12));
}
BENCHMARK(BM_SpeciesSeq);

void BM_SpeciesOracle(benchmark::State& state) {
    auto f = species::parse_species("E o (X*X)");
    for (auto _ : state)
        benchmark::DoNotOptimize(species::count_structures(f, 7));
}
BENCHMARK(BM_SpeciesOracle);

void BM_PolyMul(benchmark::State& state) {
    auto base = make_nat_rig();
    std::vector<Value> cs;
    for (std::uint64_t i = 0; i < 16; ++i) cs.emplace_back(i + 1);
    auto p = poly::make_poly(base, cs);
    for (auto _ : state)
        benchmark::DoNotOptimize(poly::poly_mul(p, p));
}
BENCHMARK(BM_PolyMul);

}  // namespace

BENCHMARK_MAIN();
