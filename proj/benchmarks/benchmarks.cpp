#include <benchmark/benchmark.h>

#include "infomarket/complement.hpp"
#include "infomarket/examples.hpp"
#include "infomarket/mechanism.hpp"
#include "infomarket/value.hpp"

using namespace infomarket;

static void BM_JoinResidentialCivil(benchmark::State& state) {
    const ScenarioFile& sc = builtin_example("monopolist");
    const Signal& a = sc.signal("residential");
    const Signal& b = sc.signal("civil-status");
    for (auto _ : state) benchmark::DoNotOptimize(join(a, b));
}
BENCHMARK(BM_JoinResidentialCivil);

static void BM_ExAntePayoff(benchmark::State& state) {
    const ScenarioFile& sc = builtin_example("monopolist");
    const Signal& sig = sc.signal("residential");
    for (auto _ : state) benchmark::DoNotOptimize(exante_payoff(sig, sc.problem));
}
BENCHMARK(BM_ExAntePayoff);

static void BM_ComplementBinary(benchmark::State& state) {
    const ScenarioFile& sc = builtin_example("monopolist");
    const Signal& sig = sc.signal("residential");
    for (auto _ : state) benchmark::DoNotOptimize(complement_binary(sig, sc.problem));
}
BENCHMARK(BM_ComplementBinary);

static void BM_OracleTriangular(benchmark::State& state) {
    const ScenarioFile& sc = builtin_example("triangular");
    const Signal& sig = sc.signal("partial");
    BruteForceOptions options{2, state.range(0), 64};
    for (auto _ : state)
        benchmark::DoNotOptimize(complement_bruteforce(sig, sc.problem, options));
}
BENCHMARK(BM_OracleTriangular)->Arg(6)->Arg(12)->Arg(18);

static void BM_VerifyPartitionMenu(benchmark::State& state) {
    const ScenarioFile& sc = builtin_example("clinical");
    std::vector<Signal> partitions = enumerate_partitions(sc.problem);
    TypeSpace space;
    for (const Signal& part : partitions)
        space.types.push_back({part.name, part, Rational(1, 5)});
    Menu menu = build_menu_diagonal(space, sc.problem);
    for (auto _ : state) benchmark::DoNotOptimize(verify_menu(menu, space, sc.problem));
}
BENCHMARK(BM_VerifyPartitionMenu);

static void BM_ParseScenario(benchmark::State& state) {
    const std::string& text = builtin_example_text("monopolist");
    for (auto _ : state) benchmark::DoNotOptimize(parse_scenario(text));
}
BENCHMARK(BM_ParseScenario);

BENCHMARK_MAIN();
