#include <benchmark/benchmark.h>

#include "weylwalk/census.hpp"
#include "weylwalk/charpoly.hpp"
#include "weylwalk/factor.hpp"
#include "weylwalk/fp.hpp"
#include "weylwalk/frobenius.hpp"
#include "weylwalk/harness.hpp"
#include "weylwalk/walker.hpp"

using namespace weylwalk;

namespace {

IntMatrix walk_matrix(const GroupSpec& group, std::size_t steps) {
    const auto gens = default_generators(group);
    RngStream rng(1);
    IntMatrix m = IntMatrix::identity(group.dim());
    for (std::size_t i = 0; i < steps; ++i) m = m * gens[rng.below(gens.size())].matrix;
    return m;
}

void BM_CharpolyExact(benchmark::State& state) {
    const IntMatrix m =
        walk_matrix(GroupSpec{Family::A, static_cast<unsigned>(state.range(0))}, 40);
    for (auto _ : state) benchmark::DoNotOptimize(charpoly_exact(m));
}
BENCHMARK(BM_CharpolyExact)->Arg(2)->Arg(3)->Arg(4)->Arg(6);

void BM_CharpolyMod(benchmark::State& state) {
    const ModMatrix m =
        walk_matrix(GroupSpec{Family::A, static_cast<unsigned>(state.range(0))}, 40).reduce(1009);
    for (auto _ : state) benchmark::DoNotOptimize(charpoly_mod(m));
}
BENCHMARK(BM_CharpolyMod)->Arg(2)->Arg(3)->Arg(4)->Arg(6);

void BM_FactorQuartic(benchmark::State& state) {
    const std::uint64_t p = static_cast<std::uint64_t>(state.range(0));
    RngStream rng(7);
    std::vector<ModPoly> polys;
    for (int i = 0; i < 64; ++i) {
        std::vector<std::uint64_t> c(4);
        for (auto& v : c) v = rng.below(p);
        c.push_back(1);
        polys.emplace_back(p, std::move(c));
    }
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(factor_mod(polys[i % polys.size()], rng));
        ++i;
    }
}
BENCHMARK(BM_FactorQuartic)->Arg(101)->Arg(10007);

void BM_ThetaTypeA(benchmark::State& state) {
    RngStream rng(9);
    std::vector<ModPoly> polys;
    for (int i = 0; i < 64; ++i) {
        std::vector<std::uint64_t> c(3);
        for (auto& v : c) v = rng.below(1009);
        c.push_back(1);
        polys.emplace_back(1009, std::move(c));
    }
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(theta_type_a(polys[i % polys.size()]));
        ++i;
    }
}
BENCHMARK(BM_ThetaTypeA);

void BM_WalkStepModular(benchmark::State& state) {
    WalkConfig config;
    config.group = GroupSpec{Family::A, 3};
    config.mode = WalkMode::Modular;
    config.primes = primes_from(2, static_cast<std::size_t>(state.range(0)));
    config.master_seed = 5;
    config.validate_and_fill();
    WalkDriver driver(config, 0);
    for (auto _ : state) driver.step();
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_WalkStepModular)->Arg(20)->Arg(300);

void BM_EnumerateSL2(benchmark::State& state) {
    const std::uint64_t q = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        std::uint64_t count = 0;
        enumerate_sl2(q, [&](std::uint64_t, const ModMatrix&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
    state.SetItemsProcessed(state.iterations() * q * (q * q - 1));
}
BENCHMARK(BM_EnumerateSL2)->Arg(11)->Arg(101);

void BM_CensusSL2(benchmark::State& state) {
    const std::uint64_t q = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            run_census(GroupSpec{Family::A, 2}, q, CensusMode::enumerate(), 1));
    }
    state.SetItemsProcessed(state.iterations() * q * (q * q - 1));
}
BENCHMARK(BM_CensusSL2)->Arg(11)->Arg(47);

void BM_GaloisCertifyModular(benchmark::State& state) {
    WalkConfig config;
    config.group = GroupSpec{Family::A, 3};
    config.mode = WalkMode::Modular;
    config.primes = primes_from(2, 50);
    config.master_seed = 6;
    config.length = 60;
    config.validate_and_fill();
    const WalkState walk = run_walk(config, 0);
    RngStream rng(8);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            galois_certify_modular(walk.modular, config.primes, config.group, 50, rng));
    }
}
BENCHMARK(BM_GaloisCertifyModular);

} // namespace

BENCHMARK_MAIN();
