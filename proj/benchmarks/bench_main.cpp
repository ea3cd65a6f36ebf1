#include "hfl/hecke.hpp"
#include "hfl/local_higgs.hpp"
#include "hfl/oracle.hpp"
#include "hfl/strata.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_germ_inverse(benchmark::State& state) {
    hfl::Rng rng(7);
    hfl::Germ u = rng.germ_with_order(0, state.range(0));
    for (auto _ : state) {
        auto inv = u.inverse();
        benchmark::DoNotOptimize(inv);
    }
}
BENCHMARK(BM_germ_inverse)->Arg(8)->Arg(16)->Arg(32);

void BM_hecke_field(benchmark::State& state) {
    long d = state.range(0);
    hfl::Rng rng(11);
    auto [a, b] = hfl::random_hecke_pair(rng, d, 0, 4 * d + 4);
    for (auto _ : state) {
        auto m = hfl::hecke_higgs(d, a, b);
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(BM_hecke_field)->Arg(3)->Arg(5)->Arg(9);

void BM_normal_form(benchmark::State& state) {
    long lambda = state.range(0);
    long t = 2 * lambda + 4;
    hfl::Rng rng(13);
    hfl::GermMatrix2 companion(hfl::Germ::zero(t), hfl::Germ::monomial(hfl::Rat(1), 0, t),
                               hfl::Germ::monomial(hfl::Rat(1), 2 * lambda, t),
                               hfl::Germ::zero(t));
    hfl::GermMatrix2 m = hfl::conjugate(companion, hfl::random_sl2(rng, t));
    for (auto _ : state) {
        auto nf = hfl::normal_form({m, lambda});
        benchmark::DoNotOptimize(nf);
    }
}
BENCHMARK(BM_normal_form)->Arg(2)->Arg(4)->Arg(6);

void BM_chart_image(benchmark::State& state) {
    long d = state.range(0);
    hfl::Rng rng(17);
    hfl::ChartId chart = hfl::ChartId::N(1, 0);
    hfl::HeckeParam p = hfl::sample_chart_member(rng, d, chart);
    for (auto _ : state) {
        auto y = hfl::chart_image(chart, p);
        benchmark::DoNotOptimize(y);
    }
}
BENCHMARK(BM_chart_image)->Arg(5)->Arg(7)->Arg(9);

void BM_enumerate_strata(benchmark::State& state) {
    long g = state.range(0);
    std::vector<long> mults(static_cast<size_t>(2 * g - 2), 2);
    hfl::QDProfile p{g, mults, true};
    for (auto _ : state) {
        auto s = hfl::enumerate_strata(p);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_enumerate_strata)->Arg(3)->Arg(5);

} // namespace

BENCHMARK_MAIN();
