#include <permlab/constructions.hpp>
#include <permlab/pp_test.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace permlab;

static void BM_FieldMul(benchmark::State& state)
{
    const auto ctx = FieldCtx::plain(static_cast<int>(state.range(0)));
    std::mt19937_64 rng(1);
    FieldElem a{static_cast<std::uint32_t>(rng() % ctx.size())};
    const FieldElem b{static_cast<std::uint32_t>(rng() % ctx.size()) | 1U};
    for (auto _ : state) {
        a = ctx.mul(a, b);
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_FieldMul)->Arg(6)->Arg(12)->Arg(18)->Arg(24);

static void BM_BuildGTable(benchmark::State& state)
{
    const auto ctx = share(FieldCtx::tower(2, static_cast<int>(state.range(0))));
    for (auto _ : state) {
        auto g = build_g_thm1(ctx);
        benchmark::DoNotOptimize(g.table().data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ctx->size()));
}
BENCHMARK(BM_BuildGTable)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_CharSum(benchmark::State& state)
{
    const auto ctx = share(FieldCtx::tower(2, static_cast<int>(state.range(0))));
    const auto g = build_g_thm1(ctx);
    std::uint32_t a = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(char_sum(g, FieldElem{a}));
        a = a % (static_cast<std::uint32_t>(ctx->size()) - 1) + 1;
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ctx->size()));
}
BENCHMARK(BM_CharSum)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

static void BM_CharSumsAll(benchmark::State& state)
{
    const auto g = build_g_thm1(share(FieldCtx::tower(2, 2)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(char_sums_all(g).data());
    }
}
BENCHMARK(BM_CharSumsAll)->Unit(benchmark::kMillisecond);

static void BM_Exhaustive(benchmark::State& state)
{
    const auto g = build_g_thm1(share(FieldCtx::tower(2, static_cast<int>(state.range(0)))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_permutation_exhaustive(g).verdict);
    }
}
BENCHMARK(BM_Exhaustive)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
