#include "psdo/dressing.hpp"
#include "psdo/sato.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace psdo;

namespace {

XSeries dense_series(int prec, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-9, 9);
    XSeries r(prec);
    for (int i = 0; i < prec; ++i)
        for (int j = 0; i + j < prec; ++j) r.add_term(i, j, Rat(num(rng), 2));
    return r;
}

EPlusOp sample_op(int prec, int depth, unsigned seed) {
    std::mt19937_64 rng(seed);
    EPlusOp r = EPlusOp::one(prec);
    for (int s = 1; s <= depth; ++s) {
        D1Op c(prec);
        c.set_coeff(0, dense_series(prec, seed + s));
        c.set_coeff(1, dense_series(prec, seed + 7 * s));
        r.set_slot(-s, c);
    }
    return r;
}

} // namespace

static void BM_xseries_mul(benchmark::State& state) {
    int prec = static_cast<int>(state.range(0));
    XSeries a = dense_series(prec, 1), b = dense_series(prec, 2);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_xseries_mul)->Arg(8)->Arg(12)->Arg(16);

static void BM_d1_mul(benchmark::State& state) {
    int prec = static_cast<int>(state.range(0));
    D1Op a(prec), b(prec);
    for (int q = 0; q <= 3; ++q) {
        a.set_coeff(q, dense_series(prec, 10 + q));
        b.set_coeff(q, dense_series(prec, 20 + q));
    }
    for (auto _ : state) benchmark::DoNotOptimize(d1_mul(a, b));
}
BENCHMARK(BM_d1_mul)->Arg(6)->Arg(10);

static void BM_eplus_mul(benchmark::State& state) {
    int prec = static_cast<int>(state.range(0));
    EPlusOp a = sample_op(prec, 4, 3), b = sample_op(prec, 4, 4);
    for (auto _ : state) benchmark::DoNotOptimize(eplus_mul(a, b));
}
BENCHMARK(BM_eplus_mul)->Arg(6)->Arg(8);

static void BM_reconstruct(benchmark::State& state) {
    int prec = static_cast<int>(state.range(0));
    std::mt19937_64 rng(5);
    EPlusOp s = EPlusOp::one(prec);
    D1Op c(prec);
    c.set_coeff(0, dense_series(prec, 42));
    s.set_slot(-1, c);
    SubspaceW w = w_from_s(s, 1, prec - 3);
    for (auto _ : state) benchmark::DoNotOptimize(reconstruct_s(w));
}
BENCHMARK(BM_reconstruct)->Arg(5)->Arg(7);

BENCHMARK_MAIN();
