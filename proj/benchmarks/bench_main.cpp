#include <benchmark/benchmark.h>

#include "qcartan/coideal.hpp"

using namespace qc;

namespace {

Element f_word(const Uq& uq, const Word& w) {
    Element x = uq.one();
    for (char l : w) x = uq.multiply(x, uq.F(l));
    return x;
}

Element e_word(const Uq& uq, const Word& w) {
    Element x = uq.one();
    for (char l : w) x = uq.multiply(x, uq.E(l));
    return x;
}

// E-word times F-word in A_n, rewritten into F K E order. A fresh Uq per
// iteration so the exchange cache starts empty.
void BM_NormalForm(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Word w;
    for (int i = 0; i < n; ++i) w += static_cast<char>(i);
    for (auto _ : state) {
        Uq uq(RootData('A', n));
        benchmark::DoNotOptimize(uq.multiply(e_word(uq, w), f_word(uq, w)));
    }
}
BENCHMARK(BM_NormalForm)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_WeightBasis(benchmark::State& state) {
    const int h = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Uq uq(RootData('B', 3));
        std::size_t total = 0;
        for (const auto& beta : uq.roots().positive_cone(h)) total += uq.basis(beta).size();
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_WeightBasis)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_Lusztig(benchmark::State& state) {
    for (auto _ : state) {
        Uq uq(RootData('C', 3));
        Element x = uq.E(2);
        for (int i : uq.roots().longest_word({0, 1, 2})) x = uq.lusztig_T(i, 1, x);
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_Lusztig)->Unit(benchmark::kMillisecond);

void BM_HPrime(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Involution inv = build_involution("AIII", n, (n + 1) / 2);
    for (auto _ : state) {
        Uq uq(inv.rd);
        Coideal co(uq, default_params(inv));
        for (int j = 0; j < (n + 1) / 2; ++j) benchmark::DoNotOptimize(co.h_prime(j));
    }
}
BENCHMARK(BM_HPrime)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_Membership(benchmark::State& state) {
    Involution inv = build_involution("AIII", 4, 2);
    Uq uq(inv.rd);
    Coideal co(uq, default_params(inv));
    Element x = co.B_word({0, 1, 2, 3});
    for (auto _ : state) benchmark::DoNotOptimize(co.member(x));
}
BENCHMARK(BM_Membership)->Unit(benchmark::kMillisecond);

void BM_CartanSuite(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Involution inv = build_involution("AIII", n, (n + 1) / 2);
    ThetaSystem ts = gamma_theta("AIII", n, (n + 1) / 2);
    for (auto _ : state) {
        Uq uq(inv.rd);
        Coideal co(uq, default_params(inv));
        benchmark::DoNotOptimize(verify_cartan_suite(co, ts).report.ok());
    }
}
BENCHMARK(BM_CartanSuite)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_ThetaSystems(benchmark::State& state) {
    auto keys = pair_catalog(8);
    for (auto _ : state) {
        int ok = 0;
        for (const auto& k : keys) ok += verify_theta_system(gamma_theta(k.label, k.n, k.r)).ok();
        benchmark::DoNotOptimize(ok);
    }
}
BENCHMARK(BM_ThetaSystems)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
