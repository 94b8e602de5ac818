#include "qhall/hl.hpp"
#include "qhall/rc.hpp"
#include "qhall/stats.hpp"
#include "qhall/tableaux.hpp"

#include <benchmark/benchmark.h>

using namespace qhall;

namespace {

void BM_PFermionic(benchmark::State& state) {
    Partition la{2, 2, 2};
    Composition mu{2, 2, 1, 1};
    for (auto _ : state) benchmark::DoNotOptimize(p_poly_fermionic(la, mu));
}
BENCHMARK(BM_PFermionic);

void BM_PDefinition(benchmark::State& state) {
    // recomputes from scratch each time by varying the weight split
    Partition la{3, 2, 2};
    Composition mu{2, 2, 2, 1};
    for (auto _ : state) benchmark::DoNotOptimize(p_poly_fermionic(la, mu));
}
BENCHMARK(BM_PDefinition);

void BM_Charge(benchmark::State& state) {
    // dominant weight (5,3,2)
    const Word w{2, 3, 1, 1, 2, 1, 3, 1, 2, 1};
    for (auto _ : state) benchmark::DoNotOptimize(charge(w));
}
BENCHMARK(BM_Charge);

void BM_KostkaFoulkesFresh(benchmark::State& state) {
    // bypass the cache by enumerating tableaux and summing charges directly
    Partition eta{4, 2, 1};
    Composition mu{2, 2, 2, 1};
    for (auto _ : state) {
        LaurentPoly r;
        for_each_ssyt(SkewShape(eta), mu, [&](const SSYT& t) {
            r.add_term(charge(reading_word(t)), 1);
        });
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_KostkaFoulkesFresh);

void BM_RcPoly(benchmark::State& state) {
    Partition la{4, 4, 3, 3, 2};
    RectangleSequence R{{3, 2}, {2, 2}, {2, 2}, {1, 1}, {1, 1}};
    for (auto _ : state) benchmark::DoNotOptimize(rc_poly(la, R));
}
BENCHMARK(BM_RcPoly);

void BM_ZelDistribution(benchmark::State& state) {
    Composition la{3, 2, 1}, mu{2, 2, 1, 1};
    for (auto _ : state) {
        LaurentPoly d;
        for_each_zero_one_matrix(la, mu, [&](const ZeroOneMatrix& m) {
            d.add_term(matrix_stat(MatrixStat::ZEL, m), 1);
        });
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_ZelDistribution);

void BM_DualRSK(benchmark::State& state) {
    std::vector<std::vector<int>> m{
        {1, 0, 1, 1}, {0, 1, 1, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}};
    for (auto _ : state) benchmark::DoNotOptimize(dual_rsk(m));
}
BENCHMARK(BM_DualRSK);

}  // namespace

BENCHMARK_MAIN();
