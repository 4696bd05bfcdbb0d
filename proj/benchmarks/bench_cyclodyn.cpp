#include <benchmark/benchmark.h>

#include "cyclodyn/cyclodyn.hpp"

using namespace cyclodyn;

namespace {

CycloNum z(unsigned n, long k = 1) { return CycloNum::zeta(n, k); }
CPoly P(std::initializer_list<CycloNum> c) { return CPoly(std::vector<CycloNum>(c)); }

void BM_CycloMul(benchmark::State& st) {
    const unsigned n = static_cast<unsigned>(st.range(0));
    const CycloNum a = CycloNum(3L) + z(n) - CycloNum(Rational(1, 2)) * z(n, 2);
    const CycloNum b = z(n, 3) + CycloNum(2L);
    for (auto _ : st) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycloMul)->Arg(5)->Arg(12)->Arg(30)->Arg(60);

void BM_CrossConductorAdd(benchmark::State& st) {
    const CycloNum a = z(5) + CycloNum(1L), b = z(8, 3);
    for (auto _ : st) benchmark::DoNotOptimize(a + b);
}
BENCHMARK(BM_CrossConductorAdd);

void BM_House(benchmark::State& st) {
    const CycloNum a = CycloNum(1L) + z(5) + z(7, 2);
    for (auto _ : st) benchmark::DoNotOptimize(house(a, static_cast<unsigned>(st.range(0))));
}
BENCHMARK(BM_House)->Arg(64)->Arg(128)->Arg(512);

void BM_HouseLeqKronecker(benchmark::State& st) {
    const CycloNum a = z(24, 5);
    for (auto _ : st) benchmark::DoNotOptimize(house_leq(a, 1));
}
BENCHMARK(BM_HouseLeqKronecker);

void BM_OrbitTree(benchmark::State& st) {
    const PolySystem s({P({-1, 0, 1}), P({z(3), 0, 1})});
    const unsigned depth = static_cast<unsigned>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(build_tree(s, z(5), depth, {1u << 20, 1}));
}
BENCHMARK(BM_OrbitTree)->DenseRange(4, 8, 2);

void BM_DetectPi(benchmark::State& st) {
    const PolySystem s({P({0, 0, 1})});
    for (auto _ : st) benchmark::DoNotOptimize(detect_pi(s, z(29), 6, 30));
}
BENCHMARK(BM_DetectPi);

void BM_SpecialSet(benchmark::State& st) {
    const PolySystem s({P({1, 0, 1}), P({1, -1, 1}), P({1, 4, 2}), P({0, 1, 0, 1})});
    for (auto _ : st) benchmark::DoNotOptimize(is_special_set(s));
}
BENCHMARK(BM_SpecialSet);

void BM_BoundM(benchmark::State& st) {
    const PolySystem s({P({CycloNum(1L) + z(3), 0, z(5)}), P({2, 1, 0, 1})});
    for (auto _ : st) benchmark::DoNotOptimize(bound_M(s, 1, {}));
}
BENCHMARK(BM_BoundM);

void BM_Loxton(benchmark::State& st) {
    const CycloNum a = z(60, 7) + z(60, 19) + z(60, 44);
    for (auto _ : st) benchmark::DoNotOptimize(loxton_decompose(a, 3, 60));
}
BENCHMARK(BM_Loxton);

void BM_SigmaWord(benchmark::State& st) {
    const PolySystem s({P({0, 0, 0, 1}), P({-1, 0, 0, 1})});
    const std::vector<CycloNum> pool{0, 1, -1, z(4), -z(4)};
    for (auto _ : st) benchmark::DoNotOptimize(sigma_members(s, 1, 1, pool, {2}));
}
BENCHMARK(BM_SigmaWord);

void BM_FZCheck(benchmark::State& st) {
    const CPoly g = P({1, -2, 0, 3, 0, 1});
    const LaurentPoly q({{-3, 1}, {1, 2}, {4, -1}});
    for (auto _ : st) benchmark::DoNotOptimize(fz_bound_check(g, q));
}
BENCHMARK(BM_FZCheck);

}  // namespace

BENCHMARK_MAIN();
