#include <benchmark/benchmark.h>

#include "lietypes/cosets.hpp"
#include "lietypes/orbits.hpp"
#include "lietypes/pairs.hpp"
#include "lietypes/satake.hpp"

using namespace lietypes;

namespace {

Params np(int n, int p = -1) {
    Params P;
    P.n = n;
    P.p = p;
    return P;
}

void BM_generate_weyl(benchmark::State& st) {
    static const Family fs[] = {Family::A, Family::B, Family::D};
    auto rs = build_root_system(fs[st.range(0)], static_cast<int>(st.range(1)));
    auto simple = standard_simple_system(rs);
    for (auto _ : st) benchmark::DoNotOptimize(generate_weyl(simple));
}
BENCHMARK(BM_generate_weyl)->Args({0, 4})->Args({0, 5})->Args({1, 4})->Args({1, 5})->Args({2, 5})
    ->Unit(benchmark::kMillisecond);

void BM_coset_reps(benchmark::State& st) {
    auto s = lookup_pair("soC-so", np(static_cast<int>(st.range(0)), 2));
    auto rs = s.root_system();
    auto emb = s.embedded();
    for (auto _ : st) benchmark::DoNotOptimize(coset_reps(rs, emb));
}
BENCHMARK(BM_coset_reps)->DenseRange(6, 10, 2)->Unit(benchmark::kMicrosecond);

void BM_delta_theta(benchmark::State& st) {
    auto rs = build_root_system(Family::B, static_cast<int>(st.range(0)));
    auto psi = standard_simple_system(rs).roots;
    psi.pop_back();
    for (auto _ : st) benchmark::DoNotOptimize(delta_theta(rs, psi));
}
BENCHMARK(BM_delta_theta)->DenseRange(3, 8, 1);

void BM_local_orbit_types_sl4R_so22(benchmark::State& st) {
    auto s = resolve_slug("sl4R-so22");
    for (auto _ : st) benchmark::DoNotOptimize(local_orbit_types(s));
}
BENCHMARK(BM_local_orbit_types_sl4R_so22)->Unit(benchmark::kMicrosecond);

void BM_local_orbit_types_spC_spR(benchmark::State& st) {
    auto s = lookup_pair("spC-spR", np(static_cast<int>(st.range(0))));
    for (auto _ : st) benchmark::DoNotOptimize(local_orbit_types(s));
}
BENCHMARK(BM_local_orbit_types_spC_spR)->DenseRange(2, 5, 1)->Unit(benchmark::kMicrosecond);

void BM_recipe_su_sp(benchmark::State& st) {
    auto t = triple_su_sp(static_cast<int>(st.range(0)), 2);
    for (auto _ : st) benchmark::DoNotOptimize(recipe_run(t));
}
BENCHMARK(BM_recipe_su_sp)->DenseRange(4, 8, 2)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
