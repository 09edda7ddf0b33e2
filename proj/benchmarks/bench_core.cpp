#include <benchmark/benchmark.h>

#include "oig/arrangement.hpp"
#include "oig/complexified.hpp"
#include "oig/enumerate.hpp"
#include "oig/orient.hpp"
#include "oig/topology.hpp"

using namespace oig;

namespace {

set_system colinear() {
    return build_set_system({"x", "y", "z"},
                            {{}, {"x"}, {"z"}, {"x", "y"}, {"x", "z"}, {"y", "z"}, {"x", "y", "z"}});
}

void bm_flat_lattice(benchmark::State& state) {
    set_system sys = colinear();
    for (auto _ : state) benchmark::DoNotOptimize(flat_lattice::build(sys));
}
BENCHMARK(bm_flat_lattice);

void bm_all_covectors(benchmark::State& state) {
    flat_lattice L = flat_lattice::build(colinear());
    for (auto _ : state) benchmark::DoNotOptimize(all_covectors(L));
}
BENCHMARK(bm_all_covectors);

void bm_circ_products(benchmark::State& state) {
    flat_lattice L = flat_lattice::build(colinear());
    std::vector<covector> cs = all_covectors(L);
    for (auto _ : state)
        for (const covector& a : cs)
            for (const covector& b : cs) benchmark::DoNotOptimize(circ(L, a, b));
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                            static_cast<int64_t>(cs.size() * cs.size()));
}
BENCHMARK(bm_circ_products);

void bm_validate_oig(benchmark::State& state) {
    set_system sys = colinear();
    std::vector<std::string> covs = oig_from_antimatroid(sys).strings();
    for (auto _ : state) benchmark::DoNotOptimize(oriented_system::validate(sys, covs));
}
BENCHMARK(bm_validate_oig);

void bm_enumerate_n4(benchmark::State& state) {
    for (auto _ : state) {
        long long count = 0;
        enumerate_interval_greedoids(4, 64, [&](const set_system&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(bm_enumerate_n4);

void bm_sphere_homology(benchmark::State& state) {
    oriented_system o = oig_from_antimatroid(colinear());
    finite_poset aug = augment(o);
    for (auto _ : state) benchmark::DoNotOptimize(homology_evidence(order_complex(aug)));
}
BENCHMARK(bm_sphere_homology);

void bm_real_covectors(benchmark::State& state) {
    rational_arrangement arr(
        2, {{rational(-3), rational(1)}, {rational(2), rational(1)}, {rational(4), rational(1)}});
    for (auto _ : state) benchmark::DoNotOptimize(real_covectors(arr));
}
BENCHMARK(bm_real_covectors);

void bm_complexified(benchmark::State& state) {
    rational_arrangement arr(2, {{rational(1), rational(0)}, {rational(0), rational(1)}});
    for (auto _ : state) benchmark::DoNotOptimize(complexified_oig(arr));
}
BENCHMARK(bm_complexified);

}  // namespace

BENCHMARK_MAIN();
