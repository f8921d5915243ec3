#include <benchmark/benchmark.h>

#include "biamalg/classify.hpp"
#include "biamalg/dsl.hpp"
#include "biamalg/harness.hpp"

using namespace biamalg;

namespace {

BiAmalg chain_instance() {
    RingPtr A = make_zmod(8);
    RingPtr B = make_zmod(4);
    RingHom f = hom_canonical(A, B);
    Ideal b = ideal_span(B, {2});
    return biamalg_new(f, f, b, b);
}

void BM_ring_construct_product(benchmark::State& state) {
    RingPtr l = make_zmod(16);
    RingPtr r = make_zmod(16);
    for (auto _ : state) benchmark::DoNotOptimize(make_product(l, r)->order());
}
BENCHMARK(BM_ring_construct_product);

void BM_ideal_span(benchmark::State& state) {
    RingPtr R = make_zmod(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(ideal_span(R, {2, 6}).size());
}
BENCHMARK(BM_ideal_span)->Arg(16)->Arg(64)->Arg(256);

void BM_enumerate_spec(benchmark::State& state) {
    RingPtr R = make_product(make_zmod(6), make_zmod(10));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_spec(*R).primes.size());
}
BENCHMARK(BM_enumerate_spec);

void BM_biamalg_construct(benchmark::State& state) {
    RingPtr A = make_zmod(8);
    RingPtr B = make_zmod(4);
    RingHom f = hom_canonical(A, B);
    Ideal b = ideal_span(B, {2});
    for (auto _ : state) benchmark::DoNotOptimize(biamalg_new(f, f, b, b).order());
}
BENCHMARK(BM_biamalg_construct);

void BM_gaussian_pair_scan(benchmark::State& state) {
    RingPtr Z16 = make_zmod(16);
    BiAmalg dup = duplication_instance(Z16, ideal_span(Z16, {4}));  // order 64
    for (auto _ : state) benchmark::DoNotOptimize(local_gaussian_pair_scan(*dup.R).ok);
}
BENCHMARK(BM_gaussian_pair_scan);

void BM_prufer_scan(benchmark::State& state) {
    RingPtr Z16 = make_zmod(16);
    BiAmalg dup = duplication_instance(Z16, ideal_span(Z16, {4}));
    for (auto _ : state) benchmark::DoNotOptimize(is_prufer(*dup.R).verdict);
}
BENCHMARK(BM_prufer_scan);

void BM_content_oracle(benchmark::State& state) {
    RingPtr R = make_zmod(8);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            gaussian_content_oracle(*R, static_cast<unsigned>(state.range(0))).verdict);
}
BENCHMARK(BM_content_oracle)->Arg(2)->Arg(3);

void BM_localization(benchmark::State& state) {
    RingPtr Z12 = make_zmod(12);
    Ideal p = ideal_span(Z12, {2});
    for (auto _ : state)
        benchmark::DoNotOptimize(localize_finite(Z12, complement_of_prime(p)).ring->order());
}
BENCHMARK(BM_localization);

void BM_assemble_spec(benchmark::State& state) {
    BiAmalg inst = chain_instance();
    for (auto _ : state) benchmark::DoNotOptimize(assemble_spec(inst).primes.size());
}
BENCHMARK(BM_assemble_spec);

void BM_parse_script(benchmark::State& state) {
    std::string script =
        "ring A = Z/8; ring B = Z/4; hom f: A -> B = canonical; "
        "ideal b = span(B,[2]); biamalg R = (A, f, f, b, b); check R gaussian;";
    for (auto _ : state) benchmark::DoNotOptimize(dsl::parse_dsl(script).stmts.size());
}
BENCHMARK(BM_parse_script);

}  // namespace

BENCHMARK_MAIN();
