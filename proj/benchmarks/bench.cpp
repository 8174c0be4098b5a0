#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "mrsc/construct.hpp"
#include "mrsc/linalg.hpp"
#include "mrsc/rng.hpp"
#include "mrsc/update.hpp"

using namespace mrsc;

namespace {

FieldMatrix random_matrix(const Field& f, std::uint64_t rows, std::uint64_t cols, Rng& rng) {
    std::vector<std::uint64_t> data(rows * cols);
    for (auto& v : data) v = uniform_below(rng, f->order());
    return FieldMatrix(f, rows, cols, std::move(data));
}

FieldMatrix random_full_rank(const Field& f, std::uint64_t rows, std::uint64_t cols, Rng& rng) {
    for (;;) {
        FieldMatrix m = random_matrix(f, rows, cols, rng);
        if (rank(m) == rows) return m;
    }
}

FieldMatrix vandermonde(const Field& f, std::uint64_t rows, std::uint64_t n) {
    FieldMatrix m(f, rows, n);
    for (std::uint64_t j = 0; j < n; ++j) {
        std::uint64_t x = j + 1;
        for (std::uint64_t i = 0; i < rows; ++i) m.at(i, j) = f->pow(x, i);
    }
    return m;
}

} // namespace

// Multiplication through the precomputed table (order below 2^16).
static void BM_FieldMulTabled(benchmark::State& state) {
    Field f = make_field(2, 8);
    Rng rng(1);
    std::vector<std::uint64_t> xs(4096);
    for (auto& x : xs) x = 1 + uniform_below(rng, f->order() - 1);
    std::uint64_t acc = 1;
    std::size_t i = 0;
    for (auto _ : state) {
        acc = f->mul(acc, xs[i++ & 4095]);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_FieldMulTabled);

// Same loop on a field too large for tables: polynomial arithmetic per call.
static void BM_FieldMulWide(benchmark::State& state) {
    Field f = make_field(2, 17);
    Rng rng(1);
    std::vector<std::uint64_t> xs(4096);
    for (auto& x : xs) x = 1 + uniform_below(rng, f->order() - 1);
    std::uint64_t acc = 1;
    std::size_t i = 0;
    for (auto _ : state) {
        acc = f->mul(acc, xs[i++ & 4095]);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_FieldMulWide);

static void BM_Rank20x40(benchmark::State& state) {
    Field f = make_field(2, 8);
    Rng rng(7);
    FieldMatrix m = random_matrix(f, 20, 40, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rank(m));
    }
}
BENCHMARK(BM_Rank20x40);

// Full verification pass over a [12, 2] subcode of the four-stripe code.
static void BM_IsMrscDefinition1(benchmark::State& state) {
    Field f = make_field(2, 3);
    auto r = construct_striped_mrsc(f, {1, 1, 1}, 4, 1);
    LinearCode super(build_striped_matrix(f, {1, 1, 1}, 4));
    for (auto _ : state) {
        MrscVerdict v = is_mrsc(r.built.code, super, MrscMode::definition1);
        benchmark::DoNotOptimize(v.ok);
    }
}
BENCHMARK(BM_IsMrscDefinition1);

static void BM_IsMrscCores(benchmark::State& state) {
    Field f = make_field(2, 3);
    auto r = construct_striped_mrsc(f, {1, 1, 1}, 4, 1);
    LinearCode super(build_striped_matrix(f, {1, 1, 1}, 4));
    for (auto _ : state) {
        MrscVerdict v = is_mrsc(r.built.code, super, MrscMode::cores);
        benchmark::DoNotOptimize(v.ok);
    }
}
BENCHMARK(BM_IsMrscCores);

// One coefficient search plus its certification on a small MDS base.
static void BM_ConstructRandom(benchmark::State& state) {
    Field f = make_field(2, 3);
    LinearCode super(vandermonde(f, 3, 6));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        auto r = construct_random_mrsc(super, 2, seed++);
        benchmark::DoNotOptimize(r.certificate.subsets_checked);
    }
}
BENCHMARK(BM_ConstructRandom);

// Exact sparse decode at the broadcast shape: 7 checks, 18 columns, weight 2.
static void BM_MinWeightPreimage(benchmark::State& state) {
    Field f = make_field(2, 6);
    Rng rng(3);
    FieldMatrix h = random_full_rank(f, 7, 18, rng);
    std::vector<std::uint64_t> e(18, 0);
    e[3] = 5;
    e[11] = 9;
    std::vector<std::uint64_t> syndrome = matvec(h, e);
    for (auto _ : state) {
        auto sol = min_weight_preimage(h, syndrome, 2);
        benchmark::DoNotOptimize(sol.has_value());
    }
}
BENCHMARK(BM_MinWeightPreimage);

static void BM_P2PDecode(benchmark::State& state) {
    Field f = make_field(2, 3);
    FieldMatrix a = build_striped_matrix(f, {1, 1, 1}, 4);
    P2PScheme s = build_p2p_scheme(a, 1, MrscMethod::auto_pick, 0);
    Rng rng(9);
    std::vector<std::uint64_t> x(12);
    for (auto& v : x) v = uniform_below(rng, f->order());
    std::vector<std::uint64_t> xe = x;
    xe[7] = f->add(xe[7], 3);
    std::vector<std::uint64_t> y = matvec(s.H, xe);
    std::vector<std::uint64_t> side = matvec(s.A, x);
    for (auto _ : state) {
        std::vector<std::uint64_t> out = p2p_decode(s, y, side);
        benchmark::DoNotOptimize(out.data());
    }
}
BENCHMARK(BM_P2PDecode);

BENCHMARK_MAIN();
