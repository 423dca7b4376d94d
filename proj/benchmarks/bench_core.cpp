// Microbenchmarks for the hot paths: integer Smith reduction, pentagon
// checking, Hochschild cohomology, the adjunction square, and the
// skew-symmetrization roundtrip. Sizes are chosen so one iteration stays in
// the microsecond-to-millisecond range.
#include <benchmark/benchmark.h>

#include <cat2alg/exactlin.hpp>
#include <cat2alg/hochschild.hpp>
#include <cat2alg/linf2.hpp>
#include <cat2alg/rng.hpp>
#include <cat2alg/skewsym.hpp>
#include <cat2alg/twogroup.hpp>

using namespace cat2alg;

namespace {

IntMatrix random_int_matrix(SplitMix64& rng, std::size_t n, long bound) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Int(rng.range(-bound, bound));
    return m;
}

void BM_smith_normal_form(benchmark::State& state) {
    SplitMix64 rng(5);
    IntMatrix m = random_int_matrix(rng, std::size_t(state.range(0)), 20);
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_smith_normal_form)->Arg(4)->Arg(8)->Arg(12);

Skeletal2Group cyclic_group_with_cocycle(std::size_t n) {
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    std::vector<std::vector<std::size_t>> action(n, std::vector<std::size_t>(n));
    for (auto& row : action)
        for (std::size_t x = 0; x < n; ++x) row[x] = x;
    // The carry cocycle on Z/n with Z/n coefficients, alpha(a,b,c) =
    // a * floor((b+c)/n) mod n; normalized and coherent.
    std::vector<std::size_t> alpha(n * n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                alpha[(a * n + b) * n + c] = a * ((b + c) / n) % n;
    return {table, FinAbGroup({Int(long(n))}), action, alpha};
}

void BM_pentagon(benchmark::State& state) {
    Skeletal2Group g = cyclic_group_with_cocycle(std::size_t(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(check_pentagon(g).all_passed());
}
BENCHMARK(BM_pentagon)->Arg(4)->Arg(8)->Arg(12);

FinDimAlgebra truncated_poly(std::size_t k) {
    FinDimAlgebra a;
    a.dim = k;
    a.mult.assign(k * k, RatVec(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (i + j < k) a.mult[i * k + j][i + j] = 1;
    a.unit = RatVec(k);
    a.unit[0] = 1;
    return a;
}

void BM_hh1(benchmark::State& state) {
    FinDimAlgebra a = truncated_poly(std::size_t(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(hh1(a).dim());
}
BENCHMARK(BM_hh1)->Arg(2)->Arg(4)->Arg(6);

void BM_ext1_bimodule(benchmark::State& state) {
    FinDimAlgebra a = truncated_poly(std::size_t(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(ext1_bimodule(a).dim());
}
BENCHMARK(BM_ext1_bimodule)->Arg(2)->Arg(4);

void BM_goodness_square(benchmark::State& state) {
    FinDimAlgebra a = truncated_poly(2);
    SplitMix64 rng(9);
    std::vector<FDModule> samples;
    for (int i = 0; i < 5; ++i) samples.push_back(sample_dual_module(a, rng, 2));
    for (auto _ : state)
        benchmark::DoNotOptimize(goodness_square_check(a, samples).all_passed());
}
BENCHMARK(BM_goodness_square);

L2Algebra string_like_algebra() {
    // sl2 with the trace-form 3-cocycle in degree -1.
    L2Algebra a = L2Algebra::zero(1, 3);
    auto set2 = [&](std::size_t i, std::size_t j, long ch, long ce, long cf) {
        RatVec v{Rat(ch), Rat(ce), Rat(cf)};
        a.l2_00[i * 3 + j] = v;
        a.l2_00[j * 3 + i] = -v;
    };
    set2(0, 1, 0, 2, 0);
    set2(0, 2, 0, 0, -2);
    set2(1, 2, 1, 0, 0);
    const std::size_t perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                    {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    for (std::size_t p = 0; p < 6; ++p) {
        const auto* t = perm[p];
        a.l3[(t[0] * 3 + t[1]) * 3 + t[2]] = RatVec{Rat(p < 3 ? 2 : -2)};
    }
    return a;
}

void BM_skewsym_roundtrip(benchmark::State& state) {
    L2Algebra a = string_like_algebra();
    SplitMix64 rng(3);
    std::vector<RatVec> q(a.n0 * a.n0, RatVec(a.n1));
    for (std::size_t i = 0; i < a.n0; ++i)
        for (std::size_t j = i; j < a.n0; ++j) {
            RatVec v(a.n1);
            for (std::size_t h = 0; h < a.n1; ++h) v[h] = Rat(rng.range(-2, 2));
            q[i * a.n0 + j] = v;
            q[j * a.n0 + i] = v;
        }
    for (auto _ : state) benchmark::DoNotOptimize(skew_symmetrize(perturb(a, q)).n0);
}
BENCHMARK(BM_skewsym_roundtrip);

} // namespace

BENCHMARK_MAIN();
