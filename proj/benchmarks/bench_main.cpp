#include <benchmark/benchmark.h>

#include <random>

#include "bct/minint.hpp"
#include "bct/polymat.hpp"

namespace {

using bct::Poly;
using bct::PolyMatrix;

PolyMatrix fixed_matrix(int rows, int cols, int max_deg, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dd(0, max_deg), dc(-3, 3);
    PolyMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            std::vector<bct::Rational> cs;
            int d = dd(rng);
            for (int k = 0; k <= d; ++k) cs.emplace_back(dc(rng));
            m.at(i, j) = Poly(std::move(cs));
        }
    return m;
}

void BM_hermite(benchmark::State& state) {
    auto m = fixed_matrix(static_cast<int>(state.range(0)),
                          static_cast<int>(state.range(0)), 3, 1);
    for (auto _ : state) benchmark::DoNotOptimize(bct::hermite_form(m));
}
BENCHMARK(BM_hermite)->Arg(3)->Arg(5)->Arg(8);

void BM_smith(benchmark::State& state) {
    auto m = fixed_matrix(static_cast<int>(state.range(0)),
                          static_cast<int>(state.range(0)), 3, 2);
    for (auto _ : state) benchmark::DoNotOptimize(bct::smith_form(m));
}
BENCHMARK(BM_smith)->Arg(3)->Arg(5);

void BM_compute_v(benchmark::State& state) {
    int cols = static_cast<int>(state.range(0));
    auto c = fixed_matrix(2, cols, 2, 3);
    auto p = fixed_matrix(3, cols, 2, 4);
    for (auto _ : state) benchmark::DoNotOptimize(bct::compute_v(c, p));
}
BENCHMARK(BM_compute_v)->Arg(3)->Arg(5)->Arg(7);

}  // namespace

int main(int argc, char** argv) {
    bct::set_degree_cap(4096);  // larger inputs legitimately pass 64
    benchmark::Initialize(&argc, argv);
    benchmark::RunSpecifiedBenchmarks();
    return 0;
}
