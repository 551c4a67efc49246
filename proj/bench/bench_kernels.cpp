/* Microbenchmarks pairing each OpenMP kernel with its serial reference.
 *
 * The pairs compute identical results (the unit tests assert as much);
 * these runs only compare wall time.  On a single-core host the parallel
 * builds should track the serial ones to within scheduling overhead.
 */

#include <benchmark/benchmark.h>

#include <random>

#include "foliate/derivation.hpp"
#include "foliate/diffideal.hpp"
#include "foliate/linalg.hpp"
#include "foliate/poly.hpp"
#include "foliate/ring.hpp"

using namespace foliate;

namespace {

Matrix seeded_matrix(unsigned char_p, std::size_t rows, std::size_t cols) {
    RingPtr R = make_ring(char_p, {"x"});
    Matrix m(R, rows, cols);
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = entry(rng);
    return m;
}

void bm_rref_serial_gf5(benchmark::State& state) {
    Matrix base = seeded_matrix(5, 40, 60);
    for (auto _ : state) {
        Matrix m = base;
        benchmark::DoNotOptimize(rref_serial(m));
    }
}

void bm_rref_parallel_gf5(benchmark::State& state) {
    Matrix base = seeded_matrix(5, 40, 60);
    for (auto _ : state) {
        Matrix m = base;
        benchmark::DoNotOptimize(rref_parallel(m));
    }
}

void bm_rref_serial_rational(benchmark::State& state) {
    Matrix base = seeded_matrix(0, 30, 45);
    for (auto _ : state) {
        Matrix m = base;
        benchmark::DoNotOptimize(rref_serial(m));
    }
}

void bm_rref_parallel_rational(benchmark::State& state) {
    Matrix base = seeded_matrix(0, 30, 45);
    for (auto _ : state) {
        Matrix m = base;
        benchmark::DoNotOptimize(rref_parallel(m));
    }
}

struct TrajectoryFixture {
    RingPtr R = make_ring(0, {"x", "y"});
    Poly x = Poly::variable(R, 0), y = Poly::variable(R, 1);
    Derivation d = make_derivation(R, {y.scaled(-2), x.pow(2).scaled(3)});
    Ideal P{R, {x - Poly::constant(R, 1), y}};
};

void bm_trajectory_serial(benchmark::State& state) {
    TrajectoryFixture fx;
    for (auto _ : state)
        benchmark::DoNotOptimize(trajectory(fx.P, fx.d, 4, 32, /*parallel=*/false));
}

void bm_trajectory_parallel(benchmark::State& state) {
    TrajectoryFixture fx;
    for (auto _ : state)
        benchmark::DoNotOptimize(trajectory(fx.P, fx.d, 4, 32, /*parallel=*/true));
}

BENCHMARK(bm_rref_serial_gf5);
BENCHMARK(bm_rref_parallel_gf5);
BENCHMARK(bm_rref_serial_rational);
BENCHMARK(bm_rref_parallel_rational);
BENCHMARK(bm_trajectory_serial);
BENCHMARK(bm_trajectory_parallel);

}  // namespace

BENCHMARK_MAIN();
