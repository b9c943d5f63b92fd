#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "acr/analysis.hpp"
#include "acr/cone.hpp"
#include "acr/linalg.hpp"
#include "acr/multipoly.hpp"
#include "acr/network.hpp"
#include "acr/parser.hpp"
#include "acr/poly_matrix.hpp"
#include "acr/sensitivity.hpp"

namespace {

using namespace acr;

RationalMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-5, 5);
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

PolyMatrix random_poly_matrix(std::size_t size, std::size_t nvars, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> exp(0, 2);
  auto vars = VarSet::numbered("t", nvars);
  PolyMatrix m(vars, size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) {
      MultiPoly::Exponents e(nvars, 0);
      for (auto& x : e) x = exp(rng);
      m(i, j) = MultiPoly::monomial(vars, e, Rational(coeff(rng)));
    }
  return m;
}

PowerLawSystem loop_system() {
  return build_from_input(parse_input(
      "species: X1, X2, X3, X4, X5\n"
      "X1 + X2 <=> X3 ; k1, k2\n"
      "X3 -> X1 + X4 ; k3\n"
      "X3 + X4 <=> X5 ; k4, k5\n"
      "X5 -> X2 + X3 ; k6\n"));
}

void BM_rank(benchmark::State& state) {
  auto m = random_matrix(8, 12, 101);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_rank);

void BM_kernel_basis(benchmark::State& state) {
  auto m = random_matrix(8, 12, 102);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(m));
}
BENCHMARK(BM_kernel_basis);

void BM_poly_det_5x5(benchmark::State& state) {
  auto m = random_poly_matrix(5, 4, 103);
  for (auto _ : state) benchmark::DoNotOptimize(poly_det(m));
}
BENCHMARK(BM_poly_det_5x5);

void BM_loop_minors(benchmark::State& state) {
  auto m = free_flux_jacobian(loop_system());
  for (auto _ : state) benchmark::DoNotOptimize(minors(m, 3));
}
BENCHMARK(BM_loop_minors);

void BM_extreme_rays(benchmark::State& state) {
  auto N = random_matrix(3, 8, 104);
  for (auto _ : state) benchmark::DoNotOptimize(extreme_rays(N));
}
BENCHMARK(BM_extreme_rays);

void BM_analyze_loop(benchmark::State& state) {
  auto sys = loop_system();
  for (auto _ : state) benchmark::DoNotOptimize(analyze(sys));
}
BENCHMARK(BM_analyze_loop);

void BM_sensitivity_solve(benchmark::State& state) {
  auto sys = loop_system();
  auto pt = make_point(sys, std::vector<Rational>{2, 1, 1, 2, 1, 1},
                       std::vector<Rational>(5, Rational(1)));
  for (auto _ : state) benchmark::DoNotOptimize(sensitivity_canonical(sys, pt, 0));
}
BENCHMARK(BM_sensitivity_solve);

}  // namespace

BENCHMARK_MAIN();
