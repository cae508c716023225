#include <benchmark/benchmark.h>

#include <vector>

#include "dhm/cone_measure.hpp"
#include "dhm/gls.hpp"
#include "dhm/polytope.hpp"
#include "dhm/toric.hpp"

namespace {

dhm::RationalVector point(long a, long b, long den) {
  return dhm::RationalVector{dhm::make_rational(a, den), dhm::make_rational(b, den)};
}

void BM_TriangleDensity(benchmark::State& state) {
  const auto data = dhm::vertex_data(dhm::HPolytope::standard_simplex(2)).vertex_data;
  const auto m = dhm::assemble(data, dhm::PolarizingVector{1, 2});
  const auto b = point(5, 7, 17);
  for (auto _ : state) benchmark::DoNotOptimize(dhm::eval_density(m, b));
}
BENCHMARK(BM_TriangleDensity);

// Fiber volume of a cone with m columns in the plane: an (m-2)-polytope.
void BM_ConeDensity(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  std::vector<dhm::IntegerVector> cols;
  for (std::size_t j = 0; j < m; ++j) cols.push_back({1, static_cast<long>(j)});
  const auto c = dhm::ConeMeasure::from_columns(point(0, 0, 1), dhm::IntegerMatrix::from_columns(2, cols));
  const auto b = point(31, 29, 13);
  for (auto _ : state) benchmark::DoNotOptimize(c.density(b));
}
BENCHMARK(BM_ConeDensity)->DenseRange(2, 6);

void BM_CubeVolume(benchmark::State& state) {
  const auto p = dhm::HPolytope::unit_cube(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dhm::volume(p));
}
BENCHMARK(BM_CubeVolume)->DenseRange(2, 5);

void BM_SmithNormalForm(benchmark::State& state) {
  const dhm::IntegerMatrix a(3, 5, {2, 4, 4, 6, 1, -6, 6, 12, 0, 3, 10, -4, -16, 8, 5});
  for (auto _ : state) benchmark::DoNotOptimize(dhm::smith_normal_form(a));
}
BENCHMARK(BM_SmithNormalForm);

}  // namespace

BENCHMARK_MAIN();
