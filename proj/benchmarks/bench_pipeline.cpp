#include <benchmark/benchmark.h>

#include "wlcull/expression.hpp"
#include "wlcull/hcluster.hpp"
#include "wlcull/kmeans.hpp"
#include "wlcull/matrix.hpp"
#include "wlcull/pca.hpp"
#include "wlcull/rng.hpp"
#include "wlcull/standardize.hpp"

namespace {

wlcull::Matrix random_scores(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  wlcull::Rng rng(seed);
  wlcull::Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.normal();
  return m;
}

wlcull::StandardizedMatrix random_standardized(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  wlcull::StandardizedMatrix s;
  s.values = random_scores(rows, cols, seed);
  for (std::size_t r = 0; r < rows; ++r) {
    wlcull::WorkloadDescriptor w;
    w.id = "w" + std::to_string(r);
    s.workloads.push_back(w);
  }
  for (std::size_t c = 0; c < cols; ++c) s.metric_names.push_back("m" + std::to_string(c));
  s.column_means.assign(cols, 0.0);
  s.column_stds.assign(cols, 1.0);
  return s;
}

void BM_symmetric_eigen(benchmark::State& state) {
  auto d = static_cast<std::size_t>(state.range(0));
  auto data = random_scores(4 * d, d, 17);
  wlcull::Matrix corr(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      double acc = 0.0;
      for (std::size_t r = 0; r < data.rows(); ++r) acc += data(r, i) * data(r, j);
      corr(i, j) = acc / static_cast<double>(data.rows() - 1);
    }
  for (auto _ : state) {
    auto eig = wlcull::symmetric_eigen(corr);
    benchmark::DoNotOptimize(eig.values.data());
  }
}
BENCHMARK(BM_symmetric_eigen)->Arg(8)->Arg(16)->Arg(45);

void BM_pca(benchmark::State& state) {
  auto s = random_standardized(64, static_cast<std::size_t>(state.range(0)), 23);
  for (auto _ : state) {
    auto model = wlcull::pca(s);
    benchmark::DoNotOptimize(model.eigenvalues.data());
  }
}
BENCHMARK(BM_pca)->Arg(8)->Arg(45);

void BM_single_linkage(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  auto scores = random_scores(n, 8, 31);
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back("w" + std::to_string(i));
  auto dist = wlcull::pairwise_distances(scores);
  for (auto _ : state) {
    auto dend = wlcull::single_linkage(dist, ids);
    benchmark::DoNotOptimize(dend.merges.data());
  }
}
BENCHMARK(BM_single_linkage)->Arg(16)->Arg(64)->Arg(128);

void BM_lloyd(benchmark::State& state) {
  auto scores = random_scores(64, 8, 47);
  auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto sol = wlcull::lloyd(scores, k, 99);
    benchmark::DoNotOptimize(sol.inertia);
  }
}
BENCHMARK(BM_lloyd)->Arg(3)->Arg(8);

void BM_bic_sweep(benchmark::State& state) {
  auto scores = random_scores(48, 6, 53);
  for (auto _ : state) {
    auto sweep = wlcull::sweep(scores, 2, 12, 5, 7, false);
    benchmark::DoNotOptimize(sweep.best_k);
  }
}
BENCHMARK(BM_bic_sweep);

void BM_expression_evaluate(benchmark::State& state) {
  auto expr = wlcull::Expression::parse("(MISS + FILL) / TOTAL * 1000 - BASE / (TOTAL + 1)");
  std::map<std::string, double> env{{"MISS", 12.0}, {"FILL", 3.5}, {"TOTAL", 9000.0}, {"BASE", 42.0}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(expr.evaluate(env));
  }
}
BENCHMARK(BM_expression_evaluate);

}  // namespace

BENCHMARK_MAIN();
