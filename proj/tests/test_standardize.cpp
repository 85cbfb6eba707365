#include <cmath>
#include <cstdint>

#include "doctest.h"
#include "helpers.hpp"
#include "wlcull/error.hpp"
#include "wlcull/rng.hpp"
#include "wlcull/standardize.hpp"

using namespace wlcull;

namespace {

// Plain two-pass mean/sample-std used to validate the library's output.
std::pair<double, double> mean_std(const Matrix& values, std::size_t col) {
  double mean = 0.0;
  for (std::size_t r = 0; r < values.rows(); ++r) mean += values(r, col);
  mean /= static_cast<double>(values.rows());
  double ss = 0.0;
  for (std::size_t r = 0; r < values.rows(); ++r) {
    double d = values(r, col) - mean;
    ss += d * d;
  }
  return {mean, std::sqrt(ss / static_cast<double>(values.rows() - 1))};
}

}  // namespace

TEST_SUITE("standardize") {

TEST_CASE("three evenly spaced values map to -1, 0, 1") {
  Matrix values(3, 1);
  values(0, 0) = 1;
  values(1, 0) = 2;
  values(2, 0) = 3;
  auto s = standardize(helpers::wrap_matrix(values));
  CHECK(s.values(0, 0) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(s.values(1, 0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(s.values(2, 0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(s.column_means[0] == doctest::Approx(2.0));
  CHECK(s.column_stds[0] == doctest::Approx(1.0));
}

TEST_CASE("standardizing an already standardized column is stable") {
  Matrix values(3, 1);
  values(0, 0) = -1;
  values(1, 0) = 0;
  values(2, 0) = 1;
  auto s = standardize(helpers::wrap_matrix(values));
  for (std::size_t r = 0; r < 3; ++r)
    CHECK(s.values(r, 0) == doctest::Approx(values(r, 0)).epsilon(1e-12));
}

TEST_CASE("constant columns are dropped and reported") {
  Matrix values(3, 2);
  for (std::size_t r = 0; r < 3; ++r) {
    values(r, 0) = 5.0;
    values(r, 1) = static_cast<double>(r);
  }
  auto s = standardize(helpers::wrap_matrix(values));
  CHECK(s.values.cols() == 1);
  REQUIRE(s.dropped_columns.size() == 1);
  CHECK(s.dropped_columns[0] == "m0");
  CHECK(s.metric_names == std::vector<std::string>{"m1"});
}

TEST_CASE("an all-constant matrix is an error") {
  Matrix values(3, 2);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 2; ++c) values(r, c) = 7.0;
  CHECK_THROWS_AS(standardize(helpers::wrap_matrix(values)), DataError);
}

TEST_CASE("fewer than two workloads is an error") {
  CHECK_THROWS_AS(standardize(helpers::wrap_matrix(helpers::random_matrix(1, 3, 1))), DataError);
}

TEST_CASE("random matrices standardize to zero mean and unit deviation") {
  Rng shape_rng(20240815);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t rows = 3 + shape_rng.uniform_index(62);  // [3, 64]
    std::size_t cols = 2 + shape_rng.uniform_index(44);  // [2, 45]
    auto m = helpers::wrap_matrix(
        helpers::random_matrix(rows, cols, 1000 + static_cast<std::uint64_t>(trial)));
    // Plant a constant column on some trials.
    bool planted = trial % 3 == 0;
    if (planted)
      for (std::size_t r = 0; r < rows; ++r) m.values(r, cols / 2) = -3.25;
    auto s = standardize(m);
    CAPTURE(rows);
    CAPTURE(cols);
    CHECK(s.values.cols() == cols - (planted ? 1 : 0));
    if (planted) {
      REQUIRE(s.dropped_columns.size() == 1);
      CHECK(s.dropped_columns[0] == "m" + std::to_string(cols / 2));
    }
    for (std::size_t c = 0; c < s.values.cols(); ++c) {
      auto [mean, sd] = mean_std(s.values, c);
      CHECK(std::abs(mean) < 1e-9);
      CHECK(std::abs(sd - 1.0) < 1e-9);
    }
  }
}

TEST_CASE("workload order and descriptors are preserved") {
  auto m = helpers::wrap_matrix(helpers::random_matrix(4, 3, 17));
  m.workloads[2].stack = "native";
  auto s = standardize(m);
  REQUIRE(s.workloads.size() == 4);
  CHECK(s.workloads[2].id == "w2");
  CHECK(s.workloads[2].stack == "native");
}

}  // TEST_SUITE
