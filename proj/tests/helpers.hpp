#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "wlcull/matrix.hpp"
#include "wlcull/metrics.hpp"
#include "wlcull/rng.hpp"

namespace helpers {

inline wlcull::Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  wlcull::Rng rng(seed);
  wlcull::Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.normal();
  return m;
}

inline std::vector<std::string> row_ids(std::size_t n) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back("w" + std::to_string(i));
  return ids;
}

// Rows drawn around `k` well separated centers; labels returned alongside.
// separation / spread controls how distinct the groups are.
struct Blobs {
  wlcull::Matrix points{0, 0};
  std::vector<std::size_t> labels;
};

inline Blobs make_blobs(std::size_t per_group, std::size_t k, std::size_t dim, double separation,
                        double spread, std::uint64_t seed) {
  wlcull::Rng rng(seed);
  wlcull::Matrix centers(k, dim);
  // Centers on coordinate axes scaled by separation keeps pairwise center
  // distances at least `separation` apart.
  for (std::size_t g = 0; g < k; ++g)
    for (std::size_t c = 0; c < dim; ++c) centers(g, c) = (c == g % dim) ? separation * static_cast<double>(1 + g / dim) : 0.0;
  Blobs out;
  out.points = wlcull::Matrix(per_group * k, dim);
  for (std::size_t g = 0; g < k; ++g) {
    for (std::size_t i = 0; i < per_group; ++i) {
      std::size_t row = g * per_group + i;
      out.labels.push_back(g);
      for (std::size_t c = 0; c < dim; ++c)
        out.points(row, c) = centers(g, c) + spread * rng.normal();
    }
  }
  return out;
}

// Build a MetricMatrix wrapper around raw values for pipeline-level tests.
inline wlcull::MetricMatrix wrap_matrix(const wlcull::Matrix& values) {
  wlcull::MetricMatrix m;
  m.values = values;
  for (std::size_t r = 0; r < values.rows(); ++r) {
    wlcull::WorkloadDescriptor w;
    w.id = "w" + std::to_string(r);
    m.workloads.push_back(w);
  }
  for (std::size_t c = 0; c < values.cols(); ++c) {
    wlcull::MetricDescriptor d;
    d.name = "m" + std::to_string(c);
    d.category = "custom";
    d.unit = wlcull::MetricUnit::Dimensionless;
    m.metrics.push_back(d);
  }
  return m;
}

// Unique directory under the working directory, removed on destruction.
class ScopedDir {
 public:
  explicit ScopedDir(const std::string& tag) {
    static int counter = 0;
    path_ = std::filesystem::current_path() / ("wlcull_test_" + tag + "_" + std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~ScopedDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  ScopedDir(const ScopedDir&) = delete;
  ScopedDir& operator=(const ScopedDir&) = delete;
  const std::filesystem::path& path() const { return path_; }
  std::string str() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

// Two equal-size label vectors describe the same partition iff the induced
// co-membership relations agree.
inline bool same_partition(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if ((a[i] == a[j]) != (b[i] == b[j])) return false;
  return true;
}

}  // namespace helpers
