#pragma once

#include <cstdint>
#include <vector>

#include "wlcull/metrics.hpp"

namespace wlcull {

// Synthetic dataset with known structure: 60 workloads in 3 planted behavior
// groups of 20, measured on the bundled 45-metric catalog, plus per-workload
// metric-family activity so the retained component space is not a plane.
// labels[i] is the planted group of workload i. The full pipeline at default
// settings recovers the grouping (best k = 3, clusters match the labels).
struct DemoDataset {
  MetricMatrix matrix;
  std::vector<std::size_t> labels;
};

DemoDataset make_demo_dataset(std::uint64_t seed);

}  // namespace wlcull
