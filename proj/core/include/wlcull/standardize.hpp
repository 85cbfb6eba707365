#pragma once

#include <string>
#include <vector>

#include "wlcull/matrix.hpp"
#include "wlcull/metrics.hpp"

namespace wlcull {

// Column z-scores of a MetricMatrix. Retained columns have mean 0 and sample
// standard deviation 1 (divisor R-1); zero-variance columns are dropped and
// listed. Workload order is preserved from the source matrix.
struct StandardizedMatrix {
  std::vector<WorkloadDescriptor> workloads;  // length R, copied from source
  std::vector<std::string> metric_names;      // retained columns, source order
  Matrix values;                              // R x d' z-scores
  std::vector<double> column_means;           // original mean per retained column
  std::vector<double> column_stds;            // original sample std per retained column
  std::vector<std::string> dropped_columns;   // zero-variance metric names
};

// Throws DataError when R < 2 or every column is constant.
StandardizedMatrix standardize(const MetricMatrix& m);

}  // namespace wlcull
