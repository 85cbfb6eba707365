#include "wlcull/standardize.hpp"

#include <cmath>

#include "wlcull/error.hpp"

namespace wlcull {

StandardizedMatrix standardize(const MetricMatrix& m) {
  const std::size_t R = m.workloads.size();
  const std::size_t d = m.metrics.size();
  if (R < 2) throw DataError("standardization needs at least 2 workloads");

  std::vector<double> means(d), stds(d);
  std::vector<bool> keep(d);
  std::size_t kept = 0;
  for (std::size_t c = 0; c < d; ++c) {
    double sum = 0.0;
    for (std::size_t r = 0; r < R; ++r) sum += m.values(r, c);
    const double mean = sum / static_cast<double>(R);
    double ss = 0.0;
    bool all_equal = true;
    for (std::size_t r = 0; r < R; ++r) {
      const double dev = m.values(r, c) - mean;
      ss += dev * dev;
      if (m.values(r, c) != m.values(0, c)) all_equal = false;
    }
    const double std_dev = std::sqrt(ss / static_cast<double>(R - 1));
    means[c] = mean;
    stds[c] = std_dev;
    // A column is constant when every entry is bitwise equal; the relative
    // floor additionally catches spread that is pure rounding noise, which
    // would otherwise z-score into garbage.
    keep[c] = !all_equal && std_dev > 1e-12 * std::max(1.0, std::abs(mean));
    if (keep[c]) ++kept;
  }
  if (kept == 0) {
    throw DataError("every metric column is constant; nothing to analyze");
  }

  StandardizedMatrix out;
  out.workloads = m.workloads;
  out.values = Matrix(R, kept);
  std::size_t oc = 0;
  for (std::size_t c = 0; c < d; ++c) {
    if (!keep[c]) {
      out.dropped_columns.push_back(m.metrics[c].name);
      continue;
    }
    out.metric_names.push_back(m.metrics[c].name);
    out.column_means.push_back(means[c]);
    out.column_stds.push_back(stds[c]);
    for (std::size_t r = 0; r < R; ++r) {
      out.values(r, oc) = (m.values(r, c) - means[c]) / stds[c];
    }
    ++oc;
  }
  return out;
}

}  // namespace wlcull
