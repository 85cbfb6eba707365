#include "wlcull/demo.hpp"

#include "wlcull/catalog.hpp"
#include "wlcull/rng.hpp"

namespace wlcull {

namespace {

// Plausible magnitude for a metric of the given unit; the planted group
// pattern scales around it.
double base_magnitude(MetricUnit unit) {
  switch (unit) {
    case MetricUnit::PerKiloInstruction: return 8.0;
    case MetricUnit::Ratio: return 0.4;
    case MetricUnit::Percentage: return 25.0;
    case MetricUnit::Count: return 1000.0;
    case MetricUnit::Dimensionless: return 2.0;
  }
  return 1.0;
}

}  // namespace

DemoDataset make_demo_dataset(std::uint64_t seed) {
  constexpr std::size_t kGroups = 3;
  // Twenty members per group: with this BIC a handful of points per cluster
  // can be profitably sub-split (the per-cluster entropy and parameter terms
  // stop paying for themselves), so small groups would make the selected k
  // seed-dependent. Twenty keeps best_k = 3 stable across seeds.
  constexpr std::size_t kPerGroup = 20;
  const char* const kStacks[kGroups] = {"alpha", "beta", "gamma"};

  DemoDataset demo;
  demo.matrix.metrics = builtin_catalog();
  const std::size_t d = demo.matrix.metrics.size();

  for (std::size_t g = 0; g < kGroups; ++g) {
    for (std::size_t i = 0; i < kPerGroup; ++i) {
      WorkloadDescriptor w;
      w.id = std::string(1, static_cast<char>('A' + g)) + (i < 10 ? "0" : "") +
             std::to_string(i);
      w.algorithm = "mix-" + std::to_string(i);
      w.stack = kStacks[g];
      w.category = "synthetic";
      demo.matrix.workloads.push_back(std::move(w));
      demo.labels.push_back(g);
    }
  }

  const std::size_t R = demo.matrix.workloads.size();
  demo.matrix.values = Matrix(R, d);
  Rng rng(derive_seed(seed, 0x6d656f, 0));  // one stream, row-major fill order

  for (std::size_t r = 0; r < R; ++r) {
    const std::size_t g = demo.labels[r];
    // Five per-workload activity levels, each shared by a family of metrics.
    // They add correlated within-group variation, so the component spectrum
    // keeps five more axes beyond the two that separate the groups. Low-rank
    // data would let the sweep pay for ever finer partitions out of the
    // variance term; the extra axes make each added cluster cost more than
    // it explains, keeping the selected k at the planted 3 over the whole
    // default range.
    double activity[5];
    for (double& a : activity) a = rng.normal();
    for (std::size_t c = 0; c < d; ++c) {
      const double base = base_magnitude(demo.matrix.metrics[c].unit);
      // Group pattern in {-1, 0, +1}, phase-shifted by metric index mod 3.
      // Metrics sharing a phase are near-perfectly correlated, so the
      // correlation spectrum concentrates in two large components and the
      // groups land on three well-separated points in component space.
      const double pattern = static_cast<double>((g + c) % 3) - 1.0;
      // Families are runs of three consecutive metrics cycling with period
      // 15, nine metrics each: every family covers all three pattern phases
      // equally, so family activity stays orthogonal to the group separation
      // and every family's eigenvalue clears the retention threshold with
      // seed-proof margin.
      const std::size_t family = (c % 15) / 3;
      demo.matrix.values(r, c) = base * (1.0 + 0.5 * pattern +
                                         0.3 * activity[family]) +
                                 0.02 * base * rng.normal();
    }
  }

  validate(demo.matrix);
  return demo;
}

}  // namespace wlcull
