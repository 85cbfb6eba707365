#include "wlcull/subset.hpp"

#include <algorithm>

#include "wlcull/error.hpp"

namespace wlcull {

Partition partition_from_assignments(const std::vector<std::size_t>& assignments,
                                     std::size_t k) {
  Partition partition(k);
  for (std::size_t i = 0; i < assignments.size(); ++i) {
    if (assignments[i] >= k) throw DataError("assignment label out of range");
    partition[assignments[i]].push_back(i);
  }
  for (const auto& cluster : partition) {
    if (cluster.empty()) throw DataError("partition has an empty cluster");
  }
  return partition;
}

namespace {

std::vector<double> centroid_of(const Matrix& scores,
                                const std::vector<std::size_t>& members) {
  std::vector<double> center(scores.cols(), 0.0);
  std::vector<std::size_t> ordered = members;
  std::sort(ordered.begin(), ordered.end());
  for (std::size_t m : ordered) {
    for (std::size_t j = 0; j < scores.cols(); ++j) center[j] += scores(m, j);
  }
  for (double& v : center) v /= static_cast<double>(members.size());
  return center;
}

// prefer_max false picks the nearest member, true the farthest.
std::vector<Representative> pick(const Matrix& scores, const Partition& partition,
                                 bool prefer_max) {
  if (partition.empty()) throw DataError("empty partition");
  std::vector<Representative> reps;
  reps.reserve(partition.size());
  for (std::size_t c = 0; c < partition.size(); ++c) {
    const auto& members = partition[c];
    if (members.empty()) throw DataError("partition has an empty cluster");
    if (*std::max_element(members.begin(), members.end()) >= scores.rows()) {
      throw DataError("partition member out of range");
    }
    const auto center = centroid_of(scores, members);
    std::vector<std::size_t> ordered = members;
    std::sort(ordered.begin(), ordered.end());
    std::size_t best = ordered.front();
    double best_d = squared_distance(scores.row(best),
                                     std::span<const double>(center));
    for (std::size_t i = 1; i < ordered.size(); ++i) {
      const double d = squared_distance(scores.row(ordered[i]),
                                        std::span<const double>(center));
      if (prefer_max ? d > best_d : d < best_d) {
        best_d = d;
        best = ordered[i];
      }
    }
    reps.push_back({best, c, members.size()});
  }
  return reps;
}

}  // namespace

std::vector<Representative> nearest_to_center(const Matrix& scores,
                                              const Partition& partition) {
  return pick(scores, partition, false);
}

std::vector<Representative> farthest_from_center(const Matrix& scores,
                                                 const Partition& partition) {
  return pick(scores, partition, true);
}

double max_linkage_distance(const std::vector<std::size_t>& chosen,
                            const Dendrogram& dend) {
  double max_height = 0.0;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    for (std::size_t j = i + 1; j < chosen.size(); ++j) {
      max_height = std::max(max_height, cophenetic_height(dend, chosen[i], chosen[j]));
    }
  }
  return max_height;
}

std::vector<std::size_t> dendrogram_cross_check(const Dendrogram& dend, std::size_t k) {
  std::vector<std::size_t> singletons;
  for (const auto& cluster : cut_to_k(dend, k).clusters) {
    if (cluster.size() == 1) singletons.push_back(cluster.front());
  }
  std::sort(singletons.begin(), singletons.end());
  return singletons;
}

const char* to_string(Strategy strategy) {
  return strategy == Strategy::NearestCenter ? "nearest-center" : "farthest-center";
}

SubsetReport build_subset_report(const Matrix& scores, const Partition& partition,
                                 const Dendrogram& dend, Strategy strategy) {
  SubsetReport report;
  report.strategy = strategy;
  report.representatives = strategy == Strategy::NearestCenter
                               ? nearest_to_center(scores, partition)
                               : farthest_from_center(scores, partition);
  std::vector<std::size_t> chosen;
  chosen.reserve(report.representatives.size());
  for (const auto& rep : report.representatives) chosen.push_back(rep.workload);
  report.max_linkage_distance = max_linkage_distance(chosen, dend);
  report.cut_singletons = dendrogram_cross_check(dend, partition.size());
  std::sort(chosen.begin(), chosen.end());
  for (std::size_t w : report.cut_singletons) {
    if (std::binary_search(chosen.begin(), chosen.end(), w)) {
      report.cut_agreement.push_back(w);
    }
  }
  return report;
}

}  // namespace wlcull
