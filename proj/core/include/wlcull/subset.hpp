#pragma once

#include <cstddef>
#include <vector>

#include "wlcull/hcluster.hpp"
#include "wlcull/matrix.hpp"

namespace wlcull {

// Clusters as lists of workload indices. Cluster and member order are
// whatever the producer chose (K-means label order, cut order); selection
// results depend only on membership.
using Partition = std::vector<std::vector<std::size_t>>;

Partition partition_from_assignments(const std::vector<std::size_t>& assignments,
                                     std::size_t k);

struct Representative {
  std::size_t workload;      // row index into the score matrix
  std::size_t cluster;       // position within the partition
  std::size_t cluster_size;  // members it stands for
};

// Per cluster, the member closest to the cluster centroid (the member mean).
// Ties take the lowest workload index.
std::vector<Representative> nearest_to_center(const Matrix& scores,
                                              const Partition& partition);

// Per cluster, the member farthest from the cluster centroid; the boundary
// pick. Ties take the lowest workload index.
std::vector<Representative> farthest_from_center(const Matrix& scores,
                                                 const Partition& partition);

// Maximum cophenetic height over all pairs of the chosen workloads; 0 for
// fewer than two. Throws DataError when an index is not a dendrogram leaf.
double max_linkage_distance(const std::vector<std::size_t>& chosen,
                            const Dendrogram& dend);

// The singleton clusters of cut_to_k(dend, k): workloads the dendrogram
// itself isolates at that granularity. Ascending order.
std::vector<std::size_t> dendrogram_cross_check(const Dendrogram& dend, std::size_t k);

enum class Strategy { NearestCenter, FarthestCenter };
const char* to_string(Strategy strategy);

struct SubsetReport {
  Strategy strategy;
  std::vector<Representative> representatives;  // one per cluster
  double max_linkage_distance = 0.0;
  std::vector<std::size_t> cut_singletons;      // dendrogram_cross_check result
  std::vector<std::size_t> cut_agreement;       // representatives the cut also isolates
};

// Selects per the strategy, scores the pick with the maximal cophenetic
// height, and cross-checks against the k-cluster dendrogram cut.
SubsetReport build_subset_report(const Matrix& scores, const Partition& partition,
                                 const Dendrogram& dend, Strategy strategy);

}  // namespace wlcull
