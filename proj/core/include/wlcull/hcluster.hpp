#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "wlcull/matrix.hpp"

namespace wlcull {

// One agglomeration step. Node refs: 0..R-1 are leaves, R+i is the cluster
// produced by merge i.
struct Merge {
  std::size_t left;
  std::size_t right;
  double height;     // single-linkage distance of the merged pair
  std::size_t size;  // members after merging
};

struct Dendrogram {
  std::vector<std::string> leaves;  // workload ids, input order
  std::vector<Merge> merges;        // R-1 records, heights non-decreasing
};

// Euclidean distances between score rows; zero diagonal, symmetric.
Matrix pairwise_distances(const Matrix& scores);

// Agglomerate by minimal inter-cluster minimum pairwise distance. Ties pick
// the pair whose (smaller cluster-min-leaf, larger cluster-min-leaf) key is
// lexicographically least. Each merge's left child is the cluster holding the
// smaller min leaf.
Dendrogram single_linkage(const Matrix& dist, const std::vector<std::string>& leaf_ids);

// Partition of leaf indices: maximal subtrees whose merges all have height
// <= h. Clusters sorted by first member, members ascending.
std::vector<std::vector<std::size_t>> cut_at_height(const Dendrogram& dend, double h);

struct CutResult {
  std::vector<std::vector<std::size_t>> clusters;
  // Cutting at any height strictly inside (lower, upper) reproduces these
  // clusters; the bounds are the last applied and first undone merge heights
  // (0 and +infinity at the extremes).
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();
};

// Undo the last k-1 merges. Throws DataError when k is outside [1, R].
CutResult cut_to_k(const Dendrogram& dend, std::size_t k);

// Height of the lowest merge joining the two leaves. Throws DataError on an
// out-of-range leaf. cophenetic(a, a) = 0.
double cophenetic_height(const Dendrogram& dend, std::size_t leaf_a, std::size_t leaf_b);

}  // namespace wlcull
