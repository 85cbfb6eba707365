#include "wlcull/hcluster.hpp"

#include <algorithm>

#include "wlcull/error.hpp"

namespace wlcull {

Matrix pairwise_distances(const Matrix& scores) {
  const std::size_t R = scores.rows();
  if (R < 2) throw DataError("need at least 2 rows for pairwise distances");
  Matrix dist(R, R);
  for (std::size_t i = 0; i < R; ++i) {
    for (std::size_t j = i + 1; j < R; ++j) {
      const double d = euclidean_distance(scores.row(i), scores.row(j));
      dist(i, j) = d;
      dist(j, i) = d;
    }
  }
  return dist;
}

Dendrogram single_linkage(const Matrix& dist, const std::vector<std::string>& leaf_ids) {
  const std::size_t R = dist.rows();
  // A single leaf is a valid degenerate tree (no merges); only empty or
  // non-square inputs are malformed.
  if (R == 0 || dist.cols() != R) throw DataError("invalid distance matrix");
  if (leaf_ids.size() != R) throw DataError("leaf id count does not match distance matrix");

  // Working state per cluster slot (initially one slot per leaf). A merge
  // keeps the slot whose min leaf is smaller, so slot index == min leaf.
  Matrix w = dist;
  std::vector<bool> active(R, true);
  std::vector<std::size_t> node_ref(R);   // current dendrogram ref of the slot
  std::vector<std::size_t> size(R, 1);
  for (std::size_t i = 0; i < R; ++i) node_ref[i] = i;

  Dendrogram dend;
  dend.leaves = leaf_ids;
  dend.merges.reserve(R - 1);

  for (std::size_t step = 0; step + 1 < R; ++step) {
    std::size_t best_i = 0, best_j = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < R; ++i) {
      if (!active[i]) continue;
      for (std::size_t j = i + 1; j < R; ++j) {
        if (!active[j]) continue;
        // Scanning i < j in ascending slot order means the first minimum seen
        // is already the tie-break winner: slots are min leaves, so (i, j) is
        // the (smaller min leaf, larger min leaf) key.
        if (w(i, j) < best) {
          best = w(i, j);
          best_i = i;
          best_j = j;
        }
      }
    }

    dend.merges.push_back({node_ref[best_i], node_ref[best_j], best,
                           size[best_i] + size[best_j]});
    for (std::size_t k = 0; k < R; ++k) {
      if (!active[k] || k == best_i || k == best_j) continue;
      const double m = std::min(w(best_i, k), w(best_j, k));
      w(best_i, k) = m;
      w(k, best_i) = m;
    }
    active[best_j] = false;
    size[best_i] += size[best_j];
    node_ref[best_i] = R + step;
  }
  return dend;
}

namespace {

// Applies merges while keep(merge) holds and returns the resulting groups,
// each sorted ascending, groups ordered by first member.
template <typename Keep>
std::vector<std::vector<std::size_t>> apply_merges(const Dendrogram& dend, Keep keep) {
  const std::size_t R = dend.leaves.size();
  std::vector<std::vector<std::size_t>> groups(R);
  std::vector<std::size_t> group_of(R + dend.merges.size(), SIZE_MAX);
  for (std::size_t i = 0; i < R; ++i) {
    groups[i] = {i};
    group_of[i] = i;
  }
  for (std::size_t i = 0; i < dend.merges.size(); ++i) {
    if (!keep(dend.merges[i])) break;  // heights are monotone
    const std::size_t gl = group_of[dend.merges[i].left];
    const std::size_t gr = group_of[dend.merges[i].right];
    for (std::size_t leaf : groups[gr]) {
      groups[gl].push_back(leaf);
      group_of[leaf] = gl;
    }
    groups[gr].clear();
    group_of[R + i] = gl;
  }
  std::vector<std::vector<std::size_t>> out;
  for (auto& g : groups) {
    if (g.empty()) continue;
    std::sort(g.begin(), g.end());
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

}  // namespace

std::vector<std::vector<std::size_t>> cut_at_height(const Dendrogram& dend, double h) {
  return apply_merges(dend, [h](const Merge& m) { return m.height <= h; });
}

CutResult cut_to_k(const Dendrogram& dend, std::size_t k) {
  const std::size_t R = dend.leaves.size();
  if (k < 1 || k > R) {
    throw DataError("cluster count " + std::to_string(k) + " out of range [1, " +
                    std::to_string(R) + "]");
  }
  const std::size_t applied = R - k;
  std::size_t taken = 0;
  CutResult out;
  out.clusters = apply_merges(dend, [&](const Merge&) { return taken++ < applied; });
  out.lower = applied == 0 ? 0.0 : dend.merges[applied - 1].height;
  out.upper = applied == dend.merges.size()
                  ? std::numeric_limits<double>::infinity()
                  : dend.merges[applied].height;
  return out;
}

double cophenetic_height(const Dendrogram& dend, std::size_t leaf_a, std::size_t leaf_b) {
  const std::size_t R = dend.leaves.size();
  if (leaf_a >= R || leaf_b >= R) throw DataError("leaf index out of range");
  if (leaf_a == leaf_b) return 0.0;

  const std::size_t total = R + dend.merges.size();
  std::vector<std::size_t> parent(total, SIZE_MAX);
  for (std::size_t i = 0; i < dend.merges.size(); ++i) {
    parent[dend.merges[i].left] = R + i;
    parent[dend.merges[i].right] = R + i;
  }
  std::vector<bool> on_path(total, false);
  for (std::size_t n = leaf_a; n != SIZE_MAX; n = parent[n]) on_path[n] = true;
  for (std::size_t n = leaf_b; n != SIZE_MAX; n = parent[n]) {
    if (on_path[n]) return dend.merges[n - R].height;
  }
  throw DataError("leaves share no ancestor; dendrogram is malformed");
}

}  // namespace wlcull
