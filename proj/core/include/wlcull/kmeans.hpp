#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "wlcull/matrix.hpp"

namespace wlcull {

struct KMeansSolution {
  std::size_t k = 0;
  std::vector<std::size_t> assignments;  // R labels in [0, k), every cluster non-empty
  Matrix centroids;                      // k x dim, row i = mean of cluster i
  double inertia = 0.0;                  // sum of squared member-to-centroid distances
  double sigma_sq = 0.0;                 // inertia / (R - k), clamped at 1e-12
  double log_likelihood = 0.0;
  double bic = 0.0;
  bool sigma_clamped = false;
  std::size_t iterations = 0;
  std::size_t restarts_used = 1;
  std::uint64_t seed = 0;
};

// Lloyd iterations from deterministic farthest-point seeding: the first
// centroid is a seeded uniform pick, each next is the point with maximal
// distance to its nearest chosen centroid (ties to the lowest index).
// Assignment and update alternate until assignments stop changing or 300
// iterations pass; a cluster that empties is reseeded with the point farthest
// from its current centroid. Requires 2 <= k <= R-1 and dim >= 1.
KMeansSolution lloyd(const Matrix& scores, std::size_t k, std::uint64_t seed);

// Fills sigma_sq, log_likelihood, and bic on the solution and returns bic.
// sigma_sq = inertia / (R - k); values below 1e-12 are clamped and flagged.
// The parameter count is k + dim*k, or (k-1) + dim*k + 1 when compat is set
// (the two are equal; the flag exists so the alternative reading stays
// selectable). Natural logarithms throughout. Requires R > sol.k.
double bic_score(KMeansSolution& sol, std::size_t R, std::size_t dim,
                 bool compat_param_count = false);

struct RestartInfo {
  std::uint64_t seed;
  double inertia;
  std::size_t iterations;
};

struct KCandidate {
  std::size_t k;
  KMeansSolution best;            // minimal inertia across restarts
  std::vector<RestartInfo> log;   // one entry per restart, in run order
};

struct BicSweep {
  std::vector<KCandidate> candidates;  // ascending k
  std::size_t best_k = 0;              // argmax bic, ties to smallest k
};

// Runs `restarts` seeded lloyd() runs per k in [k_min, k_max], keeps each
// k's minimal-inertia solution, scores it, and picks best_k. Per-run seeds
// derive from (seed, k, restart), so results are independent of execution
// order. Requires 2 <= k_min <= k_max <= R-1 and restarts >= 1.
BicSweep sweep(const Matrix& scores, std::size_t k_min, std::size_t k_max,
               std::size_t restarts, std::uint64_t seed,
               bool compat_param_count = false);

}  // namespace wlcull
