#include "wlcull/kmeans.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "wlcull/error.hpp"
#include "wlcull/rng.hpp"

namespace wlcull {

namespace {

// Farthest-point spreading: index list of k starting points.
std::vector<std::size_t> seed_centroids(const Matrix& scores, std::size_t k,
                                        std::uint64_t seed) {
  const std::size_t R = scores.rows();
  Rng rng(seed);
  std::vector<std::size_t> chosen;
  chosen.reserve(k);
  chosen.push_back(rng.uniform_index(R));

  std::vector<double> nearest(R);
  for (std::size_t i = 0; i < R; ++i) {
    nearest[i] = squared_distance(scores.row(i), scores.row(chosen[0]));
  }
  while (chosen.size() < k) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < R; ++i) {
      if (nearest[i] > nearest[best]) best = i;
    }
    chosen.push_back(best);
    for (std::size_t i = 0; i < R; ++i) {
      nearest[i] = std::min(nearest[i],
                            squared_distance(scores.row(i), scores.row(best)));
    }
  }
  return chosen;
}

void update_centroids(const Matrix& scores, const std::vector<std::size_t>& assign,
                      Matrix& centroids) {
  const std::size_t k = centroids.rows();
  const std::size_t dim = centroids.cols();
  std::vector<std::size_t> counts(k, 0);
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t j = 0; j < dim; ++j) centroids(c, j) = 0.0;
  }
  for (std::size_t i = 0; i < scores.rows(); ++i) {
    const std::size_t c = assign[i];
    ++counts[c];
    for (std::size_t j = 0; j < dim; ++j) centroids(c, j) += scores(i, j);
  }
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t j = 0; j < dim; ++j) {
      centroids(c, j) /= static_cast<double>(counts[c]);
    }
  }
}

}  // namespace

KMeansSolution lloyd(const Matrix& scores, std::size_t k, std::uint64_t seed) {
  const std::size_t R = scores.rows();
  const std::size_t dim = scores.cols();
  if (dim == 0) throw DataError("cannot cluster zero-dimensional points");
  if (k < 2 || k + 1 > R) {
    throw DataError("cluster count " + std::to_string(k) + " out of range [2, " +
                    std::to_string(R >= 1 ? R - 1 : 0) + "]");
  }

  KMeansSolution sol;
  sol.k = k;
  sol.seed = seed;
  sol.centroids = Matrix(k, dim);
  const auto starts = seed_centroids(scores, k, seed);
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t j = 0; j < dim; ++j) sol.centroids(c, j) = scores(starts[c], j);
  }

  constexpr std::size_t kMaxIterations = 300;
  std::vector<std::size_t> assign(R, SIZE_MAX);
  std::vector<std::size_t> prev(R, SIZE_MAX);
  for (std::size_t iter = 1; iter <= kMaxIterations; ++iter) {
    sol.iterations = iter;
    for (std::size_t i = 0; i < R; ++i) {
      std::size_t best = 0;
      double best_d = squared_distance(scores.row(i), sol.centroids.row(0));
      for (std::size_t c = 1; c < k; ++c) {
        const double d = squared_distance(scores.row(i), sol.centroids.row(c));
        if (d < best_d) {
          best_d = d;
          best = c;
        }
      }
      assign[i] = best;
    }

    std::vector<std::size_t> counts(k, 0);
    for (std::size_t c : assign) ++counts[c];
    for (std::size_t c = 0; c < k; ++c) {
      if (counts[c] > 0) continue;
      // Reseed the empty cluster with the point farthest from its own
      // centroid, skipping points whose departure would empty another.
      std::size_t pick = SIZE_MAX;
      double pick_d = -1.0;
      for (std::size_t i = 0; i < R; ++i) {
        if (counts[assign[i]] < 2) continue;
        const double d = squared_distance(scores.row(i), sol.centroids.row(assign[i]));
        if (d > pick_d) {
          pick_d = d;
          pick = i;
        }
      }
      --counts[assign[pick]];
      assign[pick] = c;
      counts[c] = 1;
    }

    if (assign == prev) break;
    prev = assign;
    update_centroids(scores, assign, sol.centroids);
  }

  sol.assignments = std::move(assign);
  update_centroids(scores, sol.assignments, sol.centroids);
  sol.inertia = 0.0;
  for (std::size_t i = 0; i < R; ++i) {
    sol.inertia +=
        squared_distance(scores.row(i), sol.centroids.row(sol.assignments[i]));
  }
  return sol;
}

double bic_score(KMeansSolution& sol, std::size_t R, std::size_t dim,
                 bool compat_param_count) {
  const std::size_t k = sol.k;
  if (R <= k) throw DataError("BIC needs more points than clusters");

  sol.sigma_sq = sol.inertia / static_cast<double>(R - k);
  sol.sigma_clamped = sol.sigma_sq < 1e-12;
  if (sol.sigma_clamped) sol.sigma_sq = 1e-12;

  std::vector<std::size_t> sizes(k, 0);
  for (std::size_t c : sol.assignments) ++sizes[c];

  const double log_sigma = std::log(sol.sigma_sq);
  const double log_R = std::log(static_cast<double>(R));
  const double log_2pi = std::log(2.0 * std::numbers::pi);
  double l = 0.0;
  for (std::size_t c = 0; c < k; ++c) {
    const double Ri = static_cast<double>(sizes[c]);
    l += -(Ri / 2.0) * log_2pi - (Ri * static_cast<double>(dim) / 2.0) * log_sigma -
         (Ri - static_cast<double>(k)) / 2.0 + Ri * std::log(Ri) - Ri * log_R;
  }
  sol.log_likelihood = l;

  const double p_j = compat_param_count
                         ? static_cast<double>((k - 1) + dim * k + 1)
                         : static_cast<double>(k + dim * k);
  sol.bic = l - (p_j / 2.0) * log_R;
  return sol.bic;
}

BicSweep sweep(const Matrix& scores, std::size_t k_min, std::size_t k_max,
               std::size_t restarts, std::uint64_t seed, bool compat_param_count) {
  const std::size_t R = scores.rows();
  if (k_min < 2 || k_max + 1 > R || k_min > k_max) {
    throw DataError("cluster range [" + std::to_string(k_min) + ", " +
                    std::to_string(k_max) + "] is empty or outside [2, " +
                    std::to_string(R >= 1 ? R - 1 : 0) + "]");
  }
  if (restarts < 1) throw DataError("need at least one restart");

  BicSweep out;
  for (std::size_t k = k_min; k <= k_max; ++k) {
    KCandidate cand;
    cand.k = k;
    for (std::size_t r = 0; r < restarts; ++r) {
      KMeansSolution sol = lloyd(scores, k, derive_seed(seed, k, r));
      cand.log.push_back({sol.seed, sol.inertia, sol.iterations});
      if (r == 0 || sol.inertia < cand.best.inertia) cand.best = std::move(sol);
    }
    cand.best.restarts_used = restarts;
    bic_score(cand.best, R, scores.cols(), compat_param_count);
    out.candidates.push_back(std::move(cand));
  }

  out.best_k = out.candidates.front().k;
  double best_bic = out.candidates.front().best.bic;
  for (const auto& cand : out.candidates) {
    if (cand.best.bic > best_bic) {
      best_bic = cand.best.bic;
      out.best_k = cand.k;
    }
  }
  return out;
}

}  // namespace wlcull
