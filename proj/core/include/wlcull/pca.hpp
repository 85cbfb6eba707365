#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wlcull/matrix.hpp"
#include "wlcull/standardize.hpp"

namespace wlcull {

// Eigendecomposition of a symmetric matrix, eigenvalues descending, column j
// of `vectors` the unit eigenvector of values[j]. Sign convention: each
// vector's largest-magnitude entry is positive. Near-equal eigenvalues are
// ordered by the row index of that entry, so the result is deterministic
// even for degenerate spectra.
struct EigenDecomposition {
  std::vector<double> values;
  Matrix vectors;
};

// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
// 1e-12, capped at 100 sweeps (NumericError beyond that). Input must be
// symmetric; only the upper triangle is read.
EigenDecomposition symmetric_eigen(const Matrix& sym);

struct PcaModel {
  std::vector<std::string> metric_names;  // the d' standardized columns
  std::vector<double> eigenvalues;        // d', descending
  Matrix loadings;                        // d' x d', column j = eigenvector of PC j
  Matrix scores;                          // R x d', standardized data projected
  std::size_t retained = 0;               // kept PCs; pca() keeps all
  double retained_variance_fraction = 1.0;
};

// Correlation-matrix PCA of the z-scored data (covariance with divisor R-1).
// Requires at least 2 retained columns.
PcaModel pca(const StandardizedMatrix& s);

// Kaiser's criterion: keep eigenvalues >= threshold (or > threshold when
// strict). Throws DataError if nothing survives.
PcaModel kaiser_select(PcaModel model, double threshold = 1.0, bool strict = false);

// The score matrix truncated to the retained PCs, R x retained.
Matrix retained_scores(const PcaModel& model);

struct LoadingEntry {
  std::string metric;
  double weight;
};

struct PcLoadings {
  std::size_t pc;                     // 1-based
  std::vector<LoadingEntry> entries;  // sorted by |weight| descending
  std::string rendering;              // e.g. "PC1 = 0.9*A - 0.1*B"
};

// One row per retained PC.
std::vector<PcLoadings> factor_loading_report(const PcaModel& model);

}  // namespace wlcull
