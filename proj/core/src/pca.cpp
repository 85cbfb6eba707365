#include "wlcull/pca.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "wlcull/error.hpp"
#include "wlcull/numformat.hpp"

namespace wlcull {

namespace {

double off_diagonal_norm(const Matrix& a) {
  double ss = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j) ss += a(i, j) * a(i, j);
    }
  }
  return std::sqrt(ss);
}

// Row index of the largest-magnitude entry in column j; ties take the lowest
// index. This anchors both the sign convention and the tie order below.
std::size_t argmax_abs(const Matrix& vectors, std::size_t j) {
  std::size_t best = 0;
  double best_abs = std::abs(vectors(0, j));
  for (std::size_t i = 1; i < vectors.rows(); ++i) {
    const double a = std::abs(vectors(i, j));
    if (a > best_abs) {
      best_abs = a;
      best = i;
    }
  }
  return best;
}

}  // namespace

EigenDecomposition symmetric_eigen(const Matrix& sym) {
  const std::size_t n = sym.rows();
  if (n == 0 || sym.cols() != n) throw DataError("eigensolver needs a square matrix");

  Matrix a = sym;
  Matrix v(n, n);
  for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;

  constexpr double kTolerance = 1e-12;
  constexpr int kMaxSweeps = 100;
  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) < kTolerance) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
        // tan of the rotation angle; the smaller root keeps |t| <= 1 for
        // stability. tau = +-inf degrades gracefully to t = 0.
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(tau * tau + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // a <- J^T a J applied as full column then full row updates.
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  if (!converged && off_diagonal_norm(a) >= kTolerance) {
    throw NumericError("eigensolver did not converge within 100 sweeps");
  }

  // Fix each eigenvector's sign so its largest-|entry| is positive.
  std::vector<std::size_t> anchor(n);
  for (std::size_t j = 0; j < n; ++j) {
    anchor[j] = argmax_abs(v, j);
    if (v(anchor[j], j) < 0.0) {
      for (std::size_t i = 0; i < n; ++i) v(i, j) = -v(i, j);
    }
  }

  std::vector<double> lambda(n);
  for (std::size_t i = 0; i < n; ++i) lambda[i] = a(i, i);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return lambda[x] > lambda[y];
  });
  // Near-equal eigenvalues form runs; order each run by the anchor row of its
  // eigenvector so degenerate spectra still come out deterministically.
  std::size_t run_start = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    const bool run_ends =
        i == n || lambda[order[run_start]] - lambda[order[i]] >
                      1e-9 * std::max(1.0, std::abs(lambda[order[run_start]]));
    if (run_ends) {
      std::stable_sort(order.begin() + run_start, order.begin() + i,
                       [&](std::size_t x, std::size_t y) {
                         return anchor[x] < anchor[y];
                       });
      run_start = i;
    }
  }

  EigenDecomposition out;
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = lambda[order[j]];
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
  }
  return out;
}

PcaModel pca(const StandardizedMatrix& s) {
  const std::size_t d = s.metric_names.size();
  const std::size_t R = s.values.rows();
  if (d < 2) throw DataError("need at least 2 non-constant metrics for decomposition");

  // Correlation of the original columns = covariance of the z-scores.
  Matrix corr(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      double sum = 0.0;
      for (std::size_t r = 0; r < R; ++r) sum += s.values(r, i) * s.values(r, j);
      const double c = sum / static_cast<double>(R - 1);
      corr(i, j) = c;
      corr(j, i) = c;
    }
  }

  EigenDecomposition eig = symmetric_eigen(corr);

  PcaModel model;
  model.metric_names = s.metric_names;
  model.eigenvalues = std::move(eig.values);
  model.loadings = std::move(eig.vectors);
  model.scores = multiply(s.values, model.loadings);
  model.retained = d;
  model.retained_variance_fraction = 1.0;
  return model;
}

PcaModel kaiser_select(PcaModel model, double threshold, bool strict) {
  std::size_t kept = 0;
  for (double lambda : model.eigenvalues) {
    if (strict ? lambda > threshold : lambda >= threshold) ++kept;
  }
  if (kept == 0) {
    throw DataError("no principal components retained at threshold " +
                    format_double(threshold) + (strict ? " (strict)" : ""));
  }
  double total = 0.0;
  for (double lambda : model.eigenvalues) total += lambda;
  double head = 0.0;
  for (std::size_t i = 0; i < kept; ++i) head += model.eigenvalues[i];
  model.retained = kept;
  model.retained_variance_fraction = head / total;
  return model;
}

Matrix retained_scores(const PcaModel& model) {
  Matrix out(model.scores.rows(), model.retained);
  for (std::size_t r = 0; r < out.rows(); ++r) {
    for (std::size_t c = 0; c < out.cols(); ++c) out(r, c) = model.scores(r, c);
  }
  return out;
}

std::vector<PcLoadings> factor_loading_report(const PcaModel& model) {
  std::vector<PcLoadings> report;
  report.reserve(model.retained);
  for (std::size_t j = 0; j < model.retained; ++j) {
    PcLoadings pc;
    pc.pc = j + 1;
    for (std::size_t i = 0; i < model.metric_names.size(); ++i) {
      pc.entries.push_back({model.metric_names[i], model.loadings(i, j)});
    }
    std::stable_sort(pc.entries.begin(), pc.entries.end(),
                     [](const LoadingEntry& a, const LoadingEntry& b) {
                       return std::abs(a.weight) > std::abs(b.weight);
                     });
    std::string text = "PC" + std::to_string(pc.pc) + " = ";
    for (std::size_t i = 0; i < pc.entries.size(); ++i) {
      const double w = pc.entries[i].weight;
      if (i == 0) {
        if (w < 0.0) text += '-';
      } else {
        text += w < 0.0 ? " - " : " + ";
      }
      text += format_double(std::abs(w), 4);
      text += '*';
      text += pc.entries[i].metric;
    }
    pc.rendering = std::move(text);
    report.push_back(std::move(pc));
  }
  return report;
}

}  // namespace wlcull
