#include "wlcull/reports.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "wlcull/csv.hpp"
#include "wlcull/error.hpp"
#include "wlcull/numformat.hpp"

namespace wlcull {

using ordered_json = nlohmann::ordered_json;

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  return hash;
}

std::string fnv1a64_hex(std::string_view text) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(text)));
  return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot create file: " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw DataError("cannot write file: " + path);
}

std::string pca_report_json(const PcaModel& model, const StandardizedMatrix& s,
                            double kaiser_threshold, bool kaiser_strict) {
  double total = 0.0;
  for (double lambda : model.eigenvalues) total += lambda;

  ordered_json j;
  j["workloads"] = ordered_json::array();
  for (const auto& w : s.workloads) j["workloads"].push_back(w.id);
  j["metrics"] = model.metric_names;
  j["dropped_columns"] = s.dropped_columns;
  j["eigenvalues"] = model.eigenvalues;
  ordered_json fractions = ordered_json::array();
  ordered_json cumulative = ordered_json::array();
  double running = 0.0;
  for (double lambda : model.eigenvalues) {
    running += lambda;
    fractions.push_back(lambda / total);
    cumulative.push_back(running / total);
  }
  j["variance_fraction"] = std::move(fractions);
  j["cumulative_variance_fraction"] = std::move(cumulative);
  j["kaiser_threshold"] = kaiser_threshold;
  j["kaiser_strict"] = kaiser_strict;
  j["retained"] = model.retained;
  j["retained_variance_fraction"] = model.retained_variance_fraction;

  ordered_json loadings = ordered_json::array();
  for (std::size_t i = 0; i < model.loadings.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < model.loadings.cols(); ++c) {
      row.push_back(model.loadings(i, c));
    }
    loadings.push_back(std::move(row));
  }
  j["loadings"] = std::move(loadings);

  ordered_json scores = ordered_json::array();
  for (std::size_t r = 0; r < model.scores.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < model.scores.cols(); ++c) {
      row.push_back(model.scores(r, c));
    }
    scores.push_back(std::move(row));
  }
  j["scores"] = std::move(scores);

  ordered_json renderings = ordered_json::array();
  for (const auto& pc : factor_loading_report(model)) renderings.push_back(pc.rendering);
  j["components"] = std::move(renderings);

  return j.dump(2) + "\n";
}

std::string loadings_csv(const PcaModel& model) {
  std::string out = "metric";
  for (std::size_t c = 0; c < model.retained; ++c) {
    out += ",PC" + std::to_string(c + 1);
  }
  out += '\n';
  for (std::size_t i = 0; i < model.metric_names.size(); ++i) {
    out += csv_escape(model.metric_names[i]);
    for (std::size_t c = 0; c < model.retained; ++c) {
      out += ',';
      out += format_double(model.loadings(i, c));
    }
    out += '\n';
  }
  return out;
}

std::string scatter_csv(const PcaModel& model,
                        const std::vector<WorkloadDescriptor>& workloads,
                        std::size_t pc_a, std::size_t pc_b) {
  if (pc_a >= model.retained || pc_b >= model.retained) {
    throw DataError("component index out of range; " +
                    std::to_string(model.retained) + " retained");
  }
  std::string out = "workload,stack,PC" + std::to_string(pc_a + 1) + ",PC" +
                    std::to_string(pc_b + 1) + "\n";
  for (std::size_t r = 0; r < workloads.size(); ++r) {
    out += csv_escape(workloads[r].id);
    out += ',';
    out += csv_escape(workloads[r].stack);
    out += ',';
    out += format_double(model.scores(r, pc_a));
    out += ',';
    out += format_double(model.scores(r, pc_b));
    out += '\n';
  }
  return out;
}

std::string dendrogram_json(const Dendrogram& dend) {
  ordered_json j;
  j["leaves"] = dend.leaves;
  ordered_json merges = ordered_json::array();
  for (const auto& m : dend.merges) {
    ordered_json rec;
    rec["left"] = m.left;
    rec["right"] = m.right;
    rec["height"] = m.height;
    rec["size"] = m.size;
    merges.push_back(std::move(rec));
  }
  j["merges"] = std::move(merges);
  return j.dump(2) + "\n";
}

namespace {

std::string dot_escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

// Heights carry full precision in the JSON report; the rendered tree rounds
// to 2 decimals for legibility.
std::string two_decimals(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", value);
  return buf;
}

}  // namespace

std::string dendrogram_dot(const Dendrogram& dend,
                           const std::vector<WorkloadDescriptor>& workloads) {
  const std::size_t R = dend.leaves.size();
  std::string out = "digraph dendrogram {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < R; ++i) {
    std::string label = dend.leaves[i];
    if (i < workloads.size() && !workloads[i].stack.empty()) {
      label += "\\n" + workloads[i].stack;
    }
    out += "  leaf" + std::to_string(i) + " [label=\"" + dot_escape(label) + "\"];\n";
  }
  for (std::size_t i = 0; i < dend.merges.size(); ++i) {
    out += "  merge" + std::to_string(i) + " [shape=point];\n";
  }
  auto node_name = [R](std::size_t ref) {
    return ref < R ? "leaf" + std::to_string(ref) : "merge" + std::to_string(ref - R);
  };
  for (std::size_t i = 0; i < dend.merges.size(); ++i) {
    const auto& m = dend.merges[i];
    const std::string label = two_decimals(m.height);
    out += "  " + node_name(m.left) + " -> merge" + std::to_string(i) +
           " [label=\"" + label + "\"];\n";
    out += "  " + node_name(m.right) + " -> merge" + std::to_string(i) +
           " [label=\"" + label + "\"];\n";
  }
  out += "}\n";
  return out;
}

std::string sweep_report_json(const BicSweep& sweep,
                              const std::vector<std::string>& workload_ids) {
  ordered_json j;
  ordered_json candidates = ordered_json::array();
  const KMeansSolution* best = nullptr;
  for (const auto& cand : sweep.candidates) {
    ordered_json rec;
    rec["k"] = cand.k;
    rec["bic"] = cand.best.bic;
    rec["inertia"] = cand.best.inertia;
    rec["sigma_sq"] = cand.best.sigma_sq;
    rec["log_likelihood"] = cand.best.log_likelihood;
    rec["sigma_clamped"] = cand.best.sigma_clamped;
    rec["iterations"] = cand.best.iterations;
    rec["seed"] = cand.best.seed;
    ordered_json restarts = ordered_json::array();
    for (const auto& r : cand.log) {
      ordered_json rr;
      rr["seed"] = r.seed;
      rr["inertia"] = r.inertia;
      rr["iterations"] = r.iterations;
      restarts.push_back(std::move(rr));
    }
    rec["restarts"] = std::move(restarts);
    candidates.push_back(std::move(rec));
    if (cand.k == sweep.best_k) best = &cand.best;
  }
  j["candidates"] = std::move(candidates);
  j["best_k"] = sweep.best_k;

  ordered_json clusters = ordered_json::array();
  if (best != nullptr) {
    std::vector<std::vector<std::size_t>> members(best->k);
    for (std::size_t i = 0; i < best->assignments.size(); ++i) {
      members[best->assignments[i]].push_back(i);
    }
    for (std::size_t c = 0; c < members.size(); ++c) {
      ordered_json rec;
      rec["cluster"] = c;
      rec["count"] = members[c].size();
      ordered_json ids = ordered_json::array();
      for (std::size_t w : members[c]) ids.push_back(workload_ids[w]);
      rec["workloads"] = std::move(ids);
      clusters.push_back(std::move(rec));
    }
  }
  j["clusters"] = std::move(clusters);
  return j.dump(2) + "\n";
}

std::string subset_report_json(const SubsetReport& report,
                               const std::vector<std::string>& workload_ids) {
  ordered_json j;
  j["strategy"] = to_string(report.strategy);
  ordered_json reps = ordered_json::array();
  for (const auto& rep : report.representatives) {
    ordered_json rec;
    rec["workload"] = workload_ids[rep.workload];
    rec["cluster"] = rep.cluster;
    rec["cluster_size"] = rep.cluster_size;
    reps.push_back(std::move(rec));
  }
  j["representatives"] = std::move(reps);
  j["max_linkage_distance"] = report.max_linkage_distance;
  ordered_json singles = ordered_json::array();
  for (std::size_t w : report.cut_singletons) singles.push_back(workload_ids[w]);
  j["dendrogram_cut_singletons"] = std::move(singles);
  ordered_json agree = ordered_json::array();
  for (std::size_t w : report.cut_agreement) agree.push_back(workload_ids[w]);
  j["dendrogram_cut_agreement"] = std::move(agree);
  return j.dump(2) + "\n";
}

std::string kiviat_csv(const PcaModel& model,
                       const std::vector<Representative>& representatives,
                       const std::vector<WorkloadDescriptor>& workloads) {
  const std::size_t k = model.retained;
  std::vector<double> lo(k), hi(k);
  for (std::size_t c = 0; c < k; ++c) {
    lo[c] = hi[c] = model.scores(representatives.front().workload, c);
    for (const auto& rep : representatives) {
      const double v = model.scores(rep.workload, c);
      lo[c] = std::min(lo[c], v);
      hi[c] = std::max(hi[c], v);
    }
  }
  std::string out = "workload,cluster";
  for (std::size_t c = 0; c < k; ++c) out += ",PC" + std::to_string(c + 1);
  out += '\n';
  for (const auto& rep : representatives) {
    out += csv_escape(workloads[rep.workload].id);
    out += ',';
    out += std::to_string(rep.cluster);
    for (std::size_t c = 0; c < k; ++c) {
      const double v = model.scores(rep.workload, c);
      const double scaled = hi[c] > lo[c] ? (v - lo[c]) / (hi[c] - lo[c]) : 0.5;
      out += ',';
      out += format_double(scaled);
    }
    out += '\n';
  }
  return out;
}

}  // namespace wlcull
