#include "wlcull/pipeline.hpp"

#include <filesystem>
#include <set>

#include "json.hpp"
#include "wlcull/catalog.hpp"
#include "wlcull/error.hpp"
#include "wlcull/hcluster.hpp"
#include "wlcull/kmeans.hpp"
#include "wlcull/metrics.hpp"
#include "wlcull/pca.hpp"
#include "wlcull/reports.hpp"
#include "wlcull/standardize.hpp"
#include "wlcull/subset.hpp"
#include "wlcull/version.hpp"

namespace wlcull {

namespace {

using ordered_json = nlohmann::ordered_json;

// Rethrows any stage failure with the stage name prefixed, preserving the
// error class so the CLI exit-code mapping survives.
template <typename F>
auto run_stage(const char* name, F&& f) {
  try {
    return f();
  } catch (const NumericError& e) {
    throw NumericError(std::string(name) + ": " + e.what());
  } catch (const DataError& e) {
    throw DataError(std::string(name) + ": " + e.what());
  } catch (const Error& e) {
    throw Error(std::string(name) + ": " + e.what());
  } catch (const std::exception& e) {
    throw Error(std::string(name) + ": " + e.what());
  }
}

// Writes artifacts as they are produced (completed stages keep their files
// even if a later stage fails) and remembers checksums for the manifest.
class ArtifactSink {
public:
  explicit ArtifactSink(std::string dir) : dir_(std::move(dir)) {}

  void emit(const std::string& name, const std::string& content) {
    write_text_file((std::filesystem::path(dir_) / name).string(), content);
    ordered_json rec;
    rec["name"] = name;
    rec["bytes"] = content.size();
    rec["fnv1a64"] = fnv1a64_hex(content);
    records_.push_back(std::move(rec));
    names_.push_back(name);
  }

  const std::vector<std::string>& names() const { return names_; }
  ordered_json records() const { return records_; }

private:
  std::string dir_;
  std::vector<std::string> names_;
  ordered_json records_ = ordered_json::array();
};

ordered_json config_echo(const PipelineConfig& cfg, std::size_t effective_k_max) {
  // out_dir is deliberately not echoed: the manifest documents what was
  // computed, and the same inputs must reproduce the same bytes no matter
  // where they land.
  ordered_json j;
  j["events"] = cfg.events_path;
  j["matrix"] = cfg.matrix_path;
  j["catalog"] = cfg.catalog_path.empty() ? "builtin" : cfg.catalog_path;
  j["aggregate_mode"] = cfg.aggregate_mode == AggregateMode::EventsFirst
                            ? "events-first"
                            : "metrics-first";
  j["kaiser_threshold"] = cfg.kaiser_threshold;
  j["kaiser_strict"] = cfg.kaiser_strict;
  j["k_min"] = cfg.k_min;
  j["k_max"] = effective_k_max;
  j["restarts"] = cfg.restarts;
  j["seed"] = cfg.seed;
  j["pj_compat"] = cfg.pj_compat;
  j["scatter_pcs"] = {cfg.scatter_pc_a, cfg.scatter_pc_b};
  return j;
}

}  // namespace

PipelineResult run_pipeline(const PipelineConfig& cfg, Stage through) {
  PipelineResult result;

  MetricMatrix matrix = run_stage("ingest", [&] {
    if (cfg.events_path.empty() == cfg.matrix_path.empty()) {
      throw DataError("exactly one of events input and matrix input is required");
    }
    std::filesystem::create_directories(cfg.out_dir);
    const std::vector<MetricDescriptor>& catalog =
        cfg.catalog_path.empty() ? builtin_catalog()
                                 : read_catalog_csv(cfg.catalog_path);
    MetricMatrix m;
    if (!cfg.events_path.empty()) {
      const auto samples = read_events_csv(cfg.events_path);
      std::vector<WorkloadDescriptor> workloads;  // first-appearance order
      std::set<std::string> seen;
      for (const auto& s : samples) {
        if (seen.insert(s.workload_id).second) {
          workloads.push_back({s.workload_id, "", "", ""});
        }
      }
      m = cfg.aggregate_mode == AggregateMode::EventsFirst
              ? build_matrix(catalog, workloads, aggregate_nodes(samples))
              : build_matrix_metrics_first(catalog, workloads, samples);
    } else {
      m = read_matrix_csv(cfg.matrix_path);
      annotate_from_catalog(m, catalog);
    }
    return m;
  });

  ArtifactSink sink(cfg.out_dir);
  const std::size_t R = matrix.workloads.size();
  result.workloads = R;
  result.metrics = matrix.metrics.size();
  const std::size_t effective_k_max =
      std::min(cfg.k_max == 0 ? std::size_t{15} : cfg.k_max, R >= 1 ? R - 1 : 0);

  auto finish = [&](Stage reached) {
    ordered_json manifest;
    manifest["tool"] = "wlcull";
    manifest["version"] = kVersion;
    manifest["config"] = config_echo(cfg, effective_k_max);
    manifest["workloads"] = result.workloads;
    manifest["metrics"] = result.metrics;
    if (reached >= Stage::Decompose) manifest["retained_pcs"] = result.retained_pcs;
    if (reached >= Stage::Kmeans) manifest["best_k"] = result.best_k;
    manifest["artifacts"] = sink.records();
    run_stage("report", [&] {
      write_text_file(
          (std::filesystem::path(cfg.out_dir) / "manifest.json").string(),
          manifest.dump(2) + "\n");
      return 0;
    });
    result.artifacts = sink.names();
    result.artifacts.push_back("manifest.json");
    return result;
  };

  run_stage("ingest", [&] {
    sink.emit("matrix.csv", matrix_csv_string(matrix));
    return 0;
  });
  if (through == Stage::Ingest) return finish(Stage::Ingest);

  StandardizedMatrix standardized =
      run_stage("standardize", [&] { return standardize(matrix); });
  PcaModel model = run_stage("pca", [&] { return pca(standardized); });
  model = run_stage("kaiser", [&] {
    return kaiser_select(std::move(model), cfg.kaiser_threshold, cfg.kaiser_strict);
  });
  result.retained_pcs = model.retained;
  run_stage("pca", [&] {
    sink.emit("pca.json", pca_report_json(model, standardized, cfg.kaiser_threshold,
                                          cfg.kaiser_strict));
    sink.emit("loadings.csv", loadings_csv(model));
    if (cfg.scatter_pc_a == 0 || cfg.scatter_pc_b == 0) {
      throw DataError("scatter component indices are 1-based");
    }
    // Skipped, not failed, when fewer components were retained than asked.
    if (cfg.scatter_pc_a <= model.retained && cfg.scatter_pc_b <= model.retained) {
      sink.emit("scatter.csv", scatter_csv(model, matrix.workloads,
                                           cfg.scatter_pc_a - 1, cfg.scatter_pc_b - 1));
    }
    return 0;
  });
  if (through == Stage::Decompose) return finish(Stage::Decompose);

  const Matrix scores = retained_scores(model);
  std::vector<std::string> ids;
  ids.reserve(R);
  for (const auto& w : matrix.workloads) ids.push_back(w.id);

  Dendrogram dend = run_stage("hcluster", [&] {
    Dendrogram d = single_linkage(pairwise_distances(scores), ids);
    sink.emit("dendrogram.json", dendrogram_json(d));
    sink.emit("dendrogram.dot", dendrogram_dot(d, matrix.workloads));
    return d;
  });
  if (through == Stage::Hcluster) return finish(Stage::Hcluster);

  BicSweep bic_sweep = run_stage("kmeans", [&] {
    if (cfg.k_min < 2 || cfg.k_min > effective_k_max) {
      throw DataError("cluster range [" + std::to_string(cfg.k_min) + ", " +
                      std::to_string(effective_k_max) + "] is empty; " +
                      std::to_string(R) + " workloads allow [2, " +
                      std::to_string(R - 1) + "]");
    }
    BicSweep s = sweep(scores, cfg.k_min, effective_k_max, cfg.restarts, cfg.seed,
                       cfg.pj_compat);
    sink.emit("kmeans.json", sweep_report_json(s, ids));
    return s;
  });
  result.best_k = bic_sweep.best_k;
  if (through == Stage::Kmeans) return finish(Stage::Kmeans);

  run_stage("subset", [&] {
    const KMeansSolution* best = nullptr;
    for (const auto& cand : bic_sweep.candidates) {
      if (cand.k == bic_sweep.best_k) best = &cand.best;
    }
    const Partition partition =
        partition_from_assignments(best->assignments, best->k);
    for (Strategy strategy : {Strategy::NearestCenter, Strategy::FarthestCenter}) {
      const SubsetReport report =
          build_subset_report(scores, partition, dend, strategy);
      const std::string tag =
          strategy == Strategy::NearestCenter ? "nearest" : "farthest";
      sink.emit("subset_" + tag + ".json", subset_report_json(report, ids));
      sink.emit("kiviat_" + tag + ".csv",
                kiviat_csv(model, report.representatives, matrix.workloads));
    }
    return 0;
  });
  return finish(Stage::Subset);
}

}  // namespace wlcull
