#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wlcull {

enum class AggregateMode { EventsFirst, MetricsFirst };

// How far run_pipeline goes. Each later stage includes everything before it.
enum class Stage { Ingest, Decompose, Hcluster, Kmeans, Subset };

struct PipelineConfig {
  // Exactly one of events_path / matrix_path.
  std::string events_path;
  std::string matrix_path;
  std::string catalog_path;  // empty: the bundled catalog
  // Events ingestion: average raw events across nodes then derive metrics,
  // or derive per node and average the finished metrics.
  AggregateMode aggregate_mode = AggregateMode::EventsFirst;

  double kaiser_threshold = 1.0;
  bool kaiser_strict = false;

  std::size_t k_min = 2;
  std::size_t k_max = 0;  // 0: min(15, R-1)
  std::size_t restarts = 10;
  std::uint64_t seed = 42;
  bool pj_compat = false;  // alternative BIC parameter-count reading

  // 1-based component indices for the scatter payload.
  std::size_t scatter_pc_a = 1;
  std::size_t scatter_pc_b = 2;

  std::string out_dir = ".";
};

struct PipelineResult {
  std::vector<std::string> artifacts;  // file names, relative to out_dir
  std::size_t workloads = 0;
  std::size_t metrics = 0;
  std::size_t retained_pcs = 0;
  std::size_t best_k = 0;
};

// Runs ingest -> standardize -> pca -> kaiser -> hcluster -> kmeans sweep ->
// subset (both strategies), stopping after `through`, writing each stage's
// artifacts into cfg.out_dir plus a manifest recording the config and an
// FNV-1a checksum per artifact. Identical config (including seed) gives
// byte-identical artifacts. Errors are rethrown with the failing stage's
// name; artifacts written by completed stages stay on disk.
PipelineResult run_pipeline(const PipelineConfig& cfg, Stage through = Stage::Subset);

}  // namespace wlcull
