#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wlcull/catalog.hpp"
#include "wlcull/csv.hpp"
#include "wlcull/demo.hpp"
#include "wlcull/error.hpp"
#include "wlcull/metrics.hpp"
#include "wlcull/pipeline.hpp"
#include "wlcull/version.hpp"

namespace {

// Pipeline-stage subcommands share one config; only the parsed subcommand
// writes into it.
void add_pipeline_options(CLI::App* sub, wlcull::PipelineConfig& cfg,
                          std::string& aggregate_mode) {
  auto* input = sub->add_option_group("input", "Input dataset (pick one)");
  input->add_option("--events", cfg.events_path,
                    "Raw events CSV with header workload,node,event,count");
  input->add_option("--matrix", cfg.matrix_path,
                    "Finished metric matrix CSV (workload[,stack,algorithm,category],metrics...)");
  input->require_option(1);

  sub->add_option("--catalog", cfg.catalog_path,
                  "Metric catalog CSV name,category,unit[,derivation]; default: bundled catalog");
  sub->add_option("--aggregate-mode", aggregate_mode,
                  "Average events across nodes before deriving metrics, or derive per node first")
      ->check(CLI::IsMember({"events-first", "metrics-first"}))
      ->capture_default_str();
  sub->add_option("--kaiser-threshold", cfg.kaiser_threshold,
                  "Eigenvalue cutoff for retaining components")
      ->capture_default_str();
  sub->add_flag("--kaiser-strict", cfg.kaiser_strict,
                "Require eigenvalues strictly above the threshold");
  sub->add_option("--k-min", cfg.k_min, "Smallest cluster count to try")
      ->capture_default_str();
  sub->add_option("--k-max", cfg.k_max,
                  "Largest cluster count to try; 0 = min(15, workloads-1)")
      ->capture_default_str();
  sub->add_option("--restarts", cfg.restarts, "K-means restarts per cluster count")
      ->capture_default_str();
  sub->add_option("--seed", cfg.seed, "Master seed; all randomness derives from it")
      ->capture_default_str();
  sub->add_flag("--pj-compat", cfg.pj_compat,
                "Count model parameters as (K-1)+dK+1 instead of K+dK");
  sub->add_option("--pc-a", cfg.scatter_pc_a, "First scatter component (1-based)")
      ->capture_default_str();
  sub->add_option("--pc-b", cfg.scatter_pc_b, "Second scatter component (1-based)")
      ->capture_default_str();
  sub->add_option("--out-dir", cfg.out_dir, "Directory for emitted artifacts")
      ->capture_default_str();
}

int run_demo(std::uint64_t seed, const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  const wlcull::DemoDataset demo = wlcull::make_demo_dataset(seed);

  const std::string matrix_path = (fs::path(out_dir) / "demo_matrix.csv").string();
  wlcull::write_matrix_csv(demo.matrix, matrix_path);

  const std::string catalog_path = (fs::path(out_dir) / "demo_catalog.csv").string();
  wlcull::write_catalog_csv(wlcull::builtin_catalog(), catalog_path);

  std::vector<wlcull::CsvRow> labels;
  labels.push_back({"workload", "group"});
  for (std::size_t i = 0; i < demo.matrix.workloads.size(); ++i) {
    labels.push_back({demo.matrix.workloads[i].id, std::to_string(demo.labels[i])});
  }
  const std::string labels_path = (fs::path(out_dir) / "demo_labels.csv").string();
  wlcull::write_csv(labels_path, labels);

  std::cout << "wrote " << matrix_path << "\n"
            << "wrote " << catalog_path << "\n"
            << "wrote " << labels_path << "\n";
  return 0;
}

int run_stage_command(const wlcull::PipelineConfig& cfg, wlcull::Stage stage) {
  const wlcull::PipelineResult result = wlcull::run_pipeline(cfg, stage);
  for (const auto& name : result.artifacts) {
    std::cout << "wrote "
              << (std::filesystem::path(cfg.out_dir) / name).string() << "\n";
  }
  std::cout << "workloads: " << result.workloads << ", metrics: " << result.metrics;
  if (result.retained_pcs > 0) std::cout << ", retained components: " << result.retained_pcs;
  if (result.best_k > 0) std::cout << ", best k: " << result.best_k;
  std::cout << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workload characterization and subsetting toolkit"};
  app.set_version_flag("--version", wlcull::kVersion);
  app.require_subcommand(1);

  wlcull::PipelineConfig cfg;
  std::string aggregate_mode = "events-first";

  struct StageCommand {
    const char* name;
    const char* help;
    wlcull::Stage stage;
    CLI::App* sub = nullptr;
  };
  StageCommand commands[] = {
      {"ingest", "Load and validate the dataset, emit the metric matrix",
       wlcull::Stage::Ingest},
      {"pca", "Standardize and decompose, emit component reports",
       wlcull::Stage::Decompose},
      {"hcluster", "Hierarchical clustering, emit the merge tree",
       wlcull::Stage::Hcluster},
      {"kmeans", "K-means sweep with model selection", wlcull::Stage::Kmeans},
      {"subset", "Representative selection from the best clustering",
       wlcull::Stage::Subset},
      {"run", "Full pipeline, all artifacts", wlcull::Stage::Subset},
  };
  for (auto& cmd : commands) {
    cmd.sub = app.add_subcommand(cmd.name, cmd.help);
    add_pipeline_options(cmd.sub, cfg, aggregate_mode);
  }

  std::uint64_t demo_seed = 42;
  std::string demo_out_dir = ".";
  CLI::App* demo = app.add_subcommand("demo", "Emit the bundled synthetic dataset");
  demo->add_option("--seed", demo_seed, "Generator seed")->capture_default_str();
  demo->add_option("--out-dir", demo_out_dir, "Directory for the dataset files")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;  // every usage problem maps to 1
  }

  try {
    if (demo->parsed()) return run_demo(demo_seed, demo_out_dir);
    cfg.aggregate_mode = aggregate_mode == "metrics-first"
                             ? wlcull::AggregateMode::MetricsFirst
                             : wlcull::AggregateMode::EventsFirst;
    for (const auto& cmd : commands) {
      if (cmd.sub->parsed()) return run_stage_command(cfg, cmd.stage);
    }
    std::cerr << "error: no subcommand\n";
    return 1;
  } catch (const wlcull::NumericError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const wlcull::DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const wlcull::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
