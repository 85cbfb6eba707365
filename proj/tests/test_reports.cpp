#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "json.hpp"
#include "wlcull/csv.hpp"
#include "wlcull/error.hpp"
#include "wlcull/hcluster.hpp"
#include "wlcull/kmeans.hpp"
#include "wlcull/pca.hpp"
#include "wlcull/reports.hpp"
#include "wlcull/standardize.hpp"
#include "wlcull/subset.hpp"

using namespace wlcull;
using nlohmann::json;

namespace {

struct SmallRun {
  StandardizedMatrix s;
  PcaModel model;
  Dendrogram dend;
  BicSweep swept;
  SubsetReport subset;
};

// One consistent small pipeline state shared by the report tests.
SmallRun small_run() {
  SmallRun run;
  auto blobs = helpers::make_blobs(4, 3, 4, 40.0, 1.0, 9);
  auto m = helpers::wrap_matrix(blobs.points);
  m.workloads[0].stack = "jvm";
  run.s = standardize(m);
  run.model = kaiser_select(pca(run.s), 1.0, false);
  auto scores = retained_scores(run.model);
  std::vector<std::string> ids;
  for (const auto& w : run.s.workloads) ids.push_back(w.id);
  run.dend = single_linkage(pairwise_distances(scores), ids);
  run.swept = sweep(scores, 2, 5, 5, 11, false);
  auto partition = partition_from_assignments(
      run.swept.candidates[run.swept.best_k - 2].best.assignments, run.swept.best_k);
  run.subset = build_subset_report(scores, partition, run.dend, Strategy::NearestCenter);
  return run;
}

}  // namespace

TEST_SUITE("reports") {

TEST_CASE("fnv1a matches published vectors") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ull);
  CHECK(fnv1a64_hex("") == "cbf29ce484222325");
}

TEST_CASE("pca report carries the full decomposition state") {
  auto run = small_run();
  auto doc = json::parse(pca_report_json(run.model, run.s, 1.0, false));
  CHECK(doc["workloads"].size() == 12);
  CHECK(doc["metrics"].size() == run.model.metric_names.size());
  CHECK(doc["eigenvalues"].size() == run.model.eigenvalues.size());
  CHECK(doc["retained"] == run.model.retained);
  CHECK(doc["kaiser_threshold"] == 1.0);
  CHECK(doc["kaiser_strict"] == false);
  CHECK(doc["loadings"].size() == run.model.metric_names.size());
  CHECK(doc["scores"].size() == 12);
  CHECK(doc["components"].size() == run.model.retained);
  // Cumulative fractions end at 1 (all components listed).
  auto cumulative = doc["cumulative_variance_fraction"];
  CHECK(std::abs(cumulative.back().get<double>() - 1.0) < 1e-9);
}

TEST_CASE("loadings csv is metrics by retained components") {
  auto run = small_run();
  auto text = loadings_csv(run.model);
  auto lines = std::count(text.begin(), text.end(), '\n');
  CHECK(lines == static_cast<long>(run.model.metric_names.size()) + 1);
  CHECK(text.rfind("metric,PC1", 0) == 0);
}

TEST_CASE("scatter csv lists one row per workload") {
  auto run = small_run();
  auto text = scatter_csv(run.model, run.s.workloads, 0, 1);
  auto lines = std::count(text.begin(), text.end(), '\n');
  CHECK(lines == 13);
  CHECK(text.rfind("workload,stack,PC1,PC2", 0) == 0);
  CHECK(text.find("jvm") != std::string::npos);
  CHECK_THROWS_AS(scatter_csv(run.model, run.s.workloads, 0, run.model.retained), DataError);
}

TEST_CASE("dendrogram json mirrors the merge list") {
  auto run = small_run();
  auto doc = json::parse(dendrogram_json(run.dend));
  CHECK(doc["leaves"].size() == 12);
  REQUIRE(doc["merges"].size() == 11);
  for (std::size_t i = 0; i < 11; ++i) {
    CHECK(doc["merges"][i]["height"] == run.dend.merges[i].height);
    CHECK(doc["merges"][i]["size"] == run.dend.merges[i].size);
  }
}

TEST_CASE("dendrogram dot labels leaves and heights") {
  auto run = small_run();
  auto dot = dendrogram_dot(run.dend, run.s.workloads);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("w0") != std::string::npos);
  CHECK(dot.find("jvm") != std::string::npos);
  // Heights are rendered with exactly two decimals.
  CHECK(dot.find("label=\"" ) != std::string::npos);
  auto pos = dot.find("merge0");
  CHECK(pos != std::string::npos);
}

TEST_CASE("sweep report lists candidates and the winning clusters") {
  auto run = small_run();
  std::vector<std::string> ids;
  for (const auto& w : run.s.workloads) ids.push_back(w.id);
  auto doc = json::parse(sweep_report_json(run.swept, ids));
  CHECK(doc["best_k"] == run.swept.best_k);
  REQUIRE(doc["candidates"].size() == run.swept.candidates.size());
  for (std::size_t i = 0; i < run.swept.candidates.size(); ++i) {
    CHECK(doc["candidates"][i]["k"] == run.swept.candidates[i].k);
    CHECK(doc["candidates"][i]["bic"] == run.swept.candidates[i].best.bic);
    CHECK(doc["candidates"][i]["restarts"].size() == 5);
  }
  CHECK(doc["clusters"].size() == run.swept.best_k);
  std::size_t members = 0;
  for (const auto& c : doc["clusters"]) members += c["workloads"].size();
  CHECK(members == 12);
}

TEST_CASE("subset report names representatives by workload id") {
  auto run = small_run();
  std::vector<std::string> ids;
  for (const auto& w : run.s.workloads) ids.push_back(w.id);
  auto doc = json::parse(subset_report_json(run.subset, ids));
  CHECK(doc["strategy"] == "nearest-center");
  REQUIRE(doc["representatives"].size() == run.subset.representatives.size());
  for (std::size_t i = 0; i < run.subset.representatives.size(); ++i)
    CHECK(doc["representatives"][i]["workload"] == ids[run.subset.representatives[i].workload]);
  CHECK(doc["max_linkage_distance"] == run.subset.max_linkage_distance);
}

TEST_CASE("kiviat scales coordinates to the unit interval") {
  auto run = small_run();
  auto text = kiviat_csv(run.model, run.subset.representatives, run.s.workloads);
  auto rows = parse_csv(text);
  REQUIRE(rows.size() == run.subset.representatives.size() + 1);
  CHECK(rows[0][0] == "workload");
  CHECK(rows[0][1] == "cluster");
  for (std::size_t r = 1; r < rows.size(); ++r)
    for (std::size_t c = 2; c < rows[r].size(); ++c) {
      double v = parse_number(rows[r][c]);
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
  // Each scaled column attains both 0 and 1 (or is degenerate at 0.5).
  for (std::size_t c = 2; c < rows[0].size(); ++c) {
    double lo = 2.0, hi = -1.0;
    for (std::size_t r = 1; r < rows.size(); ++r) {
      double v = parse_number(rows[r][c]);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    bool scaled = lo == 0.0 && hi == 1.0;
    bool degenerate = lo == 0.5 && hi == 0.5;
    CHECK((scaled || degenerate));
  }
}

TEST_CASE("a single representative degenerates every kiviat column") {
  auto run = small_run();
  std::vector<Representative> one{run.subset.representatives[0]};
  auto rows = parse_csv(kiviat_csv(run.model, one, run.s.workloads));
  REQUIRE(rows.size() == 2);
  for (std::size_t c = 2; c < rows[1].size(); ++c)
    CHECK(parse_number(rows[1][c]) == 0.5);
}

TEST_CASE("write_text_file refuses unreachable paths") {
  CHECK_THROWS_AS(write_text_file("/nonexistent_dir_9f2/x.txt", "hi"), DataError);
  helpers::ScopedDir dir("write_text");
  auto path = (dir.path() / "out.txt").string();
  write_text_file(path, "payload");
  std::ifstream in(path, std::ios::binary);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(content == "payload");
}

}  // TEST_SUITE
