#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wlcull/expression.hpp"
#include "wlcull/matrix.hpp"

namespace wlcull {

struct WorkloadDescriptor {
  std::string id;         // unique, non-empty
  std::string algorithm;  // free text
  std::string stack;      // software-stack label, free text
  std::string category;   // e.g. offline / interactive analytics
};

enum class MetricUnit {
  PerKiloInstruction,
  Ratio,
  Percentage,
  Count,
  Dimensionless,
};

// Throws DataError on an unrecognized unit name.
MetricUnit metric_unit_from_string(const std::string& text);
const char* to_string(MetricUnit unit);

struct MetricDescriptor {
  std::string name;      // unique within a catalog
  std::string category;  // one of the nine builtin categories or "custom"
  MetricUnit unit = MetricUnit::Dimensionless;
  // Absent: the metric is supplied directly as an event of the same name.
  std::optional<Expression> derivation;
};

struct EventSample {
  std::string workload_id;
  std::string node_id;
  std::string event_name;
  double count = 0.0;  // >= 0
};

// The validated R x d dataset every downstream stage consumes. Immutable by
// convention after construction; share freely across threads for reading.
struct MetricMatrix {
  std::vector<WorkloadDescriptor> workloads;  // length R
  std::vector<MetricDescriptor> metrics;      // length d
  Matrix values;                              // R x d, all finite
};

// Throws DataError on duplicate/empty workload ids, duplicate metric names,
// non-finite cells, R < 2, or d < 1.
void validate(const MetricMatrix& m);

using EventKey = std::pair<std::string, std::string>;  // (workload_id, event_name)

// Mean across nodes per (workload, event); repeats within one node are
// averaged first. Sample order never affects the result.
std::map<EventKey, double> aggregate_nodes(const std::vector<EventSample>& samples);

// Evaluates each metric for each workload against the aggregated events.
// Metrics without a derivation read the event of the same name. Throws
// DataError naming both workload and event when a lookup fails, and naming
// workload and metric when a derivation yields a non-finite value.
MetricMatrix build_matrix(const std::vector<MetricDescriptor>& catalog,
                          const std::vector<WorkloadDescriptor>& workloads,
                          const std::map<EventKey, double>& events);

// Alternative aggregation order: derive every metric per node (after
// averaging within-node repeats), then average the finished metrics across
// nodes. Same error contract as build_matrix.
MetricMatrix build_matrix_metrics_first(const std::vector<MetricDescriptor>& catalog,
                                        const std::vector<WorkloadDescriptor>& workloads,
                                        const std::vector<EventSample>& samples);

// Raw-events CSV, header `workload,node,event,count`.
std::vector<EventSample> read_events_csv(const std::string& path);
void write_events_csv(const std::vector<EventSample>& samples, const std::string& path);

// Matrix CSV: first column `workload`, optional `stack`/`algorithm`/`category`
// columns, remaining headers are metric names. Metrics read this way carry
// category "custom" unless a catalog later refines them.
MetricMatrix read_matrix_csv(const std::string& path);
std::string matrix_csv_string(const MetricMatrix& m);
void write_matrix_csv(const MetricMatrix& m, const std::string& path);

// Catalog CSV: one metric per line, `name,category,unit[,derivation]`.
// A leading `name,category,unit` header row is tolerated and skipped.
std::vector<MetricDescriptor> read_catalog_csv(const std::string& path);
void write_catalog_csv(const std::vector<MetricDescriptor>& catalog,
                       const std::string& path);

// If the matrix's metric names appear in the catalog, copy category and unit
// onto them. Unknown names stay "custom". Used after read_matrix_csv.
void annotate_from_catalog(MetricMatrix& m, const std::vector<MetricDescriptor>& catalog);

}  // namespace wlcull
