#include "wlcull/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include "wlcull/csv.hpp"
#include "wlcull/error.hpp"
#include "wlcull/numformat.hpp"

namespace wlcull {

MetricUnit metric_unit_from_string(const std::string& text) {
  if (text == "per-kilo-instruction") return MetricUnit::PerKiloInstruction;
  if (text == "ratio") return MetricUnit::Ratio;
  if (text == "percentage") return MetricUnit::Percentage;
  if (text == "count") return MetricUnit::Count;
  if (text == "dimensionless") return MetricUnit::Dimensionless;
  throw DataError("unknown metric unit '" + text + "'");
}

const char* to_string(MetricUnit unit) {
  switch (unit) {
    case MetricUnit::PerKiloInstruction: return "per-kilo-instruction";
    case MetricUnit::Ratio: return "ratio";
    case MetricUnit::Percentage: return "percentage";
    case MetricUnit::Count: return "count";
    case MetricUnit::Dimensionless: return "dimensionless";
  }
  return "dimensionless";
}

void validate(const MetricMatrix& m) {
  const std::size_t R = m.workloads.size();
  const std::size_t d = m.metrics.size();
  if (R < 2) throw DataError("need at least 2 workloads, got " + std::to_string(R));
  if (d < 1) throw DataError("need at least 1 metric");
  if (m.values.rows() != R || m.values.cols() != d) {
    throw DataError("matrix shape mismatch");
  }
  std::set<std::string> ids;
  for (const auto& w : m.workloads) {
    if (w.id.empty()) throw DataError("workload with empty id");
    if (!ids.insert(w.id).second) {
      throw DataError("duplicate workload id '" + w.id + "'");
    }
  }
  std::set<std::string> names;
  for (const auto& metric : m.metrics) {
    if (metric.name.empty()) throw DataError("metric with empty name");
    if (!names.insert(metric.name).second) {
      throw DataError("duplicate metric name '" + metric.name + "'");
    }
  }
  for (std::size_t r = 0; r < R; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      if (!std::isfinite(m.values(r, c))) {
        throw DataError("non-finite value for workload '" + m.workloads[r].id +
                        "', metric '" + m.metrics[c].name + "'");
      }
    }
  }
}

namespace {

double sorted_mean(std::vector<double> values) {
  // Summing in sorted order makes the result independent of the order the
  // values arrived in, so the aggregate is permutation-invariant bit for bit.
  std::sort(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

// (workload, event) -> node -> within-node samples, all keys sorted.
using NodeGroups = std::map<EventKey, std::map<std::string, std::vector<double>>>;

NodeGroups group_samples(const std::vector<EventSample>& samples) {
  NodeGroups groups;
  for (const auto& s : samples) {
    if (s.count < 0.0 || !std::isfinite(s.count)) {
      throw DataError("negative or non-finite count for event '" + s.event_name +
                      "' of workload '" + s.workload_id + "'");
    }
    groups[{s.workload_id, s.event_name}][s.node_id].push_back(s.count);
  }
  return groups;
}

}  // namespace

std::map<EventKey, double> aggregate_nodes(const std::vector<EventSample>& samples) {
  if (samples.empty()) throw DataError("no event samples");
  std::map<EventKey, double> out;
  for (auto& [key, nodes] : group_samples(samples)) {
    std::vector<double> node_means;
    node_means.reserve(nodes.size());
    for (auto& [node, values] : nodes) {
      node_means.push_back(sorted_mean(std::move(values)));
    }
    out[key] = sorted_mean(std::move(node_means));
  }
  return out;
}

namespace {

double metric_value(const MetricDescriptor& metric, const WorkloadDescriptor& w,
                    const std::map<std::string, double>& bindings) {
  double value;
  if (metric.derivation) {
    for (const auto& ident : metric.derivation->identifiers()) {
      if (!bindings.count(ident)) {
        throw DataError("workload '" + w.id + "' is missing event '" + ident +
                        "' needed by metric '" + metric.name + "'");
      }
    }
    value = metric.derivation->evaluate(bindings);
  } else {
    auto it = bindings.find(metric.name);
    if (it == bindings.end()) {
      throw DataError("workload '" + w.id + "' is missing event '" + metric.name + "'");
    }
    value = it->second;
  }
  if (!std::isfinite(value)) {
    throw DataError("metric '" + metric.name + "' is non-finite for workload '" +
                    w.id + "'");
  }
  return value;
}

}  // namespace

MetricMatrix build_matrix(const std::vector<MetricDescriptor>& catalog,
                          const std::vector<WorkloadDescriptor>& workloads,
                          const std::map<EventKey, double>& events) {
  MetricMatrix m;
  m.workloads = workloads;
  m.metrics = catalog;
  m.values = Matrix(workloads.size(), catalog.size());
  for (std::size_t r = 0; r < workloads.size(); ++r) {
    std::map<std::string, double> bindings;
    for (const auto& [key, value] : events) {
      if (key.first == workloads[r].id) bindings[key.second] = value;
    }
    for (std::size_t c = 0; c < catalog.size(); ++c) {
      m.values(r, c) = metric_value(catalog[c], workloads[r], bindings);
    }
  }
  validate(m);
  return m;
}

MetricMatrix build_matrix_metrics_first(const std::vector<MetricDescriptor>& catalog,
                                        const std::vector<WorkloadDescriptor>& workloads,
                                        const std::vector<EventSample>& samples) {
  if (samples.empty()) throw DataError("no event samples");
  // workload -> node -> event -> within-node mean
  std::map<std::string, std::map<std::string, std::map<std::string, double>>> per_node;
  for (auto& [key, nodes] : group_samples(samples)) {
    for (auto& [node, values] : nodes) {
      per_node[key.first][node][key.second] = sorted_mean(std::move(values));
    }
  }
  MetricMatrix m;
  m.workloads = workloads;
  m.metrics = catalog;
  m.values = Matrix(workloads.size(), catalog.size());
  for (std::size_t r = 0; r < workloads.size(); ++r) {
    auto wit = per_node.find(workloads[r].id);
    if (wit == per_node.end()) {
      throw DataError("no samples for workload '" + workloads[r].id + "'");
    }
    for (std::size_t c = 0; c < catalog.size(); ++c) {
      std::vector<double> node_values;
      node_values.reserve(wit->second.size());
      for (const auto& [node, bindings] : wit->second) {
        node_values.push_back(metric_value(catalog[c], workloads[r], bindings));
      }
      m.values(r, c) = sorted_mean(std::move(node_values));
    }
  }
  validate(m);
  return m;
}

std::vector<EventSample> read_events_csv(const std::string& path) {
  auto rows = read_csv(path);
  if (rows.empty()) throw DataError(path + ": empty events file");
  const auto& header = rows.front();
  if (header.size() < 4 || header[0] != "workload" || header[1] != "node" ||
      header[2] != "event" || header[3] != "count") {
    throw DataError(path + ": expected header workload,node,event,count");
  }
  std::vector<EventSample> samples;
  samples.reserve(rows.size() - 1);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (row.size() != 4) {
      throw DataError(path + ": row " + std::to_string(i + 1) + " has " +
                      std::to_string(row.size()) + " fields, expected 4");
    }
    samples.push_back({row[0], row[1], row[2], parse_number(row[3])});
  }
  if (samples.empty()) throw DataError(path + ": no samples");
  return samples;
}

void write_events_csv(const std::vector<EventSample>& samples, const std::string& path) {
  std::vector<CsvRow> rows;
  rows.push_back({"workload", "node", "event", "count"});
  for (const auto& s : samples) {
    rows.push_back({s.workload_id, s.node_id, s.event_name, format_double(s.count)});
  }
  write_csv(path, rows);
}

MetricMatrix read_matrix_csv(const std::string& path) {
  auto rows = read_csv(path);
  if (rows.size() < 2) throw DataError(path + ": need a header and at least one workload row");
  const auto& header = rows.front();
  if (header.empty() || header[0] != "workload") {
    throw DataError(path + ": first column must be 'workload'");
  }
  std::size_t col = 1;
  std::size_t stack_col = 0, algorithm_col = 0, category_col = 0;
  while (col < header.size()) {
    if (header[col] == "stack" && !stack_col) stack_col = col;
    else if (header[col] == "algorithm" && !algorithm_col) algorithm_col = col;
    else if (header[col] == "category" && !category_col) category_col = col;
    else break;
    ++col;
  }
  const std::size_t first_metric = col;
  MetricMatrix m;
  for (; col < header.size(); ++col) {
    if (header[col].empty()) throw DataError(path + ": empty metric name in header");
    m.metrics.push_back({header[col], "custom", MetricUnit::Dimensionless, std::nullopt});
  }
  if (m.metrics.empty()) throw DataError(path + ": no metric columns");
  const std::size_t R = rows.size() - 1;
  m.values = Matrix(R, m.metrics.size());
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (row.size() != header.size()) {
      throw DataError(path + ": row " + std::to_string(i + 1) + " has " +
                      std::to_string(row.size()) + " fields, expected " +
                      std::to_string(header.size()));
    }
    WorkloadDescriptor w;
    w.id = row[0];
    if (stack_col) w.stack = row[stack_col];
    if (algorithm_col) w.algorithm = row[algorithm_col];
    if (category_col) w.category = row[category_col];
    m.workloads.push_back(std::move(w));
    for (std::size_t c = first_metric; c < row.size(); ++c) {
      m.values(i - 1, c - first_metric) = parse_number(row[c]);
    }
  }
  validate(m);
  return m;
}

std::string matrix_csv_string(const MetricMatrix& m) {
  std::vector<CsvRow> rows;
  CsvRow header = {"workload", "stack", "algorithm", "category"};
  for (const auto& metric : m.metrics) header.push_back(metric.name);
  rows.push_back(std::move(header));
  for (std::size_t r = 0; r < m.workloads.size(); ++r) {
    const auto& w = m.workloads[r];
    CsvRow row = {w.id, w.stack, w.algorithm, w.category};
    for (std::size_t c = 0; c < m.metrics.size(); ++c) {
      row.push_back(format_double(m.values(r, c)));
    }
    rows.push_back(std::move(row));
  }
  return csv_to_string(rows);
}

void write_matrix_csv(const MetricMatrix& m, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write file: " + path);
  out << matrix_csv_string(m);
  out.flush();
  if (!out) throw DataError("cannot write file: " + path);
}

std::vector<MetricDescriptor> read_catalog_csv(const std::string& path) {
  auto rows = read_csv(path);
  std::vector<MetricDescriptor> catalog;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (i == 0 && row.size() >= 3 && row[0] == "name" && row[1] == "category") {
      continue;  // optional header
    }
    if (row.size() < 3 || row.size() > 4) {
      throw DataError(path + ": row " + std::to_string(i + 1) +
                      " needs name,category,unit[,derivation]");
    }
    MetricDescriptor metric;
    metric.name = row[0];
    metric.category = row[1];
    metric.unit = metric_unit_from_string(row[2]);
    if (metric.name.empty()) throw DataError(path + ": empty metric name");
    if (!seen.insert(metric.name).second) {
      throw DataError(path + ": duplicate metric '" + metric.name + "'");
    }
    if (row.size() == 4 && !row[3].empty()) {
      metric.derivation = Expression::parse(row[3]);
    }
    catalog.push_back(std::move(metric));
  }
  if (catalog.empty()) throw DataError(path + ": empty catalog");
  return catalog;
}

void write_catalog_csv(const std::vector<MetricDescriptor>& catalog,
                       const std::string& path) {
  std::vector<CsvRow> rows;
  for (const auto& metric : catalog) {
    CsvRow row = {metric.name, metric.category, to_string(metric.unit)};
    if (metric.derivation) row.push_back(metric.derivation->pretty());
    rows.push_back(std::move(row));
  }
  write_csv(path, rows);
}

void annotate_from_catalog(MetricMatrix& m, const std::vector<MetricDescriptor>& catalog) {
  for (auto& metric : m.metrics) {
    for (const auto& entry : catalog) {
      if (entry.name == metric.name) {
        metric.category = entry.category;
        metric.unit = entry.unit;
        break;
      }
    }
  }
}

}  // namespace wlcull
