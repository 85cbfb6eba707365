#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wlcull/hcluster.hpp"
#include "wlcull/kmeans.hpp"
#include "wlcull/metrics.hpp"
#include "wlcull/pca.hpp"
#include "wlcull/standardize.hpp"
#include "wlcull/subset.hpp"

namespace wlcull {

// FNV-1a, used for artifact checksums in the run manifest.
std::uint64_t fnv1a64(std::string_view text);
std::string fnv1a64_hex(std::string_view text);

// Throws DataError when the file cannot be created or written.
void write_text_file(const std::string& path, const std::string& content);

// Eigenvalues, per-component and cumulative variance fractions, loadings,
// scores, retained count, dropped columns, and the per-component linear
// renderings.
std::string pca_report_json(const PcaModel& model, const StandardizedMatrix& s,
                            double kaiser_threshold, bool kaiser_strict);

// Rows = metrics, columns = PC1..PCk (retained components).
std::string loadings_csv(const PcaModel& model);

// Per-workload id, stack, and scores on two components (0-based indices).
// Throws DataError when an index is not below the retained count.
std::string scatter_csv(const PcaModel& model,
                        const std::vector<WorkloadDescriptor>& workloads,
                        std::size_t pc_a, std::size_t pc_b);

std::string dendrogram_json(const Dendrogram& dend);

// Graphviz rendering: leaves labeled with workload ids (plus stack when
// present), merge edges labeled with heights rounded to 2 decimals.
std::string dendrogram_dot(const Dendrogram& dend,
                           const std::vector<WorkloadDescriptor>& workloads);

// Per-k BIC/inertia/variance plus the best_k membership listing.
std::string sweep_report_json(const BicSweep& sweep,
                              const std::vector<std::string>& workload_ids);

std::string subset_report_json(const SubsetReport& report,
                               const std::vector<std::string>& workload_ids);

// Radar-chart payload: per representative, its retained-component
// coordinates min-max scaled to [0,1] across the representatives.
// A component with no spread across representatives scales to 0.5.
std::string kiviat_csv(const PcaModel& model,
                       const std::vector<Representative>& representatives,
                       const std::vector<WorkloadDescriptor>& workloads);

}  // namespace wlcull
