#include "wlcull/catalog.hpp"

namespace wlcull {

namespace {

std::vector<MetricDescriptor> make_catalog() {
  using U = MetricUnit;
  auto m = [](const char* name, const char* category, U unit) {
    return MetricDescriptor{name, category, unit, std::nullopt};
  };
  return {
      m("LOAD", "instruction-mix", U::Percentage),
      m("STORE", "instruction-mix", U::Percentage),
      m("BRANCH", "instruction-mix", U::Percentage),
      m("INTEGER", "instruction-mix", U::Percentage),
      m("FP", "instruction-mix", U::Percentage),
      m("SSE_FP", "instruction-mix", U::Percentage),
      m("KERNEL_MODE", "instruction-mix", U::Ratio),
      m("USER_MODE", "instruction-mix", U::Ratio),
      m("UOPS_TO_INS", "instruction-mix", U::Ratio),
      m("L1I_MISS", "cache-behavior", U::PerKiloInstruction),
      m("L1I_HIT", "cache-behavior", U::PerKiloInstruction),
      m("L2_MISS", "cache-behavior", U::PerKiloInstruction),
      m("L2_HIT", "cache-behavior", U::PerKiloInstruction),
      m("L3_MISS", "cache-behavior", U::PerKiloInstruction),
      m("L3_HIT", "cache-behavior", U::PerKiloInstruction),
      m("LOAD_HIT_LFB", "cache-behavior", U::PerKiloInstruction),
      m("LOAD_HIT_L2", "cache-behavior", U::PerKiloInstruction),
      m("LOAD_HIT_SIBE", "cache-behavior", U::PerKiloInstruction),
      m("LOAD_HIT_L3", "cache-behavior", U::PerKiloInstruction),
      m("LOAD_LLC_MISS", "cache-behavior", U::PerKiloInstruction),
      m("ITLB_MISS", "tlb-behavior", U::PerKiloInstruction),
      m("ITLB_CYCLE", "tlb-behavior", U::Ratio),
      m("DTLB_MISS", "tlb-behavior", U::PerKiloInstruction),
      m("DTLB_CYCLE", "tlb-behavior", U::Ratio),
      m("DATA_HIT_STLB", "tlb-behavior", U::PerKiloInstruction),
      m("BR_MISS", "branch-execution", U::Ratio),
      m("BR_EXE_TO_RE", "branch-execution", U::Ratio),
      m("FETCH_STALL", "pipeline-behavior", U::Ratio),
      m("ILD_STALL", "pipeline-behavior", U::Ratio),
      m("DECODER_STALL", "pipeline-behavior", U::Ratio),
      m("RAT_STALL", "pipeline-behavior", U::Ratio),
      m("RESOURCE_STALL", "pipeline-behavior", U::Ratio),
      m("UOPS_EXE_CYCLE", "pipeline-behavior", U::Ratio),
      m("UOPS_STALL", "pipeline-behavior", U::Ratio),
      m("OFFCORE_DATA", "offcore-request", U::Percentage),
      m("OFFCORE_CODE", "offcore-request", U::Percentage),
      m("OFFCORE_RFO", "offcore-request", U::Percentage),
      m("OFFCORE_WB", "offcore-request", U::Percentage),
      m("SNOOP_HIT", "snoop-response", U::PerKiloInstruction),
      m("SNOOP_HITE", "snoop-response", U::PerKiloInstruction),
      m("SNOOP_HITM", "snoop-response", U::PerKiloInstruction),
      m("ILP", "parallelism", U::Dimensionless),
      m("MLP", "parallelism", U::Dimensionless),
      m("INT_TO_MEM", "operation-intensity", U::Ratio),
      m("FP_TO_MEM", "operation-intensity", U::Ratio),
  };
}

}  // namespace

const std::vector<MetricDescriptor>& builtin_catalog() {
  static const std::vector<MetricDescriptor> catalog = make_catalog();
  return catalog;
}

const std::vector<std::string>& builtin_categories() {
  static const std::vector<std::string> categories = {
      "instruction-mix",  "cache-behavior",  "tlb-behavior",
      "branch-execution", "pipeline-behavior", "offcore-request",
      "snoop-response",   "parallelism",     "operation-intensity",
  };
  return categories;
}

}  // namespace wlcull
