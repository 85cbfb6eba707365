#pragma once

#include <vector>

#include "wlcull/metrics.hpp"

namespace wlcull {

// The bundled 45-metric processor-behavior catalog: instruction mix, cache,
// TLB, branch, pipeline, offcore-request, snoop-response, parallelism, and
// operation-intensity groups. None carry a derivation; values are supplied
// directly as events named after the metric (see README for an example of
// wiring raw counter names to these via derivation expressions).
const std::vector<MetricDescriptor>& builtin_catalog();

// The nine builtin category labels, in catalog order.
const std::vector<std::string>& builtin_categories();

}  // namespace wlcull
