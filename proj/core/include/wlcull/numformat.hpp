#pragma once

#include <string>

namespace wlcull {

// Shortest decimal string that parses back to the same double.
// Locale-independent; used for all CSV/DOT output so artifacts are
// byte-reproducible.
std::string format_double(double value);

// Fixed significant-digit rendering for human-facing report text.
std::string format_double(double value, int significant_digits);

}  // namespace wlcull
