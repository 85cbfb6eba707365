#pragma once

#include <string>
#include <vector>

namespace wlcull {

using CsvRow = std::vector<std::string>;

// RFC-4180-ish: quoted fields, embedded commas and doubled quotes, CRLF
// tolerant. Blank lines are skipped.
std::vector<CsvRow> parse_csv(const std::string& text);
std::vector<CsvRow> read_csv(const std::string& path);

std::string csv_escape(const std::string& field);
std::string csv_to_string(const std::vector<CsvRow>& rows);
void write_csv(const std::string& path, const std::vector<CsvRow>& rows);

// Accepts decimal and scientific notation; rejects trailing junk.
double parse_number(const std::string& token);

}  // namespace wlcull
