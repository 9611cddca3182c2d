#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ordfuzz::detail {

// RFC-4180-style parser: quoted fields may contain commas, doubled quotes
// and newlines. Unquoted fields are trimmed of surrounding blanks.
// Throws IngestError on unterminated quotes.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

// Quote a field when it contains a comma, quote or newline.
std::string csv_escape(const std::string& field);

// Fixed six decimal places, the report and plot-data number format.
std::string fixed6(double v);

// Shortest round-trip representation, used for metadata values.
std::string full_precision(double v);

}  // namespace ordfuzz::detail
