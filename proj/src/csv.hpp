#pragma once

#include <string>
#include <vector>

namespace storyfear {

// Minimal RFC 4180 reader: quoted fields may contain commas, doubled quotes
// and newlines. Blank records are skipped.
std::vector<std::vector<std::string>> parse_csv(const std::string& text);
std::vector<std::vector<std::string>> read_csv_file(const std::string& path);

// Quotes a field only when needed.
std::string csv_escape(const std::string& field);
std::string csv_join(const std::vector<std::string>& fields);

}  // namespace storyfear
