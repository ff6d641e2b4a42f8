#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace storyfear {

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// Splits on '\n'; a trailing newline does not produce an empty last element.
// '\r' before a newline is stripped.
std::vector<std::string> split_lines(const std::string& text);

std::uint64_t fnv1a64(const std::string& bytes);
std::string fnv1a64_hex(const std::string& bytes);
std::string file_checksum(const std::string& path);

}  // namespace storyfear
