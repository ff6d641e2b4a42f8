#include "config.hpp"

#include <charconv>
#include <filesystem>

#include "error.hpp"
#include "io_util.hpp"

namespace storyfear {

namespace {

std::string trim(const std::string& s) {
    std::size_t lo = 0, hi = s.size();
    while (lo < hi && (s[lo] == ' ' || s[lo] == '\t')) ++lo;
    while (hi > lo && (s[hi - 1] == ' ' || s[hi - 1] == '\t')) --hi;
    return s.substr(lo, hi - lo);
}

}  // namespace

void RunConfig::set(const std::string& key, const std::string& value) {
    if (key.empty()) throw ArgError("config: empty key");
    values_[key] = value;
}

bool RunConfig::has(const std::string& key) const { return values_.contains(key); }

std::optional<std::string> RunConfig::get(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
}

std::string RunConfig::get_string(const std::string& key,
                                  const std::string& fallback) const {
    auto v = get(key);
    return v ? *v : fallback;
}

std::string RunConfig::require_string(const std::string& key) const {
    auto v = get(key);
    if (!v || v->empty()) {
        throw ArgError("config: required key `" + key + "` is not set");
    }
    return *v;
}

std::int64_t RunConfig::get_int(const std::string& key, std::int64_t fallback) const {
    auto v = get(key);
    if (!v) return fallback;
    std::int64_t out = 0;
    const char* first = v->data();
    const char* last = first + v->size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc() || ptr != last) {
        throw ArgError("config: key `" + key + "` is not an integer: " + *v);
    }
    return out;
}

std::uint64_t RunConfig::get_uint(const std::string& key,
                                  std::uint64_t fallback) const {
    const std::int64_t v = get_int(key, static_cast<std::int64_t>(fallback));
    if (v < 0) throw ArgError("config: key `" + key + "` must be >= 0");
    return static_cast<std::uint64_t>(v);
}

double RunConfig::get_double(const std::string& key, double fallback) const {
    auto v = get(key);
    if (!v) return fallback;
    try {
        return std::stod(*v);
    } catch (const std::exception&) {
        throw ArgError("config: key `" + key + "` is not a number: " + *v);
    }
}

bool RunConfig::get_bool(const std::string& key, bool fallback) const {
    auto v = get(key);
    if (!v) return fallback;
    if (*v == "true" || *v == "1" || *v == "yes" || *v == "on") return true;
    if (*v == "false" || *v == "0" || *v == "no" || *v == "off") return false;
    throw ArgError("config: key `" + key + "` is not a boolean: " + *v);
}

std::string RunConfig::require_path(const std::string& key) const {
    const std::string path = require_string(key);
    if (!std::filesystem::exists(path)) {
        throw IoError("config: `" + key + "` path does not exist: " + path);
    }
    return path;
}

RunConfig RunConfig::from_text(const std::string& text) {
    RunConfig config;
    std::size_t lineno = 0;
    for (const std::string& raw_line : split_lines(text)) {
        ++lineno;
        const std::string line = trim(raw_line);
        if (line.empty() || line[0] == '#') continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw FormatError("config line " + std::to_string(lineno) +
                              ": expected `key = value`");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw FormatError("config line " + std::to_string(lineno) + ": empty key");
        }
        config.set(key, value);
    }
    return config;
}

RunConfig RunConfig::from_file(const std::string& path) {
    return from_text(read_text_file(path));
}

}  // namespace storyfear
