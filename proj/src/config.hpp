#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace storyfear {

// Flat key-value run configuration with dotted section keys
// (`corpus.scary = path/to/file.jsonl`). Every key can be overridden from the
// command line. Seeds are explicit integers; nothing defaults to wall-clock.
class RunConfig {
public:
    void set(const std::string& key, const std::string& value);
    bool has(const std::string& key) const;
    std::optional<std::string> get(const std::string& key) const;

    std::string get_string(const std::string& key, const std::string& fallback) const;
    std::string require_string(const std::string& key) const;
    std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
    std::uint64_t get_uint(const std::string& key, std::uint64_t fallback) const;
    double get_double(const std::string& key, double fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;

    // A path key must name an existing file.
    std::string require_path(const std::string& key) const;

    std::string out_dir() const { return get_string("out_dir", "out"); }
    std::uint64_t seed() const { return get_uint("seed", 12345); }
    unsigned threads() const {
        return static_cast<unsigned>(get_uint("threads", 1));
    }

    const std::map<std::string, std::string>& entries() const { return values_; }

    // Lines `key = value`; '#' starts a comment; blank lines ignored.
    static RunConfig from_text(const std::string& text);
    static RunConfig from_file(const std::string& path);

private:
    std::map<std::string, std::string> values_;
};

}  // namespace storyfear
