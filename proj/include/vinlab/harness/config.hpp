#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace vinlab::harness {

struct ConfigError : std::runtime_error {
    ConfigError(const std::string& field, const std::string& reason)
        : std::runtime_error("config field '" + field + "': " + reason), field(field) {}
    std::string field;
};

/// Flat key = value text configuration ('#' comments, blank lines ignored).
/// CLI flags override file keys by calling set() after load.
class Config {
public:
    Config() = default;

    static Config from_file(const std::string& path);
    static Config from_string(const std::string& text);

    void set(const std::string& key, const std::string& value) { kv_[key] = value; }
    bool has(const std::string& key) const { return kv_.count(key) > 0; }

    std::string get_string(const std::string& key) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    long get_long(const std::string& key) const;
    long get_long(const std::string& key, long fallback) const;
    double get_double(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    std::uint64_t get_seed(const std::string& key, std::uint64_t fallback) const;
    /// Comma-separated list of doubles.
    std::vector<double> get_double_list(const std::string& key) const;
    std::vector<double> get_double_list(const std::string& key,
                                        const std::vector<double>& fallback) const;

    const std::map<std::string, std::string>& entries() const { return kv_; }

private:
    std::map<std::string, std::string> kv_;
};

enum class FieldType { Long, Double, String, DoubleList, Seed };

struct FieldSpec {
    std::string name;
    FieldType type = FieldType::Double;
    bool required = false;
    std::string default_value;  // informational; experiments apply their own fallbacks
    std::string help;
};

/// Checks that every required field is present, every present field parses at
/// its declared type, and no unknown keys slip through (catching typos).
void validate_config(const Config& cfg, const std::vector<FieldSpec>& schema);

}  // namespace vinlab::harness
