#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace qpm {

/// Line-based "key: value" file with [section] headers and # comments.
/// Used by dispersion model files and run configs; every lookup error
/// cites the origin file and line number.
class KvFile {
public:
    struct Entry {
        std::string value;
        int line = 0;
    };

    static KvFile parse_file(const std::filesystem::path& path);
    static KvFile parse(const std::string& text, std::string origin);

    const std::string& origin() const { return origin_; }

    bool has_section(const std::string& section) const;
    bool has(const std::string& section, const std::string& key) const;

    std::string get_string(const std::string& section, const std::string& key) const;
    std::string get_string_or(const std::string& section, const std::string& key,
                              const std::string& fallback) const;
    double get_double(const std::string& section, const std::string& key) const;
    double get_double_or(const std::string& section, const std::string& key,
                         double fallback) const;
    long get_long(const std::string& section, const std::string& key) const;
    long get_long_or(const std::string& section, const std::string& key, long fallback) const;
    /// Whitespace-separated list of doubles.
    std::vector<double> get_doubles(const std::string& section, const std::string& key) const;

    int line_of(const std::string& section, const std::string& key) const;
    std::vector<std::string> sections_in_order() const { return section_order_; }
    std::vector<std::string> keys(const std::string& section) const;

private:
    const Entry& entry(const std::string& section, const std::string& key) const;

    std::string origin_;
    std::map<std::string, std::map<std::string, Entry>> data_;
    std::vector<std::string> section_order_;
};

}  // namespace qpm
