#include "qpm/kvfile.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "qpm/errors.hpp"

namespace qpm {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

KvFile KvFile::parse_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open file: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path.string());
}

KvFile KvFile::parse(const std::string& text, std::string origin) {
    KvFile kv;
    kv.origin_ = std::move(origin);
    kv.section_order_.push_back("");
    kv.data_[""];

    std::string current;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ParseError(kv.origin_ + ":" + std::to_string(line_no) +
                                     ": unterminated section header",
                                 line_no);
            current = trim(line.substr(1, line.size() - 2));
            if (current.empty())
                throw ParseError(kv.origin_ + ":" + std::to_string(line_no) +
                                     ": empty section name",
                                 line_no);
            if (!kv.data_.count(current)) kv.section_order_.push_back(current);
            kv.data_[current];
            continue;
        }
        const auto colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError(kv.origin_ + ":" + std::to_string(line_no) +
                                 ": expected 'key: value'",
                             line_no);
        std::string key = trim(line.substr(0, colon));
        std::string value = trim(line.substr(colon + 1));
        if (key.empty())
            throw ParseError(kv.origin_ + ":" + std::to_string(line_no) + ": empty key",
                             line_no);
        auto& section = kv.data_[current];
        if (section.count(key))
            throw ParseError(kv.origin_ + ":" + std::to_string(line_no) +
                                 ": duplicate key '" + key + "'",
                             line_no);
        section[key] = Entry{value, line_no};
    }
    return kv;
}

bool KvFile::has_section(const std::string& section) const { return data_.count(section) > 0; }

bool KvFile::has(const std::string& section, const std::string& key) const {
    auto it = data_.find(section);
    return it != data_.end() && it->second.count(key) > 0;
}

const KvFile::Entry& KvFile::entry(const std::string& section, const std::string& key) const {
    auto it = data_.find(section);
    if (it == data_.end())
        throw ParseError(origin_ + ": missing section [" + section + "]", 0);
    auto jt = it->second.find(key);
    if (jt == it->second.end())
        throw ParseError(origin_ + ": missing key '" + key + "' in section [" + section + "]",
                         0);
    return jt->second;
}

std::string KvFile::get_string(const std::string& section, const std::string& key) const {
    return entry(section, key).value;
}

std::string KvFile::get_string_or(const std::string& section, const std::string& key,
                                  const std::string& fallback) const {
    return has(section, key) ? get_string(section, key) : fallback;
}

double KvFile::get_double(const std::string& section, const std::string& key) const {
    const Entry& e = entry(section, key);
    const char* first = e.value.data();
    const char* last = first + e.value.size();
    double out = 0.0;
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last)
        throw ParseError(origin_ + ":" + std::to_string(e.line) + ": '" + e.value +
                             "' is not a number (key '" + key + "')",
                         e.line);
    return out;
}

double KvFile::get_double_or(const std::string& section, const std::string& key,
                             double fallback) const {
    return has(section, key) ? get_double(section, key) : fallback;
}

long KvFile::get_long(const std::string& section, const std::string& key) const {
    const Entry& e = entry(section, key);
    const char* first = e.value.data();
    const char* last = first + e.value.size();
    long out = 0;
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last)
        throw ParseError(origin_ + ":" + std::to_string(e.line) + ": '" + e.value +
                             "' is not an integer (key '" + key + "')",
                         e.line);
    return out;
}

long KvFile::get_long_or(const std::string& section, const std::string& key,
                         long fallback) const {
    return has(section, key) ? get_long(section, key) : fallback;
}

std::vector<double> KvFile::get_doubles(const std::string& section,
                                        const std::string& key) const {
    const Entry& e = entry(section, key);
    std::vector<double> out;
    std::istringstream ss(e.value);
    std::string tok;
    while (ss >> tok) {
        const char* first = tok.data();
        const char* last = first + tok.size();
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc{} || ptr != last)
            throw ParseError(origin_ + ":" + std::to_string(e.line) + ": '" + tok +
                                 "' is not a number in list (key '" + key + "')",
                             e.line);
        out.push_back(v);
    }
    if (out.empty())
        throw ParseError(origin_ + ":" + std::to_string(e.line) + ": empty list (key '" +
                             key + "')",
                         e.line);
    return out;
}

int KvFile::line_of(const std::string& section, const std::string& key) const {
    return entry(section, key).line;
}

std::vector<std::string> KvFile::keys(const std::string& section) const {
    std::vector<std::string> out;
    auto it = data_.find(section);
    if (it == data_.end()) return out;
    out.reserve(it->second.size());
    for (const auto& [k, v] : it->second) out.push_back(k);
    return out;
}

}  // namespace qpm
