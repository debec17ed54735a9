#pragma once

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "limax/errors.hpp"

// Minimal CSV helpers for the library's own files. Fields never contain
// commas, quotes or newlines (identifiers are validated at creation).
namespace limax::csv {

inline std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t begin = 0;
    for (;;) {
        const auto comma = line.find(',', begin);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(begin));
            return fields;
        }
        fields.push_back(line.substr(begin, comma - begin));
        begin = comma + 1;
    }
}

inline bool read_line(std::istream& in, std::string& line) {
    if (!std::getline(in, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
}

template <typename Int>
Int parse_int(std::string_view field, std::string_view what) {
    Int value{};
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw CorruptionError(std::string(what) + ": bad integer '" + std::string(field) + "'");
    return value;
}

inline double parse_real(std::string_view field, std::string_view what) {
    const std::string s(field);
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size())
        throw CorruptionError(std::string(what) + ": bad number '" + s + "'");
    return v;
}

/// Round-trip exact decimal rendering.
inline std::string real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string real(const std::optional<double>& v) { return v ? real(*v) : std::string(); }

inline bool valid_identifier(std::string_view id) {
    if (id.empty()) return false;
    for (char c : id)
        if (c == ',' || c == '"' || c == '\n' || c == '\r') return false;
    return true;
}

} // namespace limax::csv
