#pragma once

#include <string>
#include <vector>

#include "jlab/rational.hpp"

namespace jlab {

// RFC-4180 quoting, LF line endings.
inline std::string csv_escape(const std::string& field) {
    bool needs_quote = field.find_first_of(",\"\n") != std::string::npos;
    if (!needs_quote) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

inline std::string csv_line(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += csv_escape(fields[i]);
    }
    out += '\n';
    return out;
}

} // namespace jlab
