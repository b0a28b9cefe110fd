#pragma once

#include <cstdio>
#include <ostream>
#include <string>

namespace ldgm {

// Floats in CSV output carry 12 significant digits, always formatted
// through here so reruns are byte-identical.
inline std::string csv_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

// Every generated file starts with one '#' comment line naming the tool
// version and the fully-resolved invocation (never a timestamp).
inline void write_provenance(std::ostream& out, const std::string& provenance) {
    out << "# " << provenance << '\n';
}

}  // namespace ldgm
