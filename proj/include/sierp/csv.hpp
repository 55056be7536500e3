#pragma once

#include <string>
#include <vector>

namespace sierp {

/// Minimal CSV: header row, comma separators, LF line endings, no quoting
/// (fields never contain commas here). str() and parse() round-trip.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string str() const;
    static CsvTable parse(const std::string& text);

    void write(const std::string& path) const;
    static CsvTable read(const std::string& path);
};

std::string format_double(double v); // shortest round-trip representation

} // namespace sierp
