#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace topicsent {

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    int column(std::string_view name) const;  // -1 when absent
};

/// RFC 4180 parse: quoted fields may contain commas, escaped quotes ("")
/// and embedded newlines. Accepts both \n and \r\n record separators.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

/// Read a CSV file with a header row. Records that are not valid UTF-8 are
/// re-decoded as Latin-1 (cp bytes 0x80..0xFF mapped to U+0080..U+00FF).
CsvTable read_csv_file(const std::string& path);

void write_csv_file(const std::string& path, const CsvTable& table);

bool valid_utf8(std::string_view s);
std::string latin1_to_utf8(std::string_view s);

std::string trim(std::string_view s);

}  // namespace topicsent
