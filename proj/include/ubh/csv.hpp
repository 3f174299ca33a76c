#pragma once

#include <string>
#include <vector>

namespace ubh {

// Minimal CSV support: comma separator, optional double-quote quoting with
// "" as the embedded-quote escape. Enough for the formats this tool reads.
std::vector<std::string> split_csv_line(const std::string& line);

std::string csv_escape(const std::string& field);

struct CsvFile {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<long> row_lines;  // 1-based source line of each row
};

// Reads the whole file; first line is the header. Throws ParseError when the
// header does not match `expected_header` (prefix match: extra trailing
// columns in the file are rejected, missing ones too).
CsvFile read_csv(const std::string& path, const std::vector<std::string>& expected_header);

}  // namespace ubh
