#include "ubh/csv.hpp"

#include <fstream>

#include "ubh/common.hpp"

namespace ubh {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"' && field.empty()) {
            quoted = true;
        } else if (c == ',') {
            out.push_back(field);
            field.clear();
        } else if (c != '\r') {
            field += c;
        }
    }
    out.push_back(field);
    return out;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

CsvFile read_csv(const std::string& path, const std::vector<std::string>& expected_header) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("read_csv: cannot open " + path);
    CsvFile f;
    std::string line;
    long line_no = 0;
    if (!std::getline(in, line)) throw ParseError(path, 1, "empty file, expected CSV header");
    ++line_no;
    f.header = split_csv_line(line);
    if (f.header != expected_header) {
        std::string want;
        for (std::size_t i = 0; i < expected_header.size(); ++i)
            want += (i ? "," : "") + expected_header[i];
        throw ParseError(path, 1, "unexpected header, want '" + want + "'");
    }
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        auto row = split_csv_line(line);
        if (row.size() != f.header.size())
            throw ParseError(path, line_no,
                             "expected " + std::to_string(f.header.size()) + " fields, got " +
                                 std::to_string(row.size()));
        f.rows.push_back(std::move(row));
        f.row_lines.push_back(line_no);
    }
    return f;
}

}  // namespace ubh
