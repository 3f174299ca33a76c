#include "ubh/grid.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace ubh {

std::optional<CellIndex> cell_of_point(double x, double y, const GridSpec& spec) {
    spec.validate();
    if (!std::isfinite(x) || !std::isfinite(y)) return std::nullopt;
    double fr = std::floor((spec.origin_y - y) / spec.cell_size);
    double fc = std::floor((x - spec.origin_x) / spec.cell_size);
    if (fr < 0 || fc < 0 || fr >= spec.n_rows || fc >= spec.n_cols) return std::nullopt;
    return CellIndex{int(fr), int(fc)};
}

namespace {

// Reads one header line "KEY value", enforcing key and order.
double read_header_value(std::istream& in, const std::string& path, long& line,
                         const std::string& key) {
    std::string text;
    if (!std::getline(in, text))
        throw ParseError(path, line, "missing header line, expected " + key);
    ++line;
    std::istringstream ls(text);
    std::string k, v, extra;
    ls >> k >> v;
    if (k != key)
        throw ParseError(path, line - 1, "malformed header: expected " + key + ", got '" + k + "'");
    double out;
    if (!try_parse_double(v, out))
        throw ParseError(path, line - 1, "malformed header: unreadable " + key + " value '" + v + "'");
    if (ls >> extra)
        throw ParseError(path, line - 1, "malformed header: trailing content after " + key);
    return out;
}

}  // namespace

void write_ascii_grid(const Raster& r, const std::string& path) {
    r.spec.validate();
    if (r.values.size() != r.spec.cell_count())
        throw UsageError("write_ascii_grid: value count does not match spec");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("write_ascii_grid: cannot open " + path);

    const GridSpec& s = r.spec;
    double yll = s.origin_y - double(s.n_rows) * s.cell_size;
    out << "NCOLS " << s.n_cols << "\n";
    out << "NROWS " << s.n_rows << "\n";
    out << "XLLCORNER " << format_double(s.origin_x) << "\n";
    out << "YLLCORNER " << format_double(yll) << "\n";
    out << "CELLSIZE " << format_double(s.cell_size) << "\n";
    out << "NODATA_VALUE " << format_double(r.nodata) << "\n";
    for (int row = 0; row < s.n_rows; ++row) {
        for (int col = 0; col < s.n_cols; ++col) {
            if (col) out << ' ';
            double v = r.at(row, col);
            out << format_double(std::isfinite(v) ? v : r.nodata);
        }
        out << '\n';
    }
    if (!out) throw Error("write_ascii_grid: write failed for " + path);
}

Raster read_ascii_grid(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("read_ascii_grid: cannot open " + path);
    long line = 1;

    double ncols = read_header_value(in, path, line, "NCOLS");
    double nrows = read_header_value(in, path, line, "NROWS");
    double xll = read_header_value(in, path, line, "XLLCORNER");
    double yll = read_header_value(in, path, line, "YLLCORNER");
    double cell = read_header_value(in, path, line, "CELLSIZE");
    double nodata = read_header_value(in, path, line, "NODATA_VALUE");

    if (ncols < 1 || ncols != std::floor(ncols))
        throw ParseError(path, 1, "malformed header: NCOLS must be a positive integer");
    if (nrows < 1 || nrows != std::floor(nrows))
        throw ParseError(path, 2, "malformed header: NROWS must be a positive integer");
    if (cell <= 0) throw ParseError(path, 5, "malformed header: CELLSIZE must be > 0");

    GridSpec spec;
    spec.n_cols = int(ncols);
    spec.n_rows = int(nrows);
    spec.cell_size = cell;
    spec.origin_x = xll;
    spec.origin_y = yll + double(spec.n_rows) * cell;

    Raster r(spec, nodata, nodata);
    std::string text;
    for (int row = 0; row < spec.n_rows; ++row) {
        if (!std::getline(in, text))
            throw ParseError(path, line, "value-count mismatch: expected " +
                                             std::to_string(spec.n_rows) + " data rows, got " +
                                             std::to_string(row));
        ++line;
        std::istringstream ls(text);
        std::string tok;
        for (int col = 0; col < spec.n_cols; ++col) {
            if (!(ls >> tok))
                throw ParseError(path, line - 1, "value-count mismatch: row has fewer than " +
                                                     std::to_string(spec.n_cols) + " values");
            double v;
            if (!try_parse_double(tok, v))
                throw ParseError(path, line - 1, "unreadable number '" + tok + "'");
            r.at(row, col) = v;
        }
        if (ls >> tok)
            throw ParseError(path, line - 1, "value-count mismatch: row has more than " +
                                                 std::to_string(spec.n_cols) + " values");
    }
    while (std::getline(in, text)) {
        ++line;
        std::istringstream ls(text);
        std::string tok;
        if (ls >> tok)
            throw ParseError(path, line - 1, "value-count mismatch: extra data after last row");
    }
    return r;
}

}  // namespace ubh
