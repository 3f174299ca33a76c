#include "ubh/sampler.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include "ubh/csv.hpp"
#include "ubh/mollweide.hpp"

namespace ubh {

std::vector<Footprint> filter_footprints(const std::vector<Footprint>& fps, SampleTallies* tallies,
                                         double sensitivity_min) {
    std::vector<Footprint> kept;
    kept.reserve(fps.size());
    for (const Footprint& fp : fps) {
        if (tallies) ++tallies->total;
        if (fp.quality_flag != 1) {
            if (tallies) ++tallies->dropped_quality;
            continue;
        }
        if (fp.sensitivity < sensitivity_min) {
            if (tallies) ++tallies->dropped_sensitivity;
            continue;
        }
        if (fp.degrade_flag != 0) {
            if (tallies) ++tallies->dropped_degrade;
            continue;
        }
        kept.push_back(fp);
    }
    return kept;
}

std::vector<Footprint> mask_to_settlement(const std::vector<Footprint>& fps,
                                          const Raster& settlement, SampleTallies* tallies) {
    std::vector<Footprint> kept;
    kept.reserve(fps.size());
    for (const Footprint& fp : fps) {
        ProjectedXy xy = mollweide_forward(fp.point, settlement.spec.sphere_radius);
        auto cell = cell_of_point(xy.x, xy.y, settlement.spec);
        if (!cell) {
            if (tallies) ++tallies->dropped_outside_grid;
            continue;
        }
        double v = settlement.at(cell->row, cell->col);
        if (!settlement.is_valid_value(v) || v != 1.0) {
            if (tallies) ++tallies->dropped_outside_settlement;
            continue;
        }
        kept.push_back(fp);
    }
    return kept;
}

std::optional<double> rh_composite(const Footprint& fp, bool high_vegetation, double min_height) {
    double h;
    if (high_vegetation) {
        if (!fp.has_rh85()) throw Error("rh_composite: malformed record, missing rh85");
        h = fp.rh85;
    } else {
        if (!fp.has_rh95()) throw Error("rh_composite: malformed record, missing rh95");
        h = fp.rh95;
    }
    if (h > min_height) return h;
    return std::nullopt;
}

bool vegetation_flag(const CellIndex& cell, const Raster& ndvi_p90, double threshold,
                     SampleTallies* tallies) {
    if (!ndvi_p90.in_range(cell.row, cell.col))
        throw UsageError("vegetation_flag: cell outside NDVI raster");
    double v = ndvi_p90.at(cell.row, cell.col);
    if (!ndvi_p90.is_valid_value(v)) {
        if (tallies) ++tallies->vegetation_nodata_cells;
        return false;
    }
    return v >= threshold;
}

std::vector<HeightSample> aggregate_samples(const std::vector<std::pair<CellIndex, double>>& heights,
                                            const GridSpec& spec, int min_count,
                                            SampleTallies* tallies) {
    spec.validate();
    std::map<CellIndex, std::vector<double>> per_cell;
    for (const auto& [cell, h] : heights) {
        if (cell.row < 0 || cell.row >= spec.n_rows || cell.col < 0 || cell.col >= spec.n_cols)
            throw UsageError("aggregate_samples: cell outside grid");
        per_cell[cell].push_back(h);
    }
    std::vector<HeightSample> out;
    for (auto& [cell, hs] : per_cell) {
        if (int(hs.size()) < min_count) {
            if (tallies) ++tallies->cells_below_min_count;
            continue;
        }
        std::sort(hs.begin(), hs.end());  // fixed accumulation order
        double sum = 0.0;
        for (double h : hs) sum += h;
        out.push_back(HeightSample{cell, sum / double(hs.size()), int(hs.size())});
    }
    return out;  // std::map iteration is already (row, col) sorted
}

std::vector<Footprint> read_footprints_csv(const std::string& path) {
    CsvFile f = read_csv(path, {"lon", "lat", "rh85", "rh95", "quality_flag", "degrade_flag",
                                "sensitivity", "date"});
    std::vector<Footprint> out;
    out.reserve(f.rows.size());
    for (std::size_t i = 0; i < f.rows.size(); ++i) {
        const auto& row = f.rows[i];
        long line = f.row_lines[i];
        double lon, lat, sens;
        long long quality, degrade;
        if (!try_parse_double(row[0], lon) || !try_parse_double(row[1], lat))
            throw ParseError(path, line, "unreadable lon/lat");
        double rh85 = std::numeric_limits<double>::quiet_NaN();
        double rh95 = std::numeric_limits<double>::quiet_NaN();
        if (!row[2].empty() && !try_parse_double(row[2], rh85))
            throw ParseError(path, line, "unreadable rh85");
        if (!row[3].empty() && !try_parse_double(row[3], rh95))
            throw ParseError(path, line, "unreadable rh95");
        if (!try_parse_long(row[4], quality) || (quality != 0 && quality != 1))
            throw ParseError(path, line, "quality_flag must be 0 or 1");
        if (!try_parse_long(row[5], degrade) || degrade < 0)
            throw ParseError(path, line, "degrade_flag must be a non-negative integer");
        if (!try_parse_double(row[6], sens) || sens < 0.0 || sens > 1.0)
            throw ParseError(path, line, "sensitivity must be in [0, 1]");
        Date date;
        if (!try_parse_date(row[7], date))
            throw ParseError(path, line, "date must be ISO-8601 YYYY-MM-DD");
        if (!std::isnan(rh85) && !std::isnan(rh95) && rh85 > rh95)
            throw ParseError(path, line, "rh85 must be <= rh95");
        Footprint fp;
        try {
            fp.point = GeoPoint(lon, lat);
        } catch (const DomainError& e) {
            throw ParseError(path, line, e.what());
        }
        fp.rh85 = rh85;
        fp.rh95 = rh95;
        fp.quality_flag = int(quality);
        fp.degrade_flag = int(degrade);
        fp.sensitivity = sens;
        fp.acquired = date;
        out.push_back(fp);
    }
    return out;
}

void write_footprints_csv(const std::vector<Footprint>& fps, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("write_footprints_csv: cannot open " + path);
    out << "lon,lat,rh85,rh95,quality_flag,degrade_flag,sensitivity,date\n";
    for (const Footprint& fp : fps) {
        out << format_double(fp.point.lon()) << ',' << format_double(fp.point.lat()) << ','
            << (fp.has_rh85() ? format_double(fp.rh85) : "") << ','
            << (fp.has_rh95() ? format_double(fp.rh95) : "") << ',' << fp.quality_flag << ','
            << fp.degrade_flag << ',' << format_double(fp.sensitivity) << ','
            << format_date(fp.acquired) << '\n';
    }
    if (!out) throw Error("write_footprints_csv: write failed for " + path);
}

std::vector<HeightSample> read_samples_csv(const std::string& path) {
    CsvFile f = read_csv(path, {"row", "col", "mean_height", "count"});
    std::vector<HeightSample> out;
    out.reserve(f.rows.size());
    for (std::size_t i = 0; i < f.rows.size(); ++i) {
        const auto& row = f.rows[i];
        long line = f.row_lines[i];
        long long r, c, n;
        double h;
        if (!try_parse_long(row[0], r) || !try_parse_long(row[1], c))
            throw ParseError(path, line, "unreadable row/col");
        if (!try_parse_double(row[2], h)) throw ParseError(path, line, "unreadable mean_height");
        if (!try_parse_long(row[3], n)) throw ParseError(path, line, "unreadable count");
        if (n < 3) throw ParseError(path, line, "count must be >= 3");
        if (!(h > 2.5)) throw ParseError(path, line, "mean_height must be > 2.5");
        out.push_back(HeightSample{CellIndex{int(r), int(c)}, h, int(n)});
    }
    return out;
}

void write_samples_csv(const std::vector<HeightSample>& samples, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("write_samples_csv: cannot open " + path);
    out << "row,col,mean_height,count\n";
    for (const HeightSample& s : samples)
        out << s.cell.row << ',' << s.cell.col << ',' << format_double(s.mean_height) << ','
            << s.count << '\n';
    if (!out) throw Error("write_samples_csv: write failed for " + path);
}

}  // namespace ubh
