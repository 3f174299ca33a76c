#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "ubh/common.hpp"

namespace ubh {

// Equal-area grid definition. The origin is the upper-left corner in
// projected meters; rows grow southward, columns grow eastward.
struct GridSpec {
    double origin_x = 0.0;
    double origin_y = 0.0;
    double cell_size = 150.0;
    int n_rows = 1;
    int n_cols = 1;
    double sphere_radius = kDefaultSphereRadius;

    bool operator==(const GridSpec&) const = default;

    void validate() const {
        if (cell_size <= 0.0) throw UsageError("GridSpec: cell_size must be > 0");
        if (n_rows < 1 || n_cols < 1) throw UsageError("GridSpec: n_rows and n_cols must be >= 1");
        if (sphere_radius <= 0.0) throw UsageError("GridSpec: sphere_radius must be > 0");
    }

    std::size_t cell_count() const { return std::size_t(n_rows) * std::size_t(n_cols); }

    double cell_center_x(int col) const { return origin_x + (col + 0.5) * cell_size; }
    double cell_center_y(int row) const { return origin_y - (row + 0.5) * cell_size; }
};

inline void require_compatible(const GridSpec& a, const GridSpec& b, const char* context) {
    if (!(a == b)) throw UsageError(std::string(context) + ": incompatible grid specs");
}

struct CellIndex {
    int row = 0;
    int col = 0;
    auto operator<=>(const CellIndex&) const = default;
};

// Half-open cells anchored at the upper-left corner: a point exactly on a
// cell's right or bottom edge belongs to the next cell. Returns nullopt for
// points outside the grid.
std::optional<CellIndex> cell_of_point(double x, double y, const GridSpec& spec);

// Single-band value plane with a nodata sentinel. Value-semantic.
struct Raster {
    GridSpec spec;
    double nodata = kDefaultNodata;
    std::vector<double> values;

    Raster() : values(1, kDefaultNodata) {}
    explicit Raster(const GridSpec& s, double fill = kDefaultNodata, double nd = kDefaultNodata)
        : spec(s), nodata(nd), values(s.cell_count(), fill) {
        spec.validate();
    }

    double& at(int row, int col) { return values[std::size_t(row) * spec.n_cols + col]; }
    double at(int row, int col) const { return values[std::size_t(row) * spec.n_cols + col]; }

    bool in_range(int row, int col) const {
        return row >= 0 && row < spec.n_rows && col >= 0 && col < spec.n_cols;
    }

    bool is_valid_value(double v) const { return std::isfinite(v) && v != nodata; }
    bool valid_at(int row, int col) const { return is_valid_value(at(row, col)); }
};

// Geographic point in decimal degrees; construction checks bounds.
class GeoPoint {
public:
    GeoPoint(double lon_deg, double lat_deg) : lon_(lon_deg), lat_(lat_deg) {
        if (!(lon_deg >= -180.0 && lon_deg <= 180.0))
            throw DomainError("GeoPoint: longitude out of [-180, 180]: " + format_double(lon_deg));
        if (!(lat_deg >= -90.0 && lat_deg <= 90.0))
            throw DomainError("GeoPoint: latitude out of [-90, 90]: " + format_double(lat_deg));
    }
    double lon() const { return lon_; }
    double lat() const { return lat_; }

private:
    double lon_;
    double lat_;
};

// ESRI-style ASCII grid I/O. Header keys are uppercase, in fixed order
// NCOLS NROWS XLLCORNER YLLCORNER CELLSIZE NODATA_VALUE, one space between
// key and value; data rows follow top row first. The file stores the
// lower-left corner, so origin_y = YLLCORNER + NROWS * CELLSIZE. The sphere
// radius is not part of the format; readers get the default radius.
void write_ascii_grid(const Raster& r, const std::string& path);
Raster read_ascii_grid(const std::string& path);

}  // namespace ubh
