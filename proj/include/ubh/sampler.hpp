#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ubh/grid.hpp"

namespace ubh {

// One spaceborne-lidar shot with its relative-height metrics and quality
// fields. Missing RH metrics are stored as NaN.
struct Footprint {
    GeoPoint point{0.0, 0.0};
    double rh85 = std::numeric_limits<double>::quiet_NaN();
    double rh95 = std::numeric_limits<double>::quiet_NaN();
    int quality_flag = 0;    // 1 = usable
    int degrade_flag = 0;    // > 0 = degraded
    double sensitivity = 0.0;
    Date acquired;

    bool has_rh85() const { return !std::isnan(rh85); }
    bool has_rh95() const { return !std::isnan(rh95); }
};

// One 150-m cell's aggregated height sample: the regression target.
struct HeightSample {
    CellIndex cell;
    double mean_height = 0.0;  // > 2.5 m by construction
    int count = 0;             // >= 3 by construction
};

// Drop counters for the filtering funnel. A footprint removed by
// filter_footprints is counted under the first rule it violates, in the
// order quality, sensitivity, degrade.
struct SampleTallies {
    long total = 0;
    long dropped_quality = 0;
    long dropped_sensitivity = 0;
    long dropped_degrade = 0;
    long dropped_outside_grid = 0;
    long dropped_outside_settlement = 0;
    long rejected_low_height = 0;
    long cells_below_min_count = 0;
    long vegetation_nodata_cells = 0;
};

// Keeps footprints with quality_flag = 1, sensitivity >= 0.9 and
// degrade_flag = 0; order preserved. Idempotent.
std::vector<Footprint> filter_footprints(const std::vector<Footprint>& fps,
                                         SampleTallies* tallies = nullptr,
                                         double sensitivity_min = 0.9);

// Keeps footprints whose projected location lands on a settlement cell of
// value 1. Footprints projecting outside the raster are dropped and tallied
// separately from those landing on non-settlement (nodata) cells.
std::vector<Footprint> mask_to_settlement(const std::vector<Footprint>& fps,
                                          const Raster& settlement,
                                          SampleTallies* tallies = nullptr);

// Composite RH index for one footprint: RH95 by default, RH85 in high
// vegetation. Returns nullopt when the height is not strictly above
// min_height; throws when the required metric is missing.
std::optional<double> rh_composite(const Footprint& fp, bool high_vegetation,
                                   double min_height = 2.5);

// A cell counts as high-vegetation when its NDVI p90 is at or above the
// threshold (inclusive). Nodata NDVI means not vegetated, with a
// diagnostics count.
bool vegetation_flag(const CellIndex& cell, const Raster& ndvi_p90, double threshold = 0.5,
                     SampleTallies* tallies = nullptr);

// One HeightSample per cell with at least min_count contributing heights;
// output sorted by (row, col). Per-cell heights are accumulated in sorted
// order, so the result is invariant under input permutation.
std::vector<HeightSample> aggregate_samples(const std::vector<std::pair<CellIndex, double>>& heights,
                                            const GridSpec& spec, int min_count = 3,
                                            SampleTallies* tallies = nullptr);

// CSV formats (see README): footprints
// `lon,lat,rh85,rh95,quality_flag,degrade_flag,sensitivity,date`, samples
// `row,col,mean_height,count`. Empty rh fields mean missing.
std::vector<Footprint> read_footprints_csv(const std::string& path);
void write_footprints_csv(const std::vector<Footprint>& fps, const std::string& path);
std::vector<HeightSample> read_samples_csv(const std::string& path);
void write_samples_csv(const std::vector<HeightSample>& samples, const std::string& path);

}  // namespace ubh
