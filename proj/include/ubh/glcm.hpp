#pragma once

#include <array>
#include <cstdint>

#include "ubh/grid.hpp"

namespace ubh {

// Gray-level co-occurrence textures over a sliding window.
//
// The band is first quantized to `levels` gray levels by global min-max
// linear binning over its valid pixels. For each output pixel a symmetric
// co-occurrence matrix is accumulated per distance-1 direction (0, 45, 90,
// 135 degrees) from the valid pixel pairs inside the window, each direction
// matrix is normalized to sum 1, and the direction matrices are averaged
// (over the directions that saw at least one pair). Features of the averaged
// matrix P:
//   glcm_mean     = sum_ij i * P(i,j)
//   glcm_variance = sum_ij (i - mean)^2 * P(i,j)
//   contrast      = sum_ij (i - j)^2 * P(i,j)
//   dissimilarity = sum_ij |i - j| * P(i,j)
//
// Even windows anchor with the target pixel at (ceil(w/2)-1, ceil(w/2)-1).
// Pixels whose own value is nodata, and windows with zero valid pairs,
// produce nodata in all four outputs.

struct GlcmParams {
    int window = 5;
    int levels = 32;
    // 0, 45, 90, 135 degrees; unit offsets (0,1), (1,-1), (1,0), (1,1).
    std::array<bool, 4> directions{true, true, true, true};
};

struct GlcmOutputs {
    Raster mean;
    Raster variance;
    Raster contrast;
    Raster dissimilarity;
};

// Quantized gray level per pixel, -1 where invalid. Constant bands map all
// valid pixels to level 0.
std::vector<std::int16_t> quantize_levels(const Raster& band, int levels);

GlcmOutputs glcm_features(const Raster& band, const GlcmParams& params);

inline constexpr std::array<std::pair<int, int>, 4> kGlcmOffsets{
    {{0, 1}, {1, -1}, {1, 0}, {1, 1}}};

}  // namespace ubh
