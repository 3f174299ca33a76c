#include "ubh/glcm.hpp"

#include <algorithm>
#include <cmath>

namespace ubh {

std::vector<std::int16_t> quantize_levels(const Raster& band, int levels) {
    if (levels < 2) throw ConfigError("glcm: levels must be >= 2");
    std::vector<std::int16_t> q(band.values.size(), -1);
    double lo = 0.0, hi = 0.0;
    bool any = false;
    for (double v : band.values) {
        if (!band.is_valid_value(v)) continue;
        if (!any) {
            lo = hi = v;
            any = true;
        } else {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    if (!any) return q;
    const double span = hi - lo;
    for (std::size_t i = 0; i < band.values.size(); ++i) {
        double v = band.values[i];
        if (!band.is_valid_value(v)) continue;
        int g = span > 0.0 ? int(std::floor((v - lo) / span * levels)) : 0;
        q[i] = std::int16_t(std::clamp(g, 0, levels - 1));
    }
    return q;
}

GlcmOutputs glcm_features(const Raster& band, const GlcmParams& params) {
    if (params.levels < 2) throw ConfigError("glcm: levels must be >= 2");
    if (params.window < 2) throw ConfigError("glcm: window must be >= 2");

    const GridSpec& spec = band.spec;
    const int rows = spec.n_rows, cols = spec.n_cols, w = params.window;
    const int anchor = (w + 1) / 2 - 1;  // ceil(w/2) - 1

    const std::vector<std::int16_t> q = quantize_levels(band, params.levels);

    GlcmOutputs out{Raster(spec, band.nodata, band.nodata), Raster(spec, band.nodata, band.nodata),
                    Raster(spec, band.nodata, band.nodata), Raster(spec, band.nodata, band.nodata)};

    // Per-direction pair aggregates; the full matrix is never materialized.
    // For unordered pair (a, b) counted once, the symmetric ordered-pair
    // matrix has N = 2n entries, so e.g. contrast = sum (a-b)^2 / n.
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (q[std::size_t(r) * cols + c] < 0) continue;  // invalid center

            const int r0 = std::max(0, r - anchor), r1 = std::min(rows, r - anchor + w);
            const int c0 = std::max(0, c - anchor), c1 = std::min(cols, c - anchor + w);

            double mean_acc = 0, sq_acc = 0, con_acc = 0, dis_acc = 0;
            int n_dirs = 0;
            for (int d = 0; d < 4; ++d) {
                if (!params.directions[d]) continue;
                const auto [dr, dc] = kGlcmOffsets[d];
                long n = 0;
                double s_ij = 0, s_sq = 0, s_con = 0, s_dis = 0;
                for (int pr = r0; pr < r1; ++pr) {
                    const int qr = pr + dr;
                    if (qr < r0 || qr >= r1) continue;
                    const std::int16_t* row_p = q.data() + std::size_t(pr) * cols;
                    const std::int16_t* row_q = q.data() + std::size_t(qr) * cols;
                    for (int pc = c0; pc < c1; ++pc) {
                        const int qc = pc + dc;
                        if (qc < c0 || qc >= c1) continue;
                        const int a = row_p[pc], b = row_q[qc];
                        if (a < 0 || b < 0) continue;
                        ++n;
                        s_ij += a + b;
                        s_sq += double(a) * a + double(b) * b;
                        const int diff = a - b;
                        s_con += double(diff) * diff;
                        s_dis += std::abs(diff);
                    }
                }
                if (n == 0) continue;
                ++n_dirs;
                const double inv2n = 1.0 / (2.0 * double(n));
                mean_acc += s_ij * inv2n;
                sq_acc += s_sq * inv2n;
                con_acc += s_con / double(n);
                dis_acc += s_dis / double(n);
            }
            if (n_dirs == 0) continue;
            const double mean = mean_acc / n_dirs;
            const double var = std::max(0.0, sq_acc / n_dirs - mean * mean);
            out.mean.at(r, c) = mean;
            out.variance.at(r, c) = var;
            out.contrast.at(r, c) = con_acc / n_dirs;
            out.dissimilarity.at(r, c) = dis_acc / n_dirs;
        }
    }
    return out;
}

}  // namespace ubh
