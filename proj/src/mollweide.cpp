#include "ubh/mollweide.hpp"

#include <cmath>

namespace ubh {

namespace {
constexpr double kResidualTol = 1e-13;
constexpr int kMaxIterations = 50;
}  // namespace

double solve_theta(double lat_rad) {
    if (!(std::fabs(lat_rad) <= M_PI / 2 + 1e-12))
        throw DomainError("solve_theta: |lat| must be <= pi/2");
    if (lat_rad == 0.0) return 0.0;
    // 2*theta + sin(2*theta) is exactly pi*sin(lat) at the poles.
    if (std::fabs(lat_rad) >= M_PI / 2) return std::copysign(M_PI / 2, lat_rad);

    const double target = M_PI * std::sin(lat_rad);
    double lo = -M_PI / 2, hi = M_PI / 2;
    double theta = lat_rad;
    for (int it = 0; it < kMaxIterations; ++it) {
        double f = 2.0 * theta + std::sin(2.0 * theta) - target;
        if (std::fabs(f) < kResidualTol) return theta;
        // f is monotone increasing in theta.
        if (f < 0)
            lo = theta;
        else
            hi = theta;
        double fp = 2.0 + 2.0 * std::cos(2.0 * theta);
        double next = theta - f / fp;
        if (!(fp > 1e-12) || !(next > lo && next < hi)) next = 0.5 * (lo + hi);
        theta = next;
    }
    double f = 2.0 * theta + std::sin(2.0 * theta) - target;
    if (std::fabs(f) < kResidualTol) return theta;
    throw Error("solve_theta: no convergence after 50 iterations");
}

ProjectedXy mollweide_forward(const GeoPoint& p, double radius) {
    if (radius <= 0) throw UsageError("mollweide_forward: radius must be > 0");
    double lambda = deg2rad(p.lon());
    double theta = solve_theta(deg2rad(p.lat()));
    ProjectedXy out;
    out.x = radius * (2.0 * std::sqrt(2.0) / M_PI) * lambda * std::cos(theta);
    out.y = radius * std::sqrt(2.0) * std::sin(theta);
    return out;
}

GeoPoint mollweide_inverse(double x, double y, double radius) {
    if (radius <= 0) throw UsageError("mollweide_inverse: radius must be > 0");
    double s = y / (radius * std::sqrt(2.0));
    if (std::fabs(s) > 1.0 + 1e-12)
        throw DomainError("mollweide_inverse: point outside projection ellipse (|y| > sqrt(2)*R)");
    s = std::clamp(s, -1.0, 1.0);
    double theta = std::asin(s);

    double sin_lat = (2.0 * theta + std::sin(2.0 * theta)) / M_PI;
    double lat = rad2deg(std::asin(std::clamp(sin_lat, -1.0, 1.0)));

    double cos_theta = std::cos(theta);
    double lon;
    if (cos_theta < 1e-12) {
        // At the poles the ellipse degenerates to a point.
        if (std::fabs(x) > 1e-3)
            throw DomainError("mollweide_inverse: point outside projection ellipse (polar row)");
        lon = 0.0;
    } else {
        double lambda = M_PI * x / (radius * 2.0 * std::sqrt(2.0) * cos_theta);
        if (std::fabs(lambda) > M_PI * (1.0 + 1e-9))
            throw DomainError("mollweide_inverse: point outside projection ellipse (|lambda| > pi)");
        lon = rad2deg(std::clamp(lambda, -M_PI, M_PI));
    }
    return GeoPoint(lon, lat);
}

}  // namespace ubh
