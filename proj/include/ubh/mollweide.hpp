#pragma once

#include "ubh/grid.hpp"

namespace ubh {

// Mollweide pseudocylindrical equal-area projection on a sphere, central
// meridian 0. Forward maps (lon, lat) in degrees to meters via the auxiliary
// angle theta with 2*theta + sin(2*theta) = pi * sin(lat):
//   x = R * (2*sqrt(2)/pi) * lambda * cos(theta)
//   y = R * sqrt(2) * sin(theta)

inline constexpr double deg2rad(double d) { return d * M_PI / 180.0; }
inline constexpr double rad2deg(double r) { return r * 180.0 / M_PI; }

// Solves the auxiliary-angle equation by Newton iteration with a bisection
// fallback; residual below 1e-12 within 50 iterations for |lat| <= pi/2.
double solve_theta(double lat_rad);

struct ProjectedXy {
    double x = 0.0;
    double y = 0.0;
};

ProjectedXy mollweide_forward(const GeoPoint& p, double radius = kDefaultSphereRadius);

// Inverse; throws DomainError for points outside the projection ellipse
// (|y| > sqrt(2)*R or a recovered |lambda| > pi).
GeoPoint mollweide_inverse(double x, double y, double radius = kDefaultSphereRadius);

}  // namespace ubh
