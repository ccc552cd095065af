#include "memesim/geometry.hpp"

#include <cmath>

namespace memesim {

namespace {

double wrap(double v, double extent) {
    double r = std::fmod(v, extent);
    if (r < 0.0) {
        r += extent;
    }
    // r + extent can round up to extent for tiny negative r.
    if (r >= extent) {
        r = 0.0;
    }
    return r;
}

double axis_gap(double a, double b, double extent) {
    const double d = std::fabs(a - b);
    return std::fmin(d, extent - d);
}

}  // namespace

Position torus_displace(Position p, double dx, double dy, WorldExtent world) {
    return {wrap(p.x + dx, world.width), wrap(p.y + dy, world.height)};
}

double torus_distance_squared(Position p, Position q, WorldExtent world) {
    const double gx = axis_gap(p.x, q.x, world.width);
    const double gy = axis_gap(p.y, q.y, world.height);
    return gx * gx + gy * gy;
}

double torus_distance(Position p, Position q, WorldExtent world) {
    return std::sqrt(torus_distance_squared(p, q, world));
}

}  // namespace memesim
