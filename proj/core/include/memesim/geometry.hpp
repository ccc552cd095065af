#pragma once

namespace memesim {

/// A point on the W x H torus; coordinates stay in [0, W) x [0, H).
struct Position {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Position&, const Position&) = default;
};

struct WorldExtent {
    double width = 200.0;
    double height = 200.0;
};

/// Moves `p` by (dx, dy) and wraps the result back onto the torus.
Position torus_displace(Position p, double dx, double dy, WorldExtent world);

/// Shortest Euclidean distance between `p` and `q` over all wrapped images.
double torus_distance(Position p, Position q, WorldExtent world);

/// Squared form of torus_distance, used by hot loops to skip the sqrt.
double torus_distance_squared(Position p, Position q, WorldExtent world);

}  // namespace memesim
