#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "memesim/geometry.hpp"

namespace memesim {

/// Uniform bucket grid over the torus for fixed-radius neighbor queries.
///
/// Cells are at least `radius` wide along each axis, so every point within
/// `radius` of a query lies in the query cell or one of its eight wrapped
/// neighbors. Axes with fewer than three cells are scanned in full instead of
/// through the 3-wide stencil, which keeps tiny worlds free of duplicate hits.
class NeighborGrid {
public:
    NeighborGrid(WorldExtent world, double radius);

    /// Re-buckets all points. Indices into `points` are what queries return.
    void rebuild(std::span<const Position> points);

    /// Appends to `out` the index of every point with torus distance <= radius
    /// from `center` (the query point itself included if it is indexed),
    /// in ascending index order. `out` is cleared first.
    void query(Position center, std::vector<std::uint32_t>& out) const;

    int cells_x() const noexcept { return nx_; }
    int cells_y() const noexcept { return ny_; }
    double radius() const noexcept { return radius_; }

private:
    int cell_of(double coord, double cell_size, int cells) const noexcept;

    WorldExtent world_;
    double radius_;
    int nx_;
    int ny_;
    double cell_w_;
    double cell_h_;
    std::span<const Position> points_;
    // Counting-sort layout: indices of cell c live in items_[starts_[c], starts_[c+1]).
    std::vector<std::uint32_t> starts_;
    std::vector<std::uint32_t> items_;
    std::vector<std::uint32_t> point_cell_;
};

}  // namespace memesim
