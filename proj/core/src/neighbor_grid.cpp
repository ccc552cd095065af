#include "memesim/neighbor_grid.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "memesim/error.hpp"

namespace memesim {

namespace {

// Cells come out slightly wider than the radius so floating-point rounding
// at cell boundaries can never push a true neighbor two cells away.
int cells_along(double extent, double radius) {
    const double n = std::floor(extent / radius * (1.0 - 1e-9));
    return static_cast<int>(std::clamp(n, 1.0, 32768.0));
}

}  // namespace

NeighborGrid::NeighborGrid(WorldExtent world, double radius)
    : world_(world), radius_(radius) {
    if (!(world.width > 0.0) || !(world.height > 0.0) || !(radius > 0.0)) {
        throw InputError("neighbor grid needs a positive world extent and radius");
    }
    nx_ = cells_along(world.width, radius);
    ny_ = cells_along(world.height, radius);
    cell_w_ = world.width / nx_;
    cell_h_ = world.height / ny_;
    starts_.assign(static_cast<std::size_t>(nx_) * ny_ + 1, 0);
}

int NeighborGrid::cell_of(double coord, double cell_size, int cells) const noexcept {
    const int c = static_cast<int>(coord / cell_size);
    return std::clamp(c, 0, cells - 1);
}

void NeighborGrid::rebuild(std::span<const Position> points) {
    points_ = points;
    const std::size_t cell_count = static_cast<std::size_t>(nx_) * ny_;
    std::fill(starts_.begin(), starts_.end(), 0);
    point_cell_.resize(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto cell = static_cast<std::uint32_t>(
            cell_of(points[i].y, cell_h_, ny_) * nx_ + cell_of(points[i].x, cell_w_, nx_));
        point_cell_[i] = cell;
        ++starts_[cell + 1];
    }
    for (std::size_t c = 0; c < cell_count; ++c) {
        starts_[c + 1] += starts_[c];
    }
    items_.resize(points.size());
    std::vector<std::uint32_t> cursor(starts_.begin(), starts_.end() - 1);
    for (std::size_t i = 0; i < points.size(); ++i) {
        items_[cursor[point_cell_[i]]++] = static_cast<std::uint32_t>(i);
    }
}

void NeighborGrid::query(Position center, std::vector<std::uint32_t>& out) const {
    out.clear();
    const int cx = cell_of(center.x, cell_w_, nx_);
    const int cy = cell_of(center.y, cell_h_, ny_);

    auto axis_cells = [](int c, int n, std::array<int, 3>& buf) -> int {
        if (n < 3) {
            for (int i = 0; i < n; ++i) {
                buf[i] = i;
            }
            return n;
        }
        buf = {(c + n - 1) % n, c, (c + 1) % n};
        return 3;
    };
    std::array<int, 3> xs{};
    std::array<int, 3> ys{};
    const int nxs = axis_cells(cx, nx_, xs);
    const int nys = axis_cells(cy, ny_, ys);

    for (int j = 0; j < nys; ++j) {
        for (int i = 0; i < nxs; ++i) {
            const std::size_t cell = static_cast<std::size_t>(ys[j]) * nx_ + xs[i];
            for (std::uint32_t k = starts_[cell]; k < starts_[cell + 1]; ++k) {
                const std::uint32_t idx = items_[k];
                if (torus_distance(center, points_[idx], world_) <= radius_) {
                    out.push_back(idx);
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
}

}  // namespace memesim
