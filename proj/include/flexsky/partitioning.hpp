#pragma once

#include <cstdint>
#include <string>

#include "flexsky/core.hpp"

namespace flexsky {

enum class Strategy { grid, angular, sliced, random };

const char* to_string(Strategy s);
Strategy parse_strategy(const std::string& name);

/// Partition assignment for every tuple of a dataset, in dataset order.
/// p is the effective partition count actually produced: grid and angular
/// round the requested count down to the largest m^d (resp. m^(d-1)) that
/// fits, where m is the per-dimension slice count.
struct PartitionPlan {
    Strategy strategy = Strategy::sliced;
    int p = 1;
    int m = 1;  // slices per dimension; 1 for sliced/random
    std::vector<int> assignment;
};

/// Axis-aligned bounding box of one grid cell.
struct GridCellBounds {
    std::vector<double> min_corner;
    std::vector<double> max_corner;
    bool occupied = false;
};

/// Cell index of t in the regular m^d grid over [0,1]^d, counting cells
/// along the first attribute fastest.  Values of exactly 1 clamp into the
/// last slice.
int grid_assign(const Tuple& t, int m);

/// Cell index of t in the angular grid: the d-1 hyperspherical inclination
/// angles of t, each in [0, pi/2], are cut into m equal arcs.
int angular_assign(const Tuple& t, int m);

/// Indices of cells whose entire box is classically dominated by the max
/// corner of some occupied cell; such cells cannot contain skyline (hence
/// non-dominated) tuples.  Ascending order.
std::vector<int> grid_filter(const std::vector<GridCellBounds>& cells);

/// Equal-depth slices along one attribute; sizes differ by at most one.
PartitionPlan sliced_assign(const Dataset& r, int p, int slice_dim = 0);

/// Seeded uniform assignment, independent of the tuple values.
PartitionPlan random_assign(const Dataset& r, int p, std::uint64_t seed);

PartitionPlan build_plan(const Dataset& r, Strategy s, int requested_p, int slice_dim,
                         std::uint64_t seed);

/// Cell boxes and occupancy for a grid plan.
std::vector<GridCellBounds> make_grid_cells(const Dataset& r, const PartitionPlan& plan);

/// Largest m with m^d (resp. m^(d-1)) not exceeding the requested count.
int effective_grid_m(int requested_p, int dim);
int effective_angular_m(int requested_p, int dim);

}  // namespace flexsky
