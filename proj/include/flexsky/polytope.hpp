#pragma once

#include "flexsky/core.hpp"

namespace flexsky {

/// Feasibility and deduplication tolerance for vertex enumeration.
inline constexpr double kVertexTol = 1e-9;

/// Extreme points of a weight polytope, lexicographically sorted.
struct PolytopeVertices {
    std::vector<WeightVector> vertices;
};

/// Enumerates the extreme points of {w : w >= 0, sum(w) = 1, a·w >= 0 for
/// every row a}.  Every (d-1)-subset of the inequalities (constraint rows
/// plus the axis conditions w_i >= 0) is made tight and solved against the
/// simplex equality; singular subsets are skipped, infeasible solutions are
/// rejected and near-duplicates collapse to one vertex.
PolytopeVertices enumerate_vertices(const WeightConstraintSet& c);

/// Canonical interior presorting weight: the vertex centroid, renormalized
/// to sum exactly 1.
WeightVector sorting_weight(const PolytopeVertices& v);

namespace detail {
/// Core enumeration on raw rows; empty result means the polytope is empty.
std::vector<WeightVector> enumerate_vertices_raw(int dim,
                                                 const std::vector<std::vector<double>>& rows);
}

}  // namespace flexsky
