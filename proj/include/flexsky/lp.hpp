#pragma once

#include "flexsky/core.hpp"

namespace flexsky {

/// Margins at or below this threshold do not count as strictly positive.
inline constexpr double kPoEpsTol = 1e-9;

enum class LpStatus { optimal, unbounded, infeasible };

/// Margin-maximization problem deciding potential optimality of a
/// candidate: maximize eps subject to w lying in the constrained weight
/// simplex and (s - t)·w >= eps for every competitor s.  The problem is
/// feasible whenever the weight polytope is non-empty, and unbounded only
/// when there are no competitors.
struct LpProblem {
    int dim = 0;
    std::vector<double> candidate;
    std::vector<std::vector<double>> competitors;
    std::vector<std::vector<double>> constraint_rows;
};

struct LpSolution {
    LpStatus status = LpStatus::optimal;
    WeightVector w;    // maximizing weights; empty unless optimal
    double eps = 0.0;  // +infinity when unbounded
};

/// Dense two-phase simplex applied to the dual of the margin problem.  The
/// dual has dim+1 rows regardless of the competitor count, and its optimal
/// row multipliers are exactly (eps*, w*), so large competitor sets stay
/// cheap.  Throws std::runtime_error if the pivot iteration limit is hit.
LpSolution lp_solve(const LpProblem& p);

}  // namespace flexsky
