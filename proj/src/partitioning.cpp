#include "flexsky/partitioning.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "flexsky/detail/rng.hpp"

namespace flexsky {
namespace {

long long ipow(int base, int exp) {
    long long v = 1;
    for (int i = 0; i < exp; ++i) {
        v *= base;
        if (v > 1000000000LL) return v;  // far beyond any sane partition count
    }
    return v;
}

int largest_m(int requested_p, int exp) {
    int m = 1;
    while (ipow(m + 1, exp) <= requested_p) ++m;
    return m;
}

}  // namespace

const char* to_string(Strategy s) {
    switch (s) {
        case Strategy::grid: return "grid";
        case Strategy::angular: return "angular";
        case Strategy::sliced: return "sliced";
        case Strategy::random: return "random";
    }
    return "?";
}

Strategy parse_strategy(const std::string& name) {
    if (name == "grid") return Strategy::grid;
    if (name == "angular") return Strategy::angular;
    if (name == "sliced") return Strategy::sliced;
    if (name == "random") return Strategy::random;
    throw std::invalid_argument("unknown partitioning strategy: " + name);
}

int effective_grid_m(int requested_p, int dim) {
    if (requested_p < 1) throw std::invalid_argument("partition count must be >= 1");
    return largest_m(requested_p, dim);
}

int effective_angular_m(int requested_p, int dim) {
    if (requested_p < 1) throw std::invalid_argument("partition count must be >= 1");
    return largest_m(requested_p, dim - 1);
}

int grid_assign(const Tuple& t, int m) {
    if (m < 1) throw std::invalid_argument("grid_assign: m must be >= 1");
    long long idx = 0, stride = 1;
    for (const double v : t.values) {
        int cell = (int)(v * m);
        if (cell > m - 1) cell = m - 1;
        idx += (long long)cell * stride;
        stride *= m;
    }
    return (int)idx;
}

int angular_assign(const Tuple& t, int m) {
    if (m < 1) throw std::invalid_argument("angular_assign: m must be >= 1");
    const int d = (int)t.values.size();
    std::vector<double> suffix(d + 1, 0.0);
    for (int i = d - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + t.values[i] * t.values[i];
    long long idx = 0, stride = 1;
    for (int i = 0; i < d - 1; ++i) {
        const double phi = std::atan2(std::sqrt(suffix[i + 1]), t.values[i]);
        int cell = (int)(phi * (2.0 / std::numbers::pi) * m);
        if (cell > m - 1) cell = m - 1;
        if (cell < 0) cell = 0;
        idx += (long long)cell * stride;
        stride *= m;
    }
    return (int)idx;
}

std::vector<int> grid_filter(const std::vector<GridCellBounds>& cells) {
    std::vector<int> occupied;
    for (int i = 0; i < (int)cells.size(); ++i)
        if (cells[i].occupied) occupied.push_back(i);
    std::vector<int> pruned;
    for (int j = 0; j < (int)cells.size(); ++j) {
        for (const int i : occupied) {
            if (i == j) continue;
            if (dominates(std::span<const double>(cells[i].max_corner),
                          std::span<const double>(cells[j].min_corner))) {
                pruned.push_back(j);
                break;
            }
        }
    }
    return pruned;
}

PartitionPlan sliced_assign(const Dataset& r, int p, int slice_dim) {
    if (p < 1) throw std::invalid_argument("partition count must be >= 1");
    if (slice_dim < 0 || slice_dim >= r.dim())
        throw std::invalid_argument("slice dimension out of range");
    const std::size_t n = r.size();
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    const auto& ts = r.tuples();
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        const double va = ts[a].values[slice_dim], vb = ts[b].values[slice_dim];
        if (va != vb) return va < vb;
        return ts[a].id < ts[b].id;
    });
    PartitionPlan plan{Strategy::sliced, p, 1, std::vector<int>(n, 0)};
    for (std::size_t rank = 0; rank < n; ++rank) {
        int part = 0;
        if (n >= 2)
            part = (int)std::min<long long>((long long)rank * p / (long long)(n - 1),
                                            (long long)p - 1);
        plan.assignment[order[rank]] = part;
    }
    return plan;
}

PartitionPlan random_assign(const Dataset& r, int p, std::uint64_t seed) {
    if (p < 1) throw std::invalid_argument("partition count must be >= 1");
    detail::Rng rng(seed);
    PartitionPlan plan{Strategy::random, p, 1, std::vector<int>(r.size(), 0)};
    for (std::size_t i = 0; i < r.size(); ++i) {
        int part = (int)(rng.uniform01() * p);
        if (part > p - 1) part = p - 1;
        plan.assignment[i] = part;
    }
    return plan;
}

PartitionPlan build_plan(const Dataset& r, Strategy s, int requested_p, int slice_dim,
                         std::uint64_t seed) {
    if (requested_p < 1) throw std::invalid_argument("partition count must be >= 1");
    switch (s) {
        case Strategy::sliced:
            return sliced_assign(r, requested_p, slice_dim);
        case Strategy::random:
            return random_assign(r, requested_p, seed);
        case Strategy::grid: {
            const int m = effective_grid_m(requested_p, r.dim());
            PartitionPlan plan{Strategy::grid, (int)ipow(m, r.dim()), m,
                               std::vector<int>(r.size(), 0)};
            for (std::size_t i = 0; i < r.size(); ++i)
                plan.assignment[i] = grid_assign(r[i], m);
            return plan;
        }
        case Strategy::angular: {
            const int m = effective_angular_m(requested_p, r.dim());
            PartitionPlan plan{Strategy::angular, (int)ipow(m, r.dim() - 1), m,
                               std::vector<int>(r.size(), 0)};
            for (std::size_t i = 0; i < r.size(); ++i)
                plan.assignment[i] = angular_assign(r[i], m);
            return plan;
        }
    }
    throw std::invalid_argument("unknown partitioning strategy");
}

std::vector<GridCellBounds> make_grid_cells(const Dataset& r, const PartitionPlan& plan) {
    if (plan.strategy != Strategy::grid)
        throw std::invalid_argument("make_grid_cells requires a grid plan");
    const int d = r.dim(), m = plan.m;
    std::vector<GridCellBounds> cells(plan.p);
    for (int idx = 0; idx < plan.p; ++idx) {
        auto& cell = cells[idx];
        cell.min_corner.resize(d);
        cell.max_corner.resize(d);
        int rest = idx;
        for (int i = 0; i < d; ++i) {
            const int digit = rest % m;
            rest /= m;
            cell.min_corner[i] = (double)digit / m;
            cell.max_corner[i] = (double)(digit + 1) / m;
        }
    }
    for (const int part : plan.assignment) cells[part].occupied = true;
    return cells;
}

}  // namespace flexsky
