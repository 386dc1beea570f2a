#include "flexsky/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace flexsky {
namespace {

// Gaussian elimination with partial pivoting on an n x n system.
// Returns false when the system is numerically singular.
bool solve_square(std::vector<double> a, std::vector<double> b, int n, std::vector<double>& x) {
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::fabs(a[r * n + col]) > std::fabs(a[piv * n + col])) piv = r;
        if (std::fabs(a[piv * n + col]) < 1e-12) return false;
        if (piv != col) {
            for (int k = col; k < n; ++k) std::swap(a[piv * n + k], a[col * n + k]);
            std::swap(b[piv], b[col]);
        }
        for (int r = col + 1; r < n; ++r) {
            const double f = a[r * n + col] / a[col * n + col];
            if (f == 0.0) continue;
            for (int k = col; k < n; ++k) a[r * n + k] -= f * a[col * n + k];
            b[r] -= f * b[col];
        }
    }
    x.assign(n, 0.0);
    for (int r = n - 1; r >= 0; --r) {
        double acc = b[r];
        for (int k = r + 1; k < n; ++k) acc -= a[r * n + k] * x[k];
        x[r] = acc / a[r * n + r];
    }
    return true;
}

}  // namespace

namespace detail {

std::vector<WeightVector> enumerate_vertices_raw(int dim,
                                                 const std::vector<std::vector<double>>& rows) {
    // Inequality pool: user rows a·w >= 0 followed by the axis rows w_i >= 0.
    std::vector<std::vector<double>> ineq = rows;
    for (int i = 0; i < dim; ++i) {
        std::vector<double> e(dim, 0.0);
        e[i] = 1.0;
        ineq.push_back(std::move(e));
    }
    const int total = (int)ineq.size();
    const int pick = dim - 1;

    std::vector<WeightVector> found;
    std::vector<int> comb(pick);
    for (int i = 0; i < pick; ++i) comb[i] = i;

    while (true) {
        std::vector<double> a(dim * dim, 0.0), b(dim, 0.0), w;
        for (int r = 0; r < pick; ++r)
            for (int k = 0; k < dim; ++k) a[r * dim + k] = ineq[comb[r]][k];
        for (int k = 0; k < dim; ++k) a[pick * dim + k] = 1.0;
        b[pick] = 1.0;
        if (solve_square(std::move(a), std::move(b), dim, w)) {
            bool ok = true;
            for (int k = 0; k < dim && ok; ++k) ok = w[k] >= -kVertexTol;
            for (std::size_t r = 0; r < rows.size() && ok; ++r) {
                double dot = 0.0;
                for (int k = 0; k < dim; ++k) dot += rows[r][k] * w[k];
                ok = dot >= -kVertexTol;
            }
            if (ok) {
                bool dup = false;
                for (const auto& u : found) {
                    bool same = true;
                    for (int k = 0; k < dim && same; ++k)
                        same = std::fabs(u[k] - w[k]) <= kVertexTol;
                    if (same) {
                        dup = true;
                        break;
                    }
                }
                if (!dup) found.push_back(std::move(w));
            }
        }
        int i = pick - 1;
        while (i >= 0 && comb[i] == total - pick + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < pick; ++j) comb[j] = comb[j - 1] + 1;
    }
    std::sort(found.begin(), found.end());
    return found;
}

}  // namespace detail

WeightConstraintSet::WeightConstraintSet(int dim, std::vector<std::vector<double>> rows)
    : dim_(dim), rows_(std::move(rows)) {
    if (dim_ < 2) throw std::invalid_argument("constraint set dimensionality must be >= 2");
    for (const auto& a : rows_) {
        if ((int)a.size() != dim_)
            throw std::invalid_argument("constraint row has wrong dimensionality");
        for (double v : a)
            if (!std::isfinite(v))
                throw std::invalid_argument("constraint row has a non-finite coefficient");
    }
    if (detail::enumerate_vertices_raw(dim_, rows_).empty())
        throw std::runtime_error("infeasible constraints: the weight polytope is empty");
}

PolytopeVertices enumerate_vertices(const WeightConstraintSet& c) {
    auto verts = detail::enumerate_vertices_raw(c.dim(), c.rows());
    if (verts.empty())
        throw std::runtime_error("infeasible constraints: the weight polytope is empty");
    return PolytopeVertices{std::move(verts)};
}

WeightVector sorting_weight(const PolytopeVertices& v) {
    if (v.vertices.empty()) throw std::invalid_argument("sorting_weight of an empty vertex set");
    const int d = (int)v.vertices.front().size();
    WeightVector mean(d, 0.0);
    for (const auto& u : v.vertices)
        for (int k = 0; k < d; ++k) mean[k] += u[k];
    double sum = 0.0;
    for (double& x : mean) {
        x /= (double)v.vertices.size();
        sum += x;
    }
    for (double& x : mean) x /= sum;
    return mean;
}

}  // namespace flexsky
