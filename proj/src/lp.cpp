#include "flexsky/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace flexsky {
namespace {

constexpr double kPivotTol = 1e-11;
constexpr double kReducedTol = 1e-10;

// Dense tableau for max c·x s.t. A x = b, x >= 0 with b >= 0.  One
// artificial column per row sits at index n + r so that optimal row
// multipliers can be read back from the reduced-cost row.
struct Tableau {
    int m = 0, n = 0;       // rows, structural columns
    std::vector<double> t;  // m rows of width n + m + 1 (rhs last)
    std::vector<int> basis;
    int width() const { return n + m + 1; }
    double& at(int r, int c) { return t[(std::size_t)r * width() + c]; }
    double at(int r, int c) const { return t[(std::size_t)r * width() + c]; }
};

void pivot(Tableau& tb, std::vector<double>& red, double& obj, int prow, int pcol) {
    const int w = tb.width();
    double* pr = &tb.t[(std::size_t)prow * w];
    const double inv = 1.0 / pr[pcol];
    for (int c = 0; c < w; ++c) pr[c] *= inv;
    pr[pcol] = 1.0;
    for (int r = 0; r < tb.m; ++r) {
        if (r == prow) continue;
        double* row = &tb.t[(std::size_t)r * w];
        const double f = row[pcol];
        if (f == 0.0) continue;
        for (int c = 0; c < w; ++c) row[c] -= f * pr[c];
        row[pcol] = 0.0;
    }
    const double f = red[pcol];
    if (f != 0.0) {
        for (int c = 0; c < w - 1; ++c) red[c] -= f * pr[c];
        obj += f * pr[w - 1];
        red[pcol] = 0.0;
    }
    tb.basis[prow] = pcol;
}

enum class StepResult { optimal, unbounded, iterlimit };

// Dantzig pricing with a Bland fallback once the iteration count suggests
// degenerate stalling.  Artificial columns are permanently disabled as
// soon as they leave the basis.
StepResult run_simplex(Tableau& tb, std::vector<double>& red, double& obj,
                       std::vector<char>& allowed) {
    const int w = tb.width();
    const int ncols = tb.n + tb.m;
    const long bland_after = 200 + 20L * ncols;
    const long max_iter = 10000 + 500L * ncols;
    for (long iter = 0;; ++iter) {
        if (iter > max_iter) return StepResult::iterlimit;
        int enter = -1;
        if (iter < bland_after) {
            double best = kReducedTol;
            for (int j = 0; j < ncols; ++j)
                if (allowed[j] && red[j] > best) {
                    best = red[j];
                    enter = j;
                }
        } else {
            for (int j = 0; j < ncols; ++j)
                if (allowed[j] && red[j] > kReducedTol) {
                    enter = j;
                    break;
                }
        }
        if (enter < 0) return StepResult::optimal;
        int leave = -1;
        double best_ratio = 0.0;
        for (int r = 0; r < tb.m; ++r) {
            const double a = tb.at(r, enter);
            if (a <= kPivotTol) continue;
            const double ratio = tb.at(r, w - 1) / a;
            if (leave < 0 || ratio < best_ratio - 1e-12 ||
                (ratio <= best_ratio + 1e-12 && tb.basis[r] < tb.basis[leave])) {
                leave = r;
                best_ratio = ratio;
            }
        }
        if (leave < 0) return StepResult::unbounded;
        const int leaving_col = tb.basis[leave];
        pivot(tb, red, obj, leave, enter);
        if (leaving_col >= tb.n) allowed[leaving_col] = 0;
    }
}

struct StandardResult {
    LpStatus status = LpStatus::optimal;
    std::vector<double> x;
    double objective = 0.0;
    std::vector<double> pi;  // row multipliers at the optimum
};

// basis_hint[r] >= 0 names a structural column that is already a unit
// column for row r; such rows skip phase 1.
StandardResult solve_standard(int m, int n, const std::vector<double>& a,
                              const std::vector<double>& b, const std::vector<double>& c,
                              const std::vector<int>& basis_hint) {
    Tableau tb;
    tb.m = m;
    tb.n = n;
    tb.t.assign((std::size_t)m * (n + m + 1), 0.0);
    tb.basis.assign(m, -1);
    const int w = tb.width();
    for (int r = 0; r < m; ++r) {
        for (int col = 0; col < n; ++col) tb.at(r, col) = a[(std::size_t)r * n + col];
        tb.at(r, n + r) = 1.0;
        tb.at(r, w - 1) = b[r];
    }
    std::vector<char> allowed(n + m, 1);
    bool need_phase1 = false;
    for (int r = 0; r < m; ++r) {
        if (basis_hint[r] >= 0) {
            tb.basis[r] = basis_hint[r];
            allowed[n + r] = 0;  // artificial never needed for this row
        } else {
            tb.basis[r] = n + r;
            need_phase1 = true;
        }
    }

    if (need_phase1) {
        // Phase 1: max of minus the artificial sum, starting from the
        // all-artificial (plus hinted) basis.
        std::vector<double> red(n + m, 0.0);
        double obj = 0.0;
        for (int j = 0; j < n + m; ++j) {
            double z = 0.0;
            for (int r = 0; r < m; ++r)
                if (tb.basis[r] >= n) z -= tb.at(r, j);
            red[j] = ((j >= n) ? -1.0 : 0.0) - z;
        }
        for (int r = 0; r < m; ++r)
            if (tb.basis[r] >= n) obj -= tb.at(r, w - 1);
        const StepResult res = run_simplex(tb, red, obj, allowed);
        if (res == StepResult::iterlimit)
            throw std::runtime_error("lp: phase-1 pivot iteration limit exceeded");
        if (obj < -1e-7) return {LpStatus::infeasible, {}, 0.0, {}};
        // Drive any leftover artificial out of the basis; rows where no
        // structural pivot exists are redundant and keep a zero artificial.
        for (int r = 0; r < m; ++r) {
            if (tb.basis[r] < n) continue;
            int piv = -1;
            for (int j = 0; j < n && piv < 0; ++j)
                if (std::fabs(tb.at(r, j)) > kPivotTol) piv = j;
            if (piv >= 0) {
                std::vector<double> dummy(n + m, 0.0);
                double dobj = 0.0;
                pivot(tb, dummy, dobj, r, piv);
            }
        }
    }
    for (int j = n; j < n + m; ++j) allowed[j] = 0;

    std::vector<double> red(n + m, 0.0);
    double obj = 0.0;
    {
        std::vector<double> cb(m, 0.0);
        for (int r = 0; r < m; ++r) cb[r] = (tb.basis[r] < n) ? c[tb.basis[r]] : 0.0;
        for (int j = 0; j < n + m; ++j) {
            double z = 0.0;
            for (int r = 0; r < m; ++r) z += cb[r] * tb.at(r, j);
            red[j] = ((j < n) ? c[j] : 0.0) - z;
        }
        for (int r = 0; r < m; ++r) obj += cb[r] * tb.at(r, w - 1);
    }
    const StepResult res = run_simplex(tb, red, obj, allowed);
    if (res == StepResult::iterlimit)
        throw std::runtime_error("lp: pivot iteration limit exceeded");
    if (res == StepResult::unbounded)
        return {LpStatus::unbounded, {}, std::numeric_limits<double>::infinity(), {}};

    StandardResult out;
    out.objective = obj;
    out.x.assign(n, 0.0);
    for (int r = 0; r < m; ++r)
        if (tb.basis[r] < n) out.x[tb.basis[r]] = tb.at(r, w - 1);
    out.pi.assign(m, 0.0);
    for (int r = 0; r < m; ++r) out.pi[r] = -red[n + r];
    return out;
}

}  // namespace

LpSolution lp_solve(const LpProblem& p) {
    const int d = p.dim;
    if (d < 2) throw std::invalid_argument("lp: dimensionality must be >= 2");
    if ((int)p.candidate.size() != d)
        throw std::invalid_argument("lp: candidate has wrong dimensionality");
    for (const auto& s : p.competitors)
        if ((int)s.size() != d)
            throw std::invalid_argument("lp: competitor has wrong dimensionality");
    for (const auto& a : p.constraint_rows)
        if ((int)a.size() != d)
            throw std::invalid_argument("lp: constraint row has wrong dimensionality");

    const int nc = (int)p.constraint_rows.size();
    const int nk = (int)p.competitors.size();
    if (nk == 0)
        return {LpStatus::unbounded, {}, std::numeric_limits<double>::infinity()};

    // Dual variables: mu_j >= 0 per constraint row, nu_k >= 0 per
    // competitor, the free multiplier of sum(w) = 1 split as lamP - lamM,
    // and a slack per coordinate row.  Row 0 normalizes sum(nu) = 1; rows
    // 1..d state stationarity per weight coordinate.
    const int m = d + 1;
    const int n = nc + nk + 2 + d;
    const int col_mu = 0, col_nu = nc, col_lp = nc + nk, col_lm = nc + nk + 1,
              col_sg = nc + nk + 2;
    std::vector<double> a((std::size_t)m * n, 0.0), b(m, 0.0), c(n, 0.0);
    for (int k = 0; k < nk; ++k) a[(std::size_t)0 * n + col_nu + k] = 1.0;
    b[0] = 1.0;
    for (int i = 0; i < d; ++i) {
        double* row = &a[(std::size_t)(i + 1) * n];
        for (int j = 0; j < nc; ++j) row[col_mu + j] = p.constraint_rows[j][i];
        for (int k = 0; k < nk; ++k) row[col_nu + k] = p.competitors[k][i] - p.candidate[i];
        row[col_lp] = -1.0;
        row[col_lm] = 1.0;
        row[col_sg + i] = 1.0;
    }
    c[col_lp] = -1.0;
    c[col_lm] = 1.0;

    std::vector<int> hint(m, -1);
    for (int i = 0; i < d; ++i) hint[i + 1] = col_sg + i;

    const StandardResult r = solve_standard(m, n, a, b, c, hint);
    if (r.status == LpStatus::infeasible)
        // An infeasible dual means the margin grows without bound.
        return {LpStatus::unbounded, {}, std::numeric_limits<double>::infinity()};
    if (r.status == LpStatus::unbounded)
        // An unbounded dual means the weight polytope itself is empty.
        return {LpStatus::infeasible, {}, 0.0};

    LpSolution sol;
    sol.status = LpStatus::optimal;
    sol.eps = -r.objective;
    sol.w.assign(d, 0.0);
    for (int i = 0; i < d; ++i) sol.w[i] = r.pi[i + 1];
    return sol;
}

}  // namespace flexsky
