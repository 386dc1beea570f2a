#include "flexsky/sequential.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace flexsky {
namespace detail {

std::vector<const Tuple*> sort_by_key(std::span<const Tuple* const> tuples,
                                      const FDomContext& ctx) {
    const std::size_t n = tuples.size();
    std::vector<double> prim(n);
    for (std::size_t i = 0; i < n; ++i) prim[i] = score(ctx.sort_w, *tuples[i]);
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (prim[a] != prim[b]) return prim[a] < prim[b];
        const auto& va = tuples[a]->values;
        const auto& vb = tuples[b]->values;
        for (std::size_t i = 0; i < va.size(); ++i)
            if (va[i] != vb[i]) return va[i] < vb[i];
        return tuples[a]->id < tuples[b]->id;
    });
    std::vector<const Tuple*> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = tuples[order[i]];
    return out;
}

std::vector<const Tuple*> nd_survivors(std::span<const Tuple* const> tuples,
                                       const FDomContext& ctx) {
    const std::size_t n = tuples.size();
    if (n == 0) return {};
    const auto& verts = ctx.vertices.vertices;
    const std::size_t nv = verts.size();
    std::vector<double> sc(n * nv);
    std::vector<double> prim(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::span<const double> vals(tuples[i]->values);
        for (std::size_t v = 0; v < nv; ++v)
            sc[i * nv + v] = score(std::span<const double>(verts[v]), vals);
        prim[i] = score(std::span<const double>(ctx.sort_w), vals);
    }
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (prim[a] != prim[b]) return prim[a] < prim[b];
        const auto& va = tuples[a]->values;
        const auto& vb = tuples[b]->values;
        for (std::size_t i = 0; i < va.size(); ++i)
            if (va[i] != vb[i]) return va[i] < vb[i];
        return tuples[a]->id < tuples[b]->id;
    });
    std::vector<std::uint32_t> window;
    window.reserve(64);
    for (const std::uint32_t cand : order) {
        const double* scc = &sc[(std::size_t)cand * nv];
        bool dominated = false;
        for (auto it = window.rbegin(); it != window.rend() && !dominated; ++it) {
            const double* scw = &sc[(std::size_t)(*it) * nv];
            bool viol = false, strict = false;
            for (std::size_t v = 0; v < nv; ++v) {
                const double dt = scc[v] - scw[v];
                if (dt < -kStrictTol) {
                    viol = true;
                    break;
                }
                if (dt > kStrictTol) strict = true;
            }
            dominated = !viol && strict;
        }
        if (!dominated) window.push_back(cand);
    }
    std::vector<const Tuple*> out;
    out.reserve(window.size());
    for (const std::uint32_t i : window) out.push_back(tuples[i]);
    return out;
}

bool po_candidate_survives(std::size_t pos, std::span<const Tuple* const> by_key,
                           const WeightConstraintSet& c) {
    const std::size_t total = by_key.size() - 1;
    if (total == 0) return true;
    const Tuple* cand = by_key[pos];
    for (std::size_t k = 2;; k *= 2) {
        const std::size_t kk = std::min(k, total);
        LpProblem p;
        p.dim = c.dim();
        p.candidate = cand->values;
        p.constraint_rows = c.rows();
        p.competitors.reserve(kk);
        for (std::size_t i = 0; i < by_key.size() && p.competitors.size() < kk; ++i) {
            if (i == pos) continue;
            p.competitors.push_back(by_key[i]->values);
        }
        const LpSolution sol = lp_solve(p);
        if (sol.status == LpStatus::infeasible)
            throw std::runtime_error("po test: empty weight polytope");
        const double eps = (sol.status == LpStatus::unbounded)
                               ? std::numeric_limits<double>::infinity()
                               : sol.eps;
        if (eps <= kPoEpsTol) return false;
        if (kk == total) return true;
    }
}

std::vector<const Tuple*> po_survivors(std::span<const Tuple* const> nd,
                                       const WeightConstraintSet& c, const FDomContext& ctx) {
    if (nd.empty()) return {};
    const auto by_key = sort_by_key(nd, ctx);
    std::vector<const Tuple*> out;
    for (std::size_t pos = 0; pos < by_key.size(); ++pos)
        if (po_candidate_survives(pos, by_key, c)) out.push_back(by_key[pos]);
    return out;
}

std::vector<TupleId> ids_of(const std::vector<const Tuple*>& tuples) {
    std::vector<TupleId> ids;
    ids.reserve(tuples.size());
    for (const Tuple* t : tuples) ids.push_back(t->id);
    std::sort(ids.begin(), ids.end());
    return ids;
}

}  // namespace detail

std::vector<TupleId> nd_sve1f(const Dataset& r, const FDomContext& ctx) {
    if (r.dim() != ctx.dim)
        throw std::invalid_argument("nd_sve1f: dataset and context dimensionalities differ");
    std::vector<const Tuple*> ptrs;
    ptrs.reserve(r.size());
    for (const Tuple& t : r.tuples()) ptrs.push_back(&t);
    return detail::ids_of(detail::nd_survivors(ptrs, ctx));
}

bool is_potentially_optimal(const Tuple& t, std::span<const Tuple* const> competitors,
                            const WeightConstraintSet& c) {
    if ((int)t.values.size() != c.dim())
        throw std::invalid_argument("is_potentially_optimal: dimensionality mismatch");
    if (competitors.empty()) return true;
    LpProblem p;
    p.dim = c.dim();
    p.candidate = t.values;
    p.constraint_rows = c.rows();
    p.competitors.reserve(competitors.size());
    for (const Tuple* s : competitors) p.competitors.push_back(s->values);
    const LpSolution sol = lp_solve(p);
    if (sol.status == LpStatus::infeasible)
        throw std::runtime_error("po test: empty weight polytope");
    if (sol.status == LpStatus::unbounded) return true;
    return sol.eps > kPoEpsTol;
}

std::vector<TupleId> po_popi2(const Dataset& nd, const WeightConstraintSet& c,
                              const FDomContext& ctx, bool verify_input) {
    if (nd.dim() != ctx.dim || nd.dim() != c.dim())
        throw std::invalid_argument("po_popi2: dimensionality mismatch");
    const auto& ts = nd.tuples();
    if (verify_input) {
        for (std::size_t i = 0; i < ts.size(); ++i)
            for (std::size_t j = 0; j < ts.size(); ++j)
                if (i != j && f_dominates(ts[i], ts[j], ctx))
                    throw std::invalid_argument("po_popi2: input is not a non-dominated set");
    }
    std::vector<const Tuple*> ptrs;
    ptrs.reserve(ts.size());
    for (const Tuple& t : ts) ptrs.push_back(&t);
    return detail::ids_of(detail::po_survivors(ptrs, c, ctx));
}

}  // namespace flexsky
