#include "flexsky/fdominance.hpp"

#include <stdexcept>

namespace flexsky {
namespace {

bool region_test(std::span<const double> t, std::span<const double> s, const FDomContext& ctx) {
    if ((int)t.size() != ctx.dim || (int)s.size() != ctx.dim)
        throw std::invalid_argument("dominance test on mismatched dimensionalities");
    bool strict = false;
    for (const WeightVector& v : ctx.vertices.vertices) {
        const double dt = score(std::span<const double>(v), s) - score(std::span<const double>(v), t);
        if (dt < -kStrictTol) return false;
        if (dt > kStrictTol) strict = true;
    }
    return strict;
}

}  // namespace

FDomContext make_fdom_context(const WeightConstraintSet& c) {
    FDomContext ctx;
    ctx.dim = c.dim();
    ctx.vertices = enumerate_vertices(c);
    ctx.sort_w = sorting_weight(ctx.vertices);
    return ctx;
}

bool f_dominates(const Tuple& t, const Tuple& s, const FDomContext& ctx) {
    return region_test(t.values, s.values, ctx);
}

bool in_dominance_region(const Tuple& t, std::span<const double> q, const FDomContext& ctx) {
    return region_test(t.values, q, ctx);
}

SortKey sort_key(const Tuple& t, const FDomContext& ctx) {
    return SortKey{score(ctx.sort_w, t), std::span<const double>(t.values), t.id};
}

bool operator<(const SortKey& a, const SortKey& b) {
    if (a.primary != b.primary) return a.primary < b.primary;
    for (std::size_t i = 0; i < a.values.size() && i < b.values.size(); ++i)
        if (a.values[i] != b.values[i]) return a.values[i] < b.values[i];
    return a.id < b.id;
}

}  // namespace flexsky
