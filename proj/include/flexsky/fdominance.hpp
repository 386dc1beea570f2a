#pragma once

#include "flexsky/core.hpp"
#include "flexsky/polytope.hpp"

namespace flexsky {

/// Score differences within this tolerance of zero do not count as strict.
inline constexpr double kStrictTol = 1e-12;

/// Shared immutable context for F-dominance tests: the polytope vertices
/// plus the canonical presorting weight derived from them.
struct FDomContext {
    int dim = 0;
    PolytopeVertices vertices;
    WeightVector sort_w;
};

FDomContext make_fdom_context(const WeightConstraintSet& c);

/// Vertex-wise test: t F-dominates s iff score(v,t) <= score(v,s) at every
/// polytope vertex and strictly (beyond kStrictTol) at one or more.
bool f_dominates(const Tuple& t, const Tuple& s, const FDomContext& ctx);

/// Membership of an arbitrary point q in the dominance region of t.
bool in_dominance_region(const Tuple& t, std::span<const double> q, const FDomContext& ctx);

/// Topological presort key: primary score under sort_w, ties broken by
/// lexicographic attribute order, then id.  Whenever t F-dominates s the
/// primary component of t sorts strictly before that of s, because sort_w
/// is a convex combination of the vertices.
struct SortKey {
    double primary = 0.0;
    std::span<const double> values;
    TupleId id = 0;
};

SortKey sort_key(const Tuple& t, const FDomContext& ctx);
bool operator<(const SortKey& a, const SortKey& b);

}  // namespace flexsky
