#pragma once

#include "flexsky/core.hpp"
#include "flexsky/fdominance.hpp"
#include "flexsky/lp.hpp"

namespace flexsky {

/// One-phase presorted non-dominated-set computation: sort by the
/// topological key, then keep a window of survivors; each tuple is dropped
/// iff some window member F-dominates it.  Window members are scanned most
/// recently added first and never invalidated, because an F-dominator
/// always sorts strictly before its victims.  Ids sorted ascending.
std::vector<TupleId> nd_sve1f(const Dataset& r, const FDomContext& ctx);

/// Full-LP potential-optimality test of t against all competitors: true
/// iff some feasible weight scores t strictly better than every
/// competitor (margin above kPoEpsTol).  t must not appear among the
/// competitors.
bool is_potentially_optimal(const Tuple& t, std::span<const Tuple* const> competitors,
                            const WeightConstraintSet& c);

/// Two-phase incremental potentially-optimal computation over an ND set:
/// competitors are ordered by the presort key and each candidate is tested
/// against prefixes of doubling size, discarding on the first non-positive
/// margin.  The input is trusted to be an ND set unless verify_input is
/// set, in which case a violation throws std::invalid_argument.  Ids
/// sorted ascending.
std::vector<TupleId> po_popi2(const Dataset& nd, const WeightConstraintSet& c,
                              const FDomContext& ctx, bool verify_input = false);

namespace detail {

/// Survivors of the window scan, in presort order.
std::vector<const Tuple*> nd_survivors(std::span<const Tuple* const> tuples,
                                       const FDomContext& ctx);

/// Potentially optimal members of an ND set, in presort order.
std::vector<const Tuple*> po_survivors(std::span<const Tuple* const> nd,
                                       const WeightConstraintSet& c, const FDomContext& ctx);

/// Input pointers sorted ascending by sort_key.
std::vector<const Tuple*> sort_by_key(std::span<const Tuple* const> tuples,
                                      const FDomContext& ctx);

/// Doubling-prefix margin test of by_key[pos] against all other members.
bool po_candidate_survives(std::size_t pos, std::span<const Tuple* const> by_key,
                           const WeightConstraintSet& c);

std::vector<TupleId> ids_of(const std::vector<const Tuple*>& tuples);

}  // namespace detail

}  // namespace flexsky
