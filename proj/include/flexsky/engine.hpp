#pragma once

#include <cstdint>
#include <string>

#include "flexsky/core.hpp"
#include "flexsky/fdominance.hpp"
#include "flexsky/partitioning.hpp"

namespace flexsky {

enum class FlexOp { nd, po };

const char* to_string(FlexOp op);
FlexOp parse_op(const std::string& name);

struct EngineOptions {
    Strategy strategy = Strategy::sliced;
    FlexOp op = FlexOp::nd;
    int partitions = 1;
    int cores = 1;            // max worker threads in flight; 1 runs inline
    int representatives = 0;  // per-partition head count, 0 disables the filter
    bool noseq = false;
    bool grid_filter = false;
    int slice_dim = 0;
    std::uint64_t seed = 0;  // used by the random strategy only
    /// Verification-harness fault injection: skip the final pass and
    /// report the merged union as the result.
    bool debug_skip_final = false;
};

struct ExecutionReport {
    double t_partition_s = 0.0;
    double t_parallel_s = 0.0;
    double t_sequential_s = 0.0;
    double t_total_s = 0.0;
    std::size_t input_size = 0;
    std::size_t union_size = 0;
    double removed_pct = 0.0;  // fraction of the input removed by the parallel phase
    std::vector<TupleId> result_ids;  // sorted ascending
    std::vector<std::size_t> partition_sizes;
    std::vector<double> partition_durations_s;
    int effective_partitions = 0;
};

/// Partition the input, run the local operator per partition (at most
/// `cores` workers in flight), merge the union of local results, then
/// reduce the union with either the plain sequential operator or the
/// distributed NoSeq pass.  For op == po the input must already be a
/// non-dominated set, with any F-dominated tuples removed upstream.
ExecutionReport run_parallel(const Dataset& input, const WeightConstraintSet& c,
                             const EngineOptions& opt);

/// First k tuples per partition in presort-key order, pooled across
/// partitions and reduced to the pool members not F-dominated by another
/// pool member (compared by id, so duplicates co-survive).
std::vector<const Tuple*> select_representatives(const Dataset& r, const PartitionPlan& plan,
                                                 int k, const FDomContext& ctx);

/// Distributed replacement for the final sequential pass: re-partition the
/// union U by equal-depth slices and let each worker keep its tuples that
/// survive against all of U (F-dominance for nd, the margin test for po).
std::vector<TupleId> noseq_finalize(const std::vector<const Tuple*>& u, FlexOp op, int p,
                                    int cores, const FDomContext& ctx,
                                    const WeightConstraintSet& c, int slice_dim = 0);

}  // namespace flexsky
