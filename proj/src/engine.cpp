#include "flexsky/engine.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "flexsky/sequential.hpp"

namespace flexsky {
namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

// Runs fn(0..ntasks-1) with at most `cores` threads pulling from a shared
// counter.  cores <= 1 executes inline on the calling thread.
void run_tasks(int cores, int ntasks, const std::function<void(int)>& fn) {
    if (ntasks <= 0) return;
    const int nthreads = std::min(cores, ntasks);
    if (nthreads <= 1) {
        for (int i = 0; i < ntasks; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::mutex err_mu;
    std::exception_ptr err;
    auto worker = [&] {
        while (true) {
            const int i = next.fetch_add(1);
            if (i >= ntasks) break;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> g(err_mu);
                if (!err) err = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

std::vector<const Tuple*> representatives_of_parts(
    const std::vector<std::vector<const Tuple*>>& parts, int k, const FDomContext& ctx) {
    std::vector<const Tuple*> pool;
    for (const auto& part : parts) {
        if (part.empty()) continue;
        auto by_key = detail::sort_by_key(part, ctx);
        const std::size_t take = std::min<std::size_t>(k, by_key.size());
        pool.insert(pool.end(), by_key.begin(), by_key.begin() + take);
    }
    std::vector<const Tuple*> out;
    out.reserve(pool.size());
    for (const Tuple* t : pool) {
        bool dominated = false;
        for (const Tuple* s : pool) {
            if (s->id == t->id) continue;
            if (f_dominates(*s, *t, ctx)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(t);
    }
    return out;
}

// Drops partition members F-dominated by a pooled representative.
// Comparison is by id so a representative never deletes its own duplicate.
std::vector<const Tuple*> filter_by_reps(const std::vector<const Tuple*>& part,
                                         const std::vector<const Tuple*>& reps,
                                         const std::vector<double>& rep_scores,
                                         const FDomContext& ctx) {
    if (reps.empty()) return part;
    const auto& verts = ctx.vertices.vertices;
    const std::size_t nv = verts.size();
    std::vector<const Tuple*> out;
    out.reserve(part.size());
    std::vector<double> ts(nv);
    for (const Tuple* t : part) {
        for (std::size_t v = 0; v < nv; ++v)
            ts[v] = score(std::span<const double>(verts[v]), std::span<const double>(t->values));
        bool dominated = false;
        for (std::size_t rix = 0; rix < reps.size() && !dominated; ++rix) {
            if (reps[rix]->id == t->id) continue;
            const double* rs = &rep_scores[rix * nv];
            bool viol = false, strict = false;
            for (std::size_t v = 0; v < nv; ++v) {
                const double dt = ts[v] - rs[v];
                if (dt < -kStrictTol) {
                    viol = true;
                    break;
                }
                if (dt > kStrictTol) strict = true;
            }
            dominated = !viol && strict;
        }
        if (!dominated) out.push_back(t);
    }
    return out;
}

std::vector<const Tuple*> local_op(const std::vector<const Tuple*>& tuples, FlexOp op,
                                   const WeightConstraintSet& c, const FDomContext& ctx) {
    if (op == FlexOp::nd) return detail::nd_survivors(tuples, ctx);
    return detail::po_survivors(tuples, c, ctx);
}

void validate_options(const Dataset& input, const WeightConstraintSet& c,
                      const EngineOptions& opt) {
    if (input.dim() != c.dim())
        throw std::invalid_argument("engine: dataset and constraint dimensionalities differ");
    if (opt.partitions < 1) throw std::invalid_argument("engine: partitions must be >= 1");
    if (opt.cores < 1) throw std::invalid_argument("engine: cores must be >= 1");
    if (opt.representatives < 0)
        throw std::invalid_argument("engine: representative count must be >= 0");
    if (opt.slice_dim < 0 || opt.slice_dim >= input.dim())
        throw std::invalid_argument("engine: slice dimension out of range");
    if (opt.grid_filter && opt.strategy != Strategy::grid)
        throw std::invalid_argument("engine: grid filtering requires the grid strategy");
}

}  // namespace

const char* to_string(FlexOp op) { return op == FlexOp::nd ? "nd" : "po"; }

FlexOp parse_op(const std::string& name) {
    if (name == "nd") return FlexOp::nd;
    if (name == "po") return FlexOp::po;
    throw std::invalid_argument("unknown operator: " + name);
}

std::vector<const Tuple*> select_representatives(const Dataset& r, const PartitionPlan& plan,
                                                 int k, const FDomContext& ctx) {
    if (k <= 0) return {};
    if (plan.assignment.size() != r.size())
        throw std::invalid_argument("select_representatives: plan does not match dataset");
    std::vector<std::vector<const Tuple*>> parts(plan.p);
    for (std::size_t i = 0; i < r.size(); ++i)
        parts[plan.assignment[i]].push_back(&r.tuples()[i]);
    return representatives_of_parts(parts, k, ctx);
}

std::vector<TupleId> noseq_finalize(const std::vector<const Tuple*>& u, FlexOp op, int p,
                                    int cores, const FDomContext& ctx,
                                    const WeightConstraintSet& c, int slice_dim) {
    if (p < 1) throw std::invalid_argument("noseq: partitions must be >= 1");
    if (cores < 1) throw std::invalid_argument("noseq: cores must be >= 1");
    if (u.empty()) return {};
    if (slice_dim < 0 || slice_dim >= ctx.dim)
        throw std::invalid_argument("noseq: slice dimension out of range");

    const auto by_key = detail::sort_by_key(u, ctx);
    const std::size_t n = by_key.size();

    // Equal-depth slices over the presorted union: rank positions by the
    // slicing attribute, then map ranks onto p buckets of by_key indices.
    std::vector<std::uint32_t> vorder(n);
    std::iota(vorder.begin(), vorder.end(), 0u);
    std::sort(vorder.begin(), vorder.end(), [&](std::uint32_t a, std::uint32_t b) {
        const double va = by_key[a]->values[slice_dim], vb = by_key[b]->values[slice_dim];
        if (va != vb) return va < vb;
        return by_key[a]->id < by_key[b]->id;
    });
    std::vector<std::vector<std::uint32_t>> members(p);
    for (std::size_t rank = 0; rank < n; ++rank) {
        int part = 0;
        if (n >= 2)
            part = (int)std::min<long long>((long long)rank * p / (long long)(n - 1),
                                            (long long)p - 1);
        members[part].push_back(vorder[rank]);
    }

    std::vector<std::vector<TupleId>> kept(p);
    if (op == FlexOp::nd) {
        const auto& verts = ctx.vertices.vertices;
        const std::size_t nv = verts.size();
        std::vector<double> sc(n * nv);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t v = 0; v < nv; ++v)
                sc[i * nv + v] = score(std::span<const double>(verts[v]),
                                       std::span<const double>(by_key[i]->values));
        run_tasks(cores, p, [&](int pi) {
            for (const std::uint32_t pos : members[pi]) {
                const double* sct = &sc[(std::size_t)pos * nv];
                bool dominated = false;
                // Any F-dominator sorts strictly earlier, so the scan can
                // stop at the tuple's own presort position.
                for (std::size_t q = 0; q < pos && !dominated; ++q) {
                    const double* scq = &sc[q * nv];
                    bool viol = false, strict = false;
                    for (std::size_t v = 0; v < nv; ++v) {
                        const double dt = sct[v] - scq[v];
                        if (dt < -kStrictTol) {
                            viol = true;
                            break;
                        }
                        if (dt > kStrictTol) strict = true;
                    }
                    dominated = !viol && strict;
                }
                if (!dominated) kept[pi].push_back(by_key[pos]->id);
            }
        });
    } else {
        run_tasks(cores, p, [&](int pi) {
            for (const std::uint32_t pos : members[pi])
                if (detail::po_candidate_survives(pos, by_key, c))
                    kept[pi].push_back(by_key[pos]->id);
        });
    }

    std::vector<TupleId> ids;
    for (const auto& part : kept) ids.insert(ids.end(), part.begin(), part.end());
    std::sort(ids.begin(), ids.end());
    return ids;
}

ExecutionReport run_parallel(const Dataset& input, const WeightConstraintSet& c,
                             const EngineOptions& opt) {
    validate_options(input, c, opt);
    ExecutionReport report;
    report.input_size = input.size();

    const Timer total;
    const FDomContext ctx = make_fdom_context(c);

    const Timer tpart;
    const PartitionPlan plan =
        build_plan(input, opt.strategy, opt.partitions, opt.slice_dim, opt.seed);
    const int p = plan.p;

    std::vector<char> dropped(input.size(), 0);
    if (opt.grid_filter) {
        const auto cells = make_grid_cells(input, plan);
        const auto pruned = grid_filter(cells);
        std::vector<char> pruned_cell(p, 0);
        for (const int idx : pruned) pruned_cell[idx] = 1;
        for (std::size_t i = 0; i < input.size(); ++i)
            dropped[i] = pruned_cell[plan.assignment[i]];
    }
    std::vector<std::vector<const Tuple*>> parts(p);
    for (std::size_t i = 0; i < input.size(); ++i)
        if (!dropped[i]) parts[plan.assignment[i]].push_back(&input.tuples()[i]);

    std::vector<const Tuple*> reps;
    std::vector<double> rep_scores;
    if (opt.representatives > 0) {
        reps = representatives_of_parts(parts, opt.representatives, ctx);
        const auto& verts = ctx.vertices.vertices;
        rep_scores.resize(reps.size() * verts.size());
        for (std::size_t r = 0; r < reps.size(); ++r)
            for (std::size_t v = 0; v < verts.size(); ++v)
                rep_scores[r * verts.size() + v] =
                    score(std::span<const double>(verts[v]),
                          std::span<const double>(reps[r]->values));
    }
    report.t_partition_s = tpart.elapsed();
    report.effective_partitions = p;

    const Timer tpar;
    std::vector<std::vector<const Tuple*>> locals(p);
    report.partition_sizes.assign(p, 0);
    report.partition_durations_s.assign(p, 0.0);
    run_tasks(opt.cores, p, [&](int i) {
        const Timer tt;
        const auto cand = filter_by_reps(parts[i], reps, rep_scores, ctx);
        locals[i] = local_op(cand, opt.op, c, ctx);
        report.partition_sizes[i] = parts[i].size();
        report.partition_durations_s[i] = tt.elapsed();
    });
    report.t_parallel_s = tpar.elapsed();

    std::vector<const Tuple*> u;
    for (const auto& local : locals) u.insert(u.end(), local.begin(), local.end());
    report.union_size = u.size();
    report.removed_pct =
        input.size() ? 1.0 - (double)u.size() / (double)input.size() : 0.0;

    const Timer tseq;
    if (opt.debug_skip_final) {
        report.result_ids = detail::ids_of(u);
    } else if (opt.noseq) {
        report.result_ids =
            noseq_finalize(u, opt.op, opt.partitions, opt.cores, ctx, c, opt.slice_dim);
    } else {
        report.result_ids = detail::ids_of(local_op(u, opt.op, c, ctx));
    }
    report.t_sequential_s = tseq.elapsed();
    report.t_total_s = total.elapsed();
    return report;
}

}  // namespace flexsky
