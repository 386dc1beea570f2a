#include <algorithm>
#include <iostream>
#include <sstream>
#include <utility>

#include "flexsky/bench.hpp"
#include "flexsky/detail/rng.hpp"
#include "flexsky/sequential.hpp"

namespace flexsky {
namespace {

WeightConstraintSet constraint_variant(int which, int d) {
    std::vector<std::vector<double>> rows;
    auto pref = [&](int hi, int lo) {
        std::vector<double> row(d, 0.0);
        row[hi] = 1.0;
        row[lo] = -1.0;
        rows.push_back(std::move(row));
    };
    if (which == 1) {
        pref(0, 1);
    } else if (which == 2) {
        pref(0, 1);
        if (d >= 3) pref(1, 2);
    }
    return WeightConstraintSet(d, std::move(rows));
}

bool is_subset(const std::vector<TupleId>& a, const std::vector<TupleId>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string ids_brief(const std::vector<TupleId>& ids) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < ids.size() && i < 12; ++i) {
        if (i) out << ',';
        out << ids[i];
    }
    if (ids.size() > 12) out << ",...";
    out << '}';
    return out.str();
}

std::vector<std::pair<Strategy, ImprovementSet>> combos() {
    std::vector<std::pair<Strategy, ImprovementSet>> out;
    const Strategy strategies[] = {Strategy::grid, Strategy::angular, Strategy::sliced,
                                   Strategy::random};
    for (const Strategy s : strategies) {
        out.push_back({s, ImprovementSet{}});
        out.push_back({s, ImprovementSet{2, false, false}});
        out.push_back({s, ImprovementSet{0, true, false}});
        out.push_back({s, ImprovementSet{2, true, false}});
        if (s == Strategy::grid) {
            out.push_back({s, ImprovementSet{0, false, true}});
            out.push_back({s, ImprovementSet{0, true, true}});
        }
    }
    return out;
}

}  // namespace

int cmd_verify(const VerifyConfig& cfg) {
    if (cfg.count < 1) throw config_error("verify: count must be >= 1");
    if (cfg.max_n < 2) throw config_error("verify: max-n must be >= 2");
    if (cfg.max_n > cfg.cap)
        throw config_error("verify: dataset size " + std::to_string(cfg.max_n) +
                           " exceeds the verification cap of " + std::to_string(cfg.cap));
    for (const int d : cfg.dims)
        if (d < 2 || d > 8) throw config_error("verify: dims must lie in [2,8]");

    detail::Rng pick(cfg.seed);
    std::vector<std::string> failures;
    std::size_t runs = 0;
    const auto all_combos = combos();

    for (int i = 0; i < cfg.count; ++i) {
        const std::uint64_t dseed = cfg.seed + (std::uint64_t)i * 7919ULL + 1;
        const std::size_t n = 2 + (std::size_t)(pick.uniform01() * (double)(cfg.max_n - 1));
        const int d = cfg.dims[i % cfg.dims.size()];
        const DataKind kind = (i % 2 == 0) ? DataKind::anticorrelated : DataKind::independent;
        const Dataset ds = generate({kind, n, d, dseed, 0.05});
        const WeightConstraintSet c = constraint_variant(i % 3, d);
        const FDomContext ctx = make_fdom_context(c);

        const auto sky = skyline_bruteforce(ds);
        const auto nd_ref = oracle_nd(ds, ctx);
        const Dataset nd_data = select_by_ids(ds, nd_ref);
        const auto po_ref = oracle_po(nd_data, c, ctx);

        std::ostringstream tag;
        tag << "seed=" << dseed << " n=" << n << " d=" << d << " kind=" << to_string(kind)
            << " cvariant=" << (i % 3);
        if (!is_subset(po_ref, nd_ref) || !is_subset(nd_ref, sky))
            failures.push_back(tag.str() + ": containment chain violated");

        for (const auto& [strategy, imp] : all_combos) {
            for (const FlexOp op : {FlexOp::nd, FlexOp::po}) {
                EngineOptions opt;
                opt.strategy = strategy;
                opt.op = op;
                opt.partitions = 1 + (i % 7);
                opt.cores = 1 + (i % 2);
                opt.representatives = imp.representatives;
                opt.noseq = imp.noseq;
                opt.grid_filter = imp.grid_filter;
                opt.seed = dseed;
                const Dataset& input = (op == FlexOp::po) ? nd_data : ds;
                const auto rep = run_parallel(input, c, opt);
                ++runs;
                const auto& expect = (op == FlexOp::po) ? po_ref : nd_ref;
                if (rep.result_ids != expect) {
                    std::ostringstream msg;
                    msg << tag.str() << " strategy=" << to_string(strategy)
                        << " improvements=" << improvements_label(imp)
                        << " op=" << to_string(op) << " p=" << opt.partitions
                        << " cores=" << opt.cores << ": got " << ids_brief(rep.result_ids)
                        << " want " << ids_brief(expect);
                    failures.push_back(msg.str());
                }
            }
        }
    }

    if (cfg.self_check) {
        // Prove the harness notices a wrong answer: disable the final pass
        // on a run whose union is strictly larger than the true result.
        bool detected = false, exercised = false;
        for (int attempt = 0; attempt < 25 && !exercised; ++attempt) {
            const std::uint64_t dseed = cfg.seed + 900000 + attempt;
            const Dataset ds = generate({DataKind::anticorrelated, 300, 3, dseed, 0.05});
            const WeightConstraintSet c = constraint_variant(1, 3);
            const FDomContext ctx = make_fdom_context(c);
            const auto nd_ref = oracle_nd(ds, ctx);
            EngineOptions opt;
            opt.strategy = Strategy::sliced;
            opt.op = FlexOp::nd;
            opt.partitions = 4;
            opt.cores = 2;
            const auto honest = run_parallel(ds, c, opt);
            if (honest.union_size == honest.result_ids.size()) continue;  // fault would hide
            exercised = true;
            opt.debug_skip_final = true;
            const auto faulty = run_parallel(ds, c, opt);
            detected = faulty.result_ids != nd_ref;
        }
        if (!exercised)
            failures.push_back("self-check: could not construct a union larger than the result");
        else if (!detected)
            failures.push_back("self-check: injected fault was not detected");
        else
            std::cout << "self-check: injected fault detected as expected\n";
    }

    if (failures.empty()) {
        std::cout << "verify: " << cfg.count << " datasets, " << runs
                  << " engine runs, all results match the oracles\n";
        return 0;
    }
    std::cout << "verify: " << failures.size() << " mismatches across " << runs
              << " engine runs\n";
    for (const auto& f : failures) std::cout << "  " << f << '\n';
    return 1;
}

}  // namespace flexsky
