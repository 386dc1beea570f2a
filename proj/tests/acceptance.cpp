// End-to-end acceptance checks, one line of output per criterion.
// Exit code 0 only if every criterion holds.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "flexsky/bench.hpp"
#include "flexsky/io.hpp"
#include "flexsky/sequential.hpp"
#include "testutil.hpp"

using namespace flexsky;

namespace {

// Pinned acceptance tolerances and workloads.
constexpr double kWorkedExampleBudgetS = 1.0;
constexpr int kOracleDatasets = 200;
constexpr std::size_t kOracleMaxN = 500;
constexpr double kOracleBudgetS = 300.0;
constexpr double kVertexMatchTol = 1e-9;
constexpr int kExtremalitySets = 50;
constexpr std::size_t kDeskN = 100000;
constexpr std::size_t kDeskSmallN = 10000;
constexpr int kDeskDim = 4;
constexpr int kDeskPartitions = 32;
constexpr double kScaleFactorLo = 5.0;
constexpr double kScaleFactorHi = 30.0;

struct Outcome {
    bool pass = false;
    std::string detail;
};

double now_s() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

std::string fmt(double v) {
    std::ostringstream out;
    out.precision(3);
    out << std::fixed << v;
    return out.str();
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// ---- worked example ---------------------------------------------------

Outcome worked_example() {
    const double t0 = now_s();
    const auto ds = testutil::nine_points();
    const auto c = testutil::w1_ge_w2();
    const auto ctx = make_fdom_context(c);
    const std::vector<TupleId> want_sky{0, 1, 4, 7, 8};  // a b e h i
    const std::vector<TupleId> want_nd{0, 1, 4};         // a b e
    const std::vector<TupleId> want_po{0, 4};            // a e
    long long runs = 0, bad = 0;

    if (skyline_bruteforce(ds) != want_sky) ++bad;
    if (nd_sve1f(ds, ctx) != want_nd) ++bad;
    const auto nd_data = select_by_ids(ds, want_nd);
    if (po_popi2(nd_data, c, ctx) != want_po) ++bad;

    for (const auto strategy :
         {Strategy::grid, Strategy::angular, Strategy::sliced, Strategy::random})
        for (const int p : {1, 2, 3})
            for (const int cores : {1, 2})
                for (const int k : {0, 1})
                    for (const bool noseq : {false, true}) {
                        EngineOptions opt;
                        opt.strategy = strategy;
                        opt.partitions = p;
                        opt.cores = cores;
                        opt.representatives = k;
                        opt.noseq = noseq;
                        opt.seed = 7;
                        opt.op = FlexOp::nd;
                        if (run_parallel(ds, c, opt).result_ids != want_nd) ++bad;
                        opt.op = FlexOp::po;
                        if (run_parallel(nd_data, c, opt).result_ids != want_po) ++bad;
                        runs += 2;
                    }
    const double dt = now_s() - t0;
    Outcome o;
    o.pass = bad == 0 && dt < kWorkedExampleBudgetS;
    o.detail = std::to_string(runs) + " engine runs, " + std::to_string(bad) +
               " mismatches, " + fmt(dt) + "s (budget " + fmt(kWorkedExampleBudgetS) + "s)";
    return o;
}

// ---- oracle suite ------------------------------------------------------

struct SuiteStats {
    long long engine_runs = 0;
    long long mismatches = 0;
    long long containment_violations = 0;
    long long noseq_pairs = 0, noseq_mismatches = 0;
    long long gridfilter_pairs = 0, gridfilter_mismatches = 0;
    int datasets = 0;
    double seconds = 0.0;
};

WeightConstraintSet suite_constraints(int variant, int d) {
    std::vector<std::vector<double>> rows;
    auto pref = [&](int hi, int lo) {
        std::vector<double> row(d, 0.0);
        row[hi] = 1.0;
        row[lo] = -1.0;
        rows.push_back(std::move(row));
    };
    if (variant >= 1) pref(0, 1);
    if (variant == 2 && d >= 3) pref(1, 2);
    return WeightConstraintSet(d, std::move(rows));
}

SuiteStats run_oracle_suite() {
    SuiteStats st;
    const double t0 = now_s();
    const int dims[] = {2, 3, 4};

    for (int i = 0; i < kOracleDatasets; ++i) {
        const int d = dims[i % 3];
        const int cvariant = (i / 3) % 3;
        const DataKind kind = (i % 2) ? DataKind::independent : DataKind::anticorrelated;
        const std::uint64_t seed = 1000 + (std::uint64_t)i * 7919ULL;
        const std::size_t n = 2 + (std::size_t)((i * 131 + 17) % (int)(kOracleMaxN - 1));
        const Dataset ds = generate({kind, n, d, seed, 0.05});
        const WeightConstraintSet c = suite_constraints(cvariant, d);
        const FDomContext ctx = make_fdom_context(c);

        const auto sky = skyline_bruteforce(ds);
        const auto nd_ref = oracle_nd(ds, ctx);
        const Dataset nd_data = select_by_ids(ds, nd_ref);
        const auto po_ref = oracle_po(nd_data, c, ctx);
        ++st.datasets;

        if (!std::includes(nd_ref.begin(), nd_ref.end(), po_ref.begin(), po_ref.end()) ||
            !std::includes(sky.begin(), sky.end(), nd_ref.begin(), nd_ref.end()))
            ++st.containment_violations;

        std::vector<std::pair<Strategy, ImprovementSet>> combos;
        for (const Strategy s :
             {Strategy::grid, Strategy::angular, Strategy::sliced, Strategy::random}) {
            combos.push_back({s, ImprovementSet{}});
            combos.push_back({s, ImprovementSet{5, false, false}});
            combos.push_back({s, ImprovementSet{0, true, false}});
            combos.push_back({s, ImprovementSet{5, true, false}});
            if (s == Strategy::grid) {
                combos.push_back({s, ImprovementSet{0, false, true}});
                combos.push_back({s, ImprovementSet{0, true, true}});
            }
        }

        std::map<std::string, std::vector<TupleId>> got_nd, got_po;
        for (const auto& [strategy, imp] : combos) {
            EngineOptions opt;
            opt.strategy = strategy;
            opt.partitions = 1 + (i % 8);
            opt.cores = 1 + (i % 2);
            opt.representatives = imp.representatives;
            opt.noseq = imp.noseq;
            opt.grid_filter = imp.grid_filter;
            opt.seed = seed;
            const std::string key =
                std::string(to_string(strategy)) + "/" + improvements_label(imp);

            opt.op = FlexOp::nd;
            const auto rn = run_parallel(ds, c, opt).result_ids;
            got_nd[key] = rn;
            if (rn != nd_ref) ++st.mismatches;

            opt.op = FlexOp::po;
            const auto rp = run_parallel(nd_data, c, opt).result_ids;
            got_po[key] = rp;
            if (rp != po_ref) ++st.mismatches;
            st.engine_runs += 2;
        }

        auto pair_check = [&](const std::string& a, const std::string& b, long long& pairs,
                              long long& bad) {
            for (const auto* res : {&got_nd, &got_po}) {
                ++pairs;
                if (res->at(a) != res->at(b)) ++bad;
            }
        };
        for (const char* s : {"grid", "angular", "sliced", "random"}) {
            pair_check(std::string(s) + "/none", std::string(s) + "/noseq", st.noseq_pairs,
                       st.noseq_mismatches);
            pair_check(std::string(s) + "/reps5", std::string(s) + "/reps5+noseq",
                       st.noseq_pairs, st.noseq_mismatches);
        }
        pair_check("grid/gridfilter", "grid/noseq+gridfilter", st.noseq_pairs,
                   st.noseq_mismatches);
        pair_check("grid/none", "grid/gridfilter", st.gridfilter_pairs,
                   st.gridfilter_mismatches);
        pair_check("grid/noseq", "grid/noseq+gridfilter", st.gridfilter_pairs,
                    st.gridfilter_mismatches);
    }
    st.seconds = now_s() - t0;
    return st;
}

Outcome oracle_equivalence(const SuiteStats& st) {
    Outcome o;
    o.pass = st.mismatches == 0 && st.seconds < kOracleBudgetS;
    o.detail = std::to_string(st.datasets) + " datasets, " +
               std::to_string(st.engine_runs) + " engine runs, " +
               std::to_string(st.mismatches) + " mismatches, " + fmt(st.seconds) +
               "s (budget " + fmt(kOracleBudgetS) + "s)";
    return o;
}

Outcome containment_chain(const SuiteStats& st) {
    Outcome o;
    o.pass = st.containment_violations == 0;
    o.detail = std::to_string(st.datasets) + " datasets, " +
               std::to_string(st.containment_violations) + " violations";
    return o;
}

Outcome gridfilter_soundness(const SuiteStats& st) {
    Outcome o;
    o.pass = st.gridfilter_mismatches == 0;
    o.detail = std::to_string(st.gridfilter_pairs) + " filtered/unfiltered pairs, " +
               std::to_string(st.gridfilter_mismatches) + " differ";
    return o;
}

Outcome noseq_equivalence(const SuiteStats& st) {
    Outcome o;
    o.pass = st.noseq_mismatches == 0;
    o.detail = std::to_string(st.noseq_pairs) + " final-pass pairs, " +
               std::to_string(st.noseq_mismatches) + " differ";
    return o;
}

// ---- polytope vertices -------------------------------------------------

bool vertices_match(const std::vector<WeightVector>& got,
                    const std::vector<WeightVector>& want) {
    if (got.size() != want.size()) return false;
    for (std::size_t i = 0; i < got.size(); ++i) {
        if (got[i].size() != want[i].size()) return false;
        for (std::size_t j = 0; j < got[i].size(); ++j)
            if (std::abs(got[i][j] - want[i][j]) > kVertexMatchTol) return false;
    }
    return true;
}

Outcome vertex_enumeration() {
    int bad = 0;
    const auto v1 = enumerate_vertices(testutil::w1_ge_w2()).vertices;
    if (!vertices_match(v1, {{0.5, 0.5}, {1.0, 0.0}})) ++bad;
    const auto v2 = enumerate_vertices(testutil::empty_constraints(3)).vertices;
    if (!vertices_match(v2, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}})) ++bad;
    const auto v3 = enumerate_vertices(testutil::chain3()).vertices;
    if (!vertices_match(v3, {{1.0 / 3, 1.0 / 3, 1.0 / 3}, {0.5, 0.5, 0.0}, {1, 0, 0}}))
        ++bad;

    // Every enumerated vertex must be extreme: never inside the hull of the
    // other vertices.
    std::mt19937_64 gen(4242);
    int hull_failures = 0;
    for (int rep = 0; rep < kExtremalitySets; ++rep) {
        const int d = 2 + rep % 4;  // up to d=5
        const WeightConstraintSet c(d, testutil::random_feasible_rows(gen, d, 3));
        const auto verts = enumerate_vertices(c).vertices;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            std::vector<WeightVector> others;
            for (std::size_t j = 0; j < verts.size(); ++j)
                if (j != i) others.push_back(verts[j]);
            if (others.empty()) continue;
            if (testutil::in_convex_hull(verts[i], others, 1e-7)) ++hull_failures;
        }
    }
    Outcome o;
    o.pass = bad == 0 && hull_failures == 0;
    o.detail = std::to_string(bad) + " frozen-example mismatches, " +
               std::to_string(hull_failures) + " non-extreme vertices across " +
               std::to_string(kExtremalitySets) + " random constraint sets";
    return o;
}

// ---- desk-scale orderings ----------------------------------------------

ExecutionReport desk_run(const Dataset& ds, const WeightConstraintSet& c, Strategy s,
                         FlexOp op, int cores, bool noseq, std::uint64_t seed) {
    EngineOptions opt;
    opt.strategy = s;
    opt.op = op;
    opt.partitions = kDeskPartitions;
    opt.cores = cores;
    opt.noseq = noseq;
    opt.seed = seed;
    return run_parallel(ds, c, opt);
}

Outcome union_size_ordering() {
    const WeightConstraintSet c = suite_constraints(1, kDeskDim);
    int grid_ge_angular = 0, angular_ge_sliced = 0;
    std::vector<double> gu, au, su;
    for (const std::uint64_t seed : {1, 2, 3, 4, 5}) {
        const Dataset ds = generate({DataKind::anticorrelated, kDeskN, kDeskDim, seed, 0.05});
        const auto g = desk_run(ds, c, Strategy::grid, FlexOp::nd, 4, true, seed);
        const auto a = desk_run(ds, c, Strategy::angular, FlexOp::nd, 4, true, seed);
        const auto s = desk_run(ds, c, Strategy::sliced, FlexOp::nd, 4, true, seed);
        gu.push_back((double)g.union_size);
        au.push_back((double)a.union_size);
        su.push_back((double)s.union_size);
        if (g.union_size >= a.union_size) ++grid_ge_angular;
        if (a.union_size >= s.union_size) ++angular_ge_sliced;
    }
    Outcome o;
    o.pass = grid_ge_angular >= 3 && angular_ge_sliced >= 3;
    o.detail = "median union grid=" + std::to_string((long long)median(gu)) +
               " angular=" + std::to_string((long long)median(au)) +
               " sliced=" + std::to_string((long long)median(su)) + "; grid>=angular on " +
               std::to_string(grid_ge_angular) + "/5, angular>=sliced on " +
               std::to_string(angular_ge_sliced) + "/5 seeds";
    return o;
}

Outcome po_removal_ordering() {
    const WeightConstraintSet c = suite_constraints(1, kDeskDim);
    const FDomContext ctx = make_fdom_context(c);
    int angular_gt_sliced = 0;
    std::vector<double> ar, sr;
    for (const std::uint64_t seed : {1, 2, 3, 4, 5}) {
        const Dataset ds = generate({DataKind::anticorrelated, kDeskN, kDeskDim, seed, 0.05});
        const auto nd = desk_run(ds, c, Strategy::sliced, FlexOp::nd, 4, true, seed);
        const Dataset nd_data = select_by_ids(ds, nd.result_ids);
        const auto a = desk_run(nd_data, c, Strategy::angular, FlexOp::po, 4, true, seed);
        const auto s = desk_run(nd_data, c, Strategy::sliced, FlexOp::po, 4, true, seed);
        ar.push_back(a.removed_pct);
        sr.push_back(s.removed_pct);
        if (a.removed_pct > s.removed_pct) ++angular_gt_sliced;
    }
    Outcome o;
    o.pass = angular_gt_sliced >= 3;
    o.detail = "median po-stage removal angular=" + fmt(median(ar) * 100.0) +
               "% sliced=" + fmt(median(sr) * 100.0) + "%; angular>sliced on " +
               std::to_string(angular_gt_sliced) + "/5 seeds";
    return o;
}

// ---- scaling and worker caps --------------------------------------------

double median_total(const Dataset& ds, const WeightConstraintSet& c, int cores,
                    std::uint64_t seed) {
    std::vector<double> ts;
    for (int rep = 0; rep < 3; ++rep)
        ts.push_back(desk_run(ds, c, Strategy::sliced, FlexOp::nd, cores, true, seed).t_total_s);
    return median(ts);
}

Outcome scaling_sanity() {
    const WeightConstraintSet c = suite_constraints(1, kDeskDim);
    const Dataset small =
        generate({DataKind::anticorrelated, kDeskSmallN, kDeskDim, 42, 0.05});
    const Dataset large = generate({DataKind::anticorrelated, kDeskN, kDeskDim, 42, 0.05});
    const double t_small = median_total(small, c, 4, 42);
    const double t_large = median_total(large, c, 4, 42);
    const double factor = t_large / t_small;
    Outcome o;
    o.pass = factor >= kScaleFactorLo && factor <= kScaleFactorHi;
    o.detail = "t(" + std::to_string(kDeskSmallN) + ")=" + fmt(t_small) + "s, t(" +
               std::to_string(kDeskN) + ")=" + fmt(t_large) + "s, factor " + fmt(factor) +
               " (accepted range [" + fmt(kScaleFactorLo) + ", " + fmt(kScaleFactorHi) + "])";
    return o;
}

Outcome cores_benefit() {
    const WeightConstraintSet c = suite_constraints(1, kDeskDim);
    int ok = 0;
    std::string per_seed;
    for (const std::uint64_t seed : {1, 2, 3}) {
        const Dataset ds = generate({DataKind::anticorrelated, kDeskN, kDeskDim, seed, 0.05});
        (void)median_total(ds, c, 1, seed);  // warm caches for both arms alike
        const double t1 = median_total(ds, c, 1, seed);
        const double t4 = median_total(ds, c, 4, seed);
        if (t1 >= t4) ++ok;
        per_seed += (per_seed.empty() ? "" : ", ") + std::string("seed ") +
                    std::to_string(seed) + ": t1=" + fmt(t1) + "s t4=" + fmt(t4) + "s";
    }
    Outcome o;
    o.pass = ok >= 2;
    o.detail = per_seed + "; cores=1 not faster on " + std::to_string(ok) + "/3 seeds";
    return o;
}

}  // namespace

int main() {
    int failures = 0;
    auto report = [&](int idx, const char* name, const Outcome& o) {
        std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << idx << ". " << name << ": "
                  << o.detail << '\n'
                  << std::flush;
        if (!o.pass) ++failures;
    };

    report(1, "worked example agrees across all configurations", worked_example());
    const SuiteStats st = run_oracle_suite();
    report(2, "parallel results match independent oracles", oracle_equivalence(st));
    report(3, "containment chain po within nd within skyline", containment_chain(st));
    report(4, "polytope vertex enumeration", vertex_enumeration());
    report(5, "grid-cell pruning soundness", gridfilter_soundness(st));
    report(6, "distributed final pass equivalence", noseq_equivalence(st));
    report(7, "union size ordering across strategies", union_size_ordering());
    report(8, "po-stage removal ordering angular vs sliced", po_removal_ordering());
    report(9, "near-linear scaling of the distributed nd pipeline", scaling_sanity());
    report(10, "worker-cap timing benefit", cores_benefit());

    std::cout << (10 - failures) << "/10 acceptance criteria passed\n";
    return failures ? 1 : 0;
}
