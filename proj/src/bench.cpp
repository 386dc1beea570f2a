#include "flexsky/bench.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "flexsky/io.hpp"
#include "flexsky/sequential.hpp"

namespace flexsky {
namespace {

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::vector<std::string> split_str(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

WeightConstraintSet constraints_for(const RunConfig& cfg, int dim) {
    if (!cfg.constraints_path.empty()) return load_constraints(cfg.constraints_path, dim);
    std::string text;
    if (cfg.constraint_exprs.empty()) {
        text = "w1 >= w2\n";
    } else {
        for (const auto& e : cfg.constraint_exprs) text += e + "\n";
    }
    return parse_constraints_text(text, dim);
}

// The parallel run used to precompute the ND input of a PO pipeline.  Its
// time is deliberately not part of the PO measurements.
Dataset nd_input_for(const Dataset& ds, const WeightConstraintSet& c) {
    EngineOptions opt;
    opt.strategy = Strategy::sliced;
    opt.op = FlexOp::nd;
    opt.partitions = 32;
    opt.cores = 4;
    opt.noseq = true;
    const auto rep = run_parallel(ds, c, opt);
    return select_by_ids(ds, rep.result_ids);
}

void append_metrics(const std::string& path, const MetricsRow& row) {
    const bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
    if (!fresh) {
        std::ifstream in(path, std::ios::binary);
        std::string first;
        std::getline(in, first);
        if (!first.empty() && first.back() == '\r') first.pop_back();
        if (first != kMetricsHeader)
            throw config_error("metrics file " + path + " has a different schema");
    }
    std::ofstream out(path, std::ios::binary | std::ios::app);
    if (!out) throw config_error("cannot open metrics file: " + path);
    if (fresh) out << kMetricsHeader << '\n';
    out << to_csv_line(row) << '\n';
}

}  // namespace

std::string improvements_label(const ImprovementSet& s) {
    std::string out;
    if (s.representatives > 0) out += "reps" + std::to_string(s.representatives);
    if (s.noseq) out += (out.empty() ? "" : "+") + std::string("noseq");
    if (s.grid_filter) out += (out.empty() ? "" : "+") + std::string("gridfilter");
    return out.empty() ? "none" : out;
}

ImprovementSet parse_improvements(const std::string& token, int rep_count) {
    ImprovementSet s;
    for (const auto& part : split_str(token, '+')) {
        if (part == "none" || part.empty()) continue;
        if (part == "reps") {
            s.representatives = rep_count > 0 ? rep_count : 5;
        } else if (part.rfind("reps", 0) == 0 &&
                   part.find_first_not_of("0123456789", 4) == std::string::npos &&
                   part.size() > 4) {
            s.representatives = std::stoi(part.substr(4));
            if (s.representatives < 1) throw config_error("reps count must be >= 1");
        } else if (part == "noseq") {
            s.noseq = true;
        } else if (part == "gridfilter") {
            s.grid_filter = true;
        } else {
            throw config_error("unknown improvement token: " + part);
        }
    }
    return s;
}

std::string to_csv_line(const MetricsRow& r) {
    std::ostringstream out;
    out << r.strategy << ',' << r.improvements << ',' << r.op << ',' << r.n << ',' << r.d << ','
        << r.p << ',' << r.cores << ',' << r.seed << ',' << format_double(r.t_partition_s) << ','
        << format_double(r.t_parallel_s) << ',' << format_double(r.t_sequential_s) << ','
        << format_double(r.t_total_s) << ',' << r.union_size << ','
        << format_double(r.removed_pct) << ',' << r.result_size;
    return out.str();
}

MetricsRow parse_metrics_line(const std::string& line) {
    const auto f = split_str(line, ',');
    if (f.size() != 15) throw std::runtime_error("metrics row must have 15 fields");
    MetricsRow r;
    r.strategy = f[0];
    r.improvements = f[1];
    r.op = f[2];
    r.n = std::stoull(f[3]);
    r.d = std::stoi(f[4]);
    r.p = std::stoi(f[5]);
    r.cores = std::stoi(f[6]);
    r.seed = std::stoull(f[7]);
    r.t_partition_s = std::stod(f[8]);
    r.t_parallel_s = std::stod(f[9]);
    r.t_sequential_s = std::stod(f[10]);
    r.t_total_s = std::stod(f[11]);
    r.union_size = std::stoull(f[12]);
    r.removed_pct = std::stod(f[13]);
    r.result_size = std::stoull(f[14]);
    return r;
}

int cmd_run(const RunConfig& cfg_in) {
    RunConfig cfg = cfg_in;
    const bool desk = cfg.profile == "desk";
    if (!cfg.profile.empty() && cfg.profile != "paper" && !desk)
        throw config_error("unknown profile: " + cfg.profile);
    if (!cfg.data_path.empty() && (!cfg.sizes.empty() || !cfg.dims.empty()))
        throw config_error("--data is exclusive with --sizes/--dims");

    if (cfg.sizes.empty()) cfg.sizes = desk ? std::vector<std::size_t>{10000, 50000, 100000}
                                            : std::vector<std::size_t>{1000000};
    if (cfg.dims.empty()) cfg.dims = desk ? std::vector<int>{2, 3, 4} : std::vector<int>{4};
    if (cfg.partitions.empty())
        cfg.partitions = desk ? std::vector<int>{4, 16, 32} : std::vector<int>{100};
    if (cfg.cores.empty()) cfg.cores = desk ? std::vector<int>{1, 2, 4, 8} : std::vector<int>{30};
    if (cfg.strategies.empty()) cfg.strategies = {Strategy::sliced};
    if (cfg.ops.empty()) cfg.ops = {FlexOp::nd};
    if (cfg.seeds.empty()) cfg.seeds = {42};
    if (cfg.improvements.empty()) cfg.improvements = {"none"};

    std::vector<ImprovementSet> improvs;
    for (const auto& token : cfg.improvements)
        improvs.push_back(parse_improvements(token, cfg.rep_count));

    std::optional<Dataset> file_data;
    if (!cfg.data_path.empty()) {
        file_data = load_dataset_csv(cfg.data_path);
        cfg.sizes = {file_data->size()};
        cfg.dims = {file_data->dim()};
        if (cfg.seeds.size() > 1)
            throw config_error("--data runs ignore dataset seeds; give at most one");
    }

    const std::size_t points = cfg.sizes.size() * cfg.dims.size() * cfg.seeds.size() *
                               cfg.partitions.size() * cfg.cores.size() *
                               cfg.strategies.size() * cfg.ops.size() * improvs.size();
    if (points == 0) throw config_error("empty experiment grid");
    if (points > cfg.max_points)
        throw config_error("experiment grid has " + std::to_string(points) +
                           " points, above the cap of " + std::to_string(cfg.max_points) +
                           "; raise --max-points to allow this");
    if (!cfg.ids_out.empty() && points != 1)
        throw config_error("--ids-out needs a single-point grid");

    std::size_t done = 0, failed = 0;
    for (const std::size_t n : cfg.sizes) {
        for (const int d : cfg.dims) {
            const WeightConstraintSet c = constraints_for(cfg, d);
            for (const std::uint64_t seed : cfg.seeds) {
                std::optional<Dataset> data;
                std::optional<Dataset> nd_input;
                auto dataset = [&]() -> const Dataset& {
                    if (file_data) return *file_data;
                    if (!data) data = generate({cfg.kind, n, d, seed, 0.05});
                    return *data;
                };
                for (const FlexOp op : cfg.ops) {
                    for (const Strategy strategy : cfg.strategies) {
                        for (const int p : cfg.partitions) {
                            for (const int cores : cfg.cores) {
                                for (const ImprovementSet& imp : improvs) {
                                    try {
                                        const Dataset& base = dataset();
                                        if (op == FlexOp::po && !nd_input)
                                            nd_input = nd_input_for(base, c);
                                        const Dataset& input =
                                            (op == FlexOp::po) ? *nd_input : base;
                                        EngineOptions opt;
                                        opt.strategy = strategy;
                                        opt.op = op;
                                        opt.partitions = p;
                                        opt.cores = cores;
                                        opt.representatives = imp.representatives;
                                        opt.noseq = imp.noseq;
                                        opt.grid_filter = imp.grid_filter;
                                        opt.slice_dim = cfg.slice_dim;
                                        opt.seed = seed;
                                        const ExecutionReport rep = run_parallel(input, c, opt);
                                        MetricsRow row;
                                        row.strategy = to_string(strategy);
                                        row.improvements = improvements_label(imp);
                                        row.op = to_string(op);
                                        row.n = base.size();
                                        row.d = d;
                                        row.p = p;
                                        row.cores = cores;
                                        row.seed = seed;
                                        row.t_partition_s = rep.t_partition_s;
                                        row.t_parallel_s = rep.t_parallel_s;
                                        row.t_sequential_s = rep.t_sequential_s;
                                        row.t_total_s = rep.t_total_s;
                                        row.union_size = rep.union_size;
                                        row.removed_pct = rep.removed_pct;
                                        row.result_size = rep.result_ids.size();
                                        append_metrics(cfg.metrics_path, row);
                                        if (!cfg.ids_out.empty()) {
                                            std::ofstream out(cfg.ids_out, std::ios::binary);
                                            if (!out)
                                                throw config_error("cannot open: " + cfg.ids_out);
                                            for (const TupleId id : rep.result_ids)
                                                out << id << '\n';
                                        }
                                        ++done;
                                        std::cout << to_csv_line(row) << '\n';
                                    } catch (const config_error&) {
                                        throw;
                                    } catch (const std::exception& e) {
                                        ++failed;
                                        std::cerr << "point failed (" << to_string(strategy)
                                                  << "," << improvements_label(imp) << ","
                                                  << to_string(op) << ",n=" << n << ",d=" << d
                                                  << ",p=" << p << ",cores=" << cores
                                                  << ",seed=" << seed << "): " << e.what()
                                                  << '\n';
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    std::cerr << "run: " << done << " points recorded to " << cfg.metrics_path;
    if (failed) std::cerr << ", " << failed << " failed";
    std::cerr << '\n';
    return 0;
}

std::vector<TupleId> oracle_nd(const Dataset& r, const FDomContext& ctx) {
    const auto& ts = r.tuples();
    std::vector<TupleId> out;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < ts.size() && !dominated; ++j)
            dominated = j != i && f_dominates(ts[j], ts[i], ctx);
        if (!dominated) out.push_back(ts[i].id);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<TupleId> oracle_po(const Dataset& nd, const WeightConstraintSet& c,
                               const FDomContext& ctx) {
    (void)ctx;
    const auto& ts = nd.tuples();
    std::vector<const Tuple*> ptrs;
    ptrs.reserve(ts.size());
    for (const Tuple& t : ts) ptrs.push_back(&t);
    std::vector<TupleId> out;
    std::vector<const Tuple*> others;
    for (std::size_t i = 0; i < ptrs.size(); ++i) {
        others.clear();
        for (std::size_t j = 0; j < ptrs.size(); ++j)
            if (j != i) others.push_back(ptrs[j]);
        if (is_potentially_optimal(*ptrs[i], others, c)) out.push_back(ptrs[i]->id);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace flexsky
