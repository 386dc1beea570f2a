#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "flexsky/datagen.hpp"
#include "flexsky/engine.hpp"

namespace flexsky {

/// Bad flags, impossible combinations, missing inputs.  The CLI maps this
/// (and std::invalid_argument) to exit code 2.
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One combination of optional engine improvements.
struct ImprovementSet {
    int representatives = 0;  // heads per partition; 0 disables the filter
    bool noseq = false;
    bool grid_filter = false;
};

std::string improvements_label(const ImprovementSet& s);

/// Parses tokens such as "none", "reps", "noseq", "gridfilter" and
/// '+'-joined combinations; "reps" uses rep_count heads per partition.
ImprovementSet parse_improvements(const std::string& token, int rep_count);

struct MetricsRow {
    std::string strategy;
    std::string improvements;
    std::string op;
    std::size_t n = 0;
    int d = 0;
    int p = 0;
    int cores = 0;
    std::uint64_t seed = 0;
    double t_partition_s = 0.0;
    double t_parallel_s = 0.0;
    double t_sequential_s = 0.0;
    double t_total_s = 0.0;
    std::size_t union_size = 0;
    double removed_pct = 0.0;
    std::size_t result_size = 0;
};

inline constexpr const char* kMetricsHeader =
    "strategy,improvements,op,n,d,p,cores,seed,t_partition_s,t_parallel_s,"
    "t_sequential_s,t_total_s,union_size,removed_pct,result_size";

std::string to_csv_line(const MetricsRow& row);
MetricsRow parse_metrics_line(const std::string& line);

/// Experiment grid with cross-product semantics over every axis.  Axes
/// left empty are filled from the profile: "paper" (the defaults) pins
/// single headline values, "desk" sweeps a laptop-sized grid.
struct RunConfig {
    std::string profile;            // "", "paper" or "desk"
    std::string data_path;          // exclusive with sizes/dims/kind
    DataKind kind = DataKind::anticorrelated;
    std::vector<std::size_t> sizes;
    std::vector<int> dims;
    std::vector<int> partitions;
    std::vector<int> cores;
    std::vector<Strategy> strategies;
    std::vector<FlexOp> ops;
    std::vector<std::uint64_t> seeds;
    std::vector<std::string> improvements;  // tokens for parse_improvements
    int rep_count = 5;
    int slice_dim = 0;
    std::string constraints_path;
    std::vector<std::string> constraint_exprs;  // default {"w1 >= w2"}
    std::string metrics_path = "metrics.csv";
    std::string ids_out;  // result-id dump, single-point grids only
    std::size_t max_points = 512;
};

int cmd_run(const RunConfig& cfg);

struct VerifyConfig {
    int count = 100;           // datasets to draw
    std::size_t max_n = 300;   // per-dataset tuple count upper bound
    std::size_t cap = 2000;    // refuse anything larger
    std::vector<int> dims = {2, 3, 4};
    std::uint64_t seed = 1;
    bool self_check = false;   // also prove the harness detects a fault
};

/// Replays every strategy/improvement/operator combination against
/// independent oracles; returns 1 and prints the differences on mismatch.
int cmd_verify(const VerifyConfig& cfg);

struct PlotConfig {
    std::string metrics_path = "metrics.csv";
    std::string figure;
    std::string out_dir = ".";
};

/// Reduces a metrics CSV to a gnuplot-style .dat table for one figure:
/// time-vs-n, removal-vs-n, time-vs-d, time-vs-p or time-vs-cores.
int cmd_plotdata(const PlotConfig& cfg);

/// Quadratic all-pairs reference for the non-dominated set.
std::vector<TupleId> oracle_nd(const Dataset& r, const FDomContext& ctx);

/// Full-LP reference for the potentially optimal set of an ND input.
std::vector<TupleId> oracle_po(const Dataset& nd, const WeightConstraintSet& c,
                               const FDomContext& ctx);

}  // namespace flexsky
