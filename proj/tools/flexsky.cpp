#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "flexsky/bench.hpp"
#include "flexsky/io.hpp"

namespace {

struct GenArgs {
    std::string kind = "anticorrelated";
    std::size_t n = 0;
    int dim = 4;
    std::uint64_t seed = 42;
    double sigma = 0.05;
    std::string out;
};

int run_gen(const GenArgs& args) {
    flexsky::GenSpec spec;
    spec.kind = flexsky::parse_data_kind(args.kind);
    spec.n = args.n;
    spec.dim = args.dim;
    spec.seed = args.seed;
    spec.sigma = args.sigma;
    const flexsky::Dataset ds = flexsky::generate(spec);
    flexsky::save_dataset_csv(args.out, ds);
    flexsky::save_gen_sidecar(args.out, spec);
    std::cout << "gen: wrote " << ds.size() << " tuples (d=" << ds.dim() << ") to " << args.out
              << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"flexible skylines over partitioned datasets"};
    app.require_subcommand(1);
    app.set_config("--config");

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "generate a synthetic dataset CSV");
    gen->add_option("--kind", gen_args.kind, "anticorrelated | correlated | independent")
        ->capture_default_str();
    gen->add_option("-n,--size", gen_args.n, "number of tuples")->required();
    gen->add_option("-d,--dim", gen_args.dim, "attributes per tuple")->capture_default_str();
    gen->add_option("--seed", gen_args.seed, "generator seed")->capture_default_str();
    gen->add_option("--sigma", gen_args.sigma, "jitter standard deviation")
        ->capture_default_str();
    gen->add_option("-o,--out", gen_args.out, "output CSV path")->required();

    flexsky::RunConfig run_cfg;
    std::vector<std::string> run_strategies, run_ops;
    auto* run = app.add_subcommand("run", "execute an experiment grid and append metrics");
    run->add_option("--profile", run_cfg.profile, "paper | desk (defaults for unset axes)");
    run->add_option("--data", run_cfg.data_path, "dataset CSV instead of synthetic data");
    run->add_option("--kind", run_cfg.kind, "synthetic dataset kind")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, flexsky::DataKind>{
                {"anticorrelated", flexsky::DataKind::anticorrelated},
                {"correlated", flexsky::DataKind::correlated},
                {"independent", flexsky::DataKind::independent}},
            CLI::ignore_case));
    run->add_option("--sizes", run_cfg.sizes, "dataset sizes")->delimiter(',');
    run->add_option("--dims", run_cfg.dims, "dimensionalities")->delimiter(',');
    run->add_option("--partitions", run_cfg.partitions, "partition counts")->delimiter(',');
    run->add_option("--cores", run_cfg.cores, "worker caps")->delimiter(',');
    run->add_option("--strategy", run_strategies, "grid | angular | sliced | random")
        ->delimiter(',');
    run->add_option("--op", run_ops, "nd | po")->delimiter(',');
    run->add_option("--seed", run_cfg.seeds, "dataset seeds")->delimiter(',');
    run->add_option("--improvements", run_cfg.improvements,
                    "combinations of none|reps|noseq|gridfilter joined with +")
        ->delimiter(',');
    run->add_option("--representatives", run_cfg.rep_count,
                    "heads per partition for the reps improvement")
        ->capture_default_str();
    bool flag_noseq = false;
    run->add_flag("--noseq", flag_noseq, "distribute the final pass");
    std::string gridfilter_str = "off";
    run->add_option("--grid-filter", gridfilter_str, "on | off")->capture_default_str();
    run->add_option("--slice-dim", run_cfg.slice_dim, "slicing attribute (0-based)")
        ->capture_default_str();
    run->add_option("--constraints", run_cfg.constraints_path, "constraint file");
    run->add_option("--constraint", run_cfg.constraint_exprs,
                    "inline constraint expression (repeatable)");
    run->add_option("--metrics", run_cfg.metrics_path, "metrics CSV to append to")
        ->capture_default_str();
    run->add_option("--ids-out", run_cfg.ids_out, "result-id dump (single-point grids)");
    run->add_option("--max-points", run_cfg.max_points, "experiment grid cap")
        ->capture_default_str();

    flexsky::VerifyConfig verify_cfg;
    auto* verify = app.add_subcommand("verify", "replay engine results against oracles");
    verify->add_option("--count", verify_cfg.count, "datasets to draw")->capture_default_str();
    verify->add_option("--max-n", verify_cfg.max_n, "largest dataset size")
        ->capture_default_str();
    verify->add_option("--cap", verify_cfg.cap, "hard size cap")->capture_default_str();
    verify->add_option("--dims", verify_cfg.dims, "dimensionalities to cycle")->delimiter(',');
    verify->add_option("--seed", verify_cfg.seed, "base seed")->capture_default_str();
    verify->add_flag("--self-check", verify_cfg.self_check,
                     "also prove the harness detects an injected fault");

    flexsky::PlotConfig plot_cfg;
    auto* plot = app.add_subcommand("plotdata", "reduce metrics to plot-ready tables");
    plot->add_option("--metrics", plot_cfg.metrics_path, "metrics CSV")->capture_default_str();
    plot->add_option("--figure", plot_cfg.figure,
                     "time-vs-n | removal-vs-n | time-vs-d | time-vs-p | time-vs-cores")
        ->required();
    plot->add_option("--out-dir", plot_cfg.out_dir, "output directory")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) return run_gen(gen_args);
        if (run->parsed()) {
            for (const auto& s : run_strategies)
                run_cfg.strategies.push_back(flexsky::parse_strategy(s));
            for (const auto& o : run_ops) run_cfg.ops.push_back(flexsky::parse_op(o));
            if (gridfilter_str != "on" && gridfilter_str != "off")
                throw flexsky::config_error("--grid-filter takes on or off");
            if (run_cfg.improvements.empty()) {
                flexsky::ImprovementSet s;
                s.noseq = flag_noseq;
                s.grid_filter = gridfilter_str == "on";
                if (run->count("--representatives")) s.representatives = run_cfg.rep_count;
                run_cfg.improvements = {flexsky::improvements_label(s)};
            }
            return flexsky::cmd_run(run_cfg);
        }
        if (verify->parsed()) return flexsky::cmd_verify(verify_cfg);
        if (plot->parsed()) return flexsky::cmd_plotdata(plot_cfg);
    } catch (const flexsky::config_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
