#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "flexsky/bench.hpp"

namespace flexsky {
namespace {

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

int cmd_plotdata(const PlotConfig& cfg) {
    struct Axis {
        const char* x;
        const char* y;
    };
    static const std::map<std::string, Axis> figures = {
        {"time-vs-n", {"n", "t_total_s"}},       {"removal-vs-n", {"n", "removed_pct"}},
        {"time-vs-d", {"d", "t_total_s"}},       {"time-vs-p", {"p", "t_total_s"}},
        {"time-vs-cores", {"cores", "t_total_s"}},
    };
    const auto fig = figures.find(cfg.figure);
    if (fig == figures.end()) {
        std::string known;
        for (const auto& [name, axis] : figures) known += (known.empty() ? "" : ", ") + name;
        throw config_error("unknown figure '" + cfg.figure + "'; known: " + known);
    }

    std::ifstream in(cfg.metrics_path, std::ios::binary);
    if (!in) throw config_error("cannot open metrics file: " + cfg.metrics_path);
    std::string line;
    if (!std::getline(in, line)) throw config_error("empty metrics file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kMetricsHeader)
        throw config_error("metrics file has an unexpected header");

    // series label -> x value -> samples
    std::map<std::string, std::map<double, std::vector<double>>> series;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const MetricsRow r = parse_metrics_line(line);
        double x = 0.0, y = 0.0;
        const std::string xname = fig->second.x, yname = fig->second.y;
        if (xname == "n") x = (double)r.n;
        else if (xname == "d") x = (double)r.d;
        else if (xname == "p") x = (double)r.p;
        else x = (double)r.cores;
        y = (yname == std::string("removed_pct")) ? r.removed_pct : r.t_total_s;
        series[r.strategy + "/" + r.improvements + "/" + r.op][x].push_back(y);
    }
    if (series.empty()) throw config_error("metrics file has no data rows");

    std::map<double, std::map<std::string, double>> table;
    for (const auto& [label, points] : series)
        for (const auto& [x, ys] : points) table[x][label] = median(ys);

    std::filesystem::create_directories(cfg.out_dir);
    const std::string out_path = cfg.out_dir + "/" + cfg.figure + ".dat";
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw config_error("cannot open for writing: " + out_path);
    out << "# " << cfg.figure << ": x=" << fig->second.x << " y=" << fig->second.y
        << " (median over duplicate x)\n";
    out << "# " << fig->second.x;
    for (const auto& [label, points] : series) out << ' ' << label;
    out << '\n';
    for (const auto& [x, by_label] : table) {
        out << x;
        for (const auto& [label, points] : series) {
            const auto it = by_label.find(label);
            out << ' ';
            if (it == by_label.end()) out << "nan";
            else out << it->second;
        }
        out << '\n';
    }
    std::cout << "plotdata: wrote " << out_path << '\n';
    return 0;
}

}  // namespace flexsky
