#include "flexsky/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace flexsky {
namespace {

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

[[noreturn]] void parse_fail(const std::string& path, std::size_t line, const std::string& what) {
    throw std::runtime_error(path + ":" + std::to_string(line) + ": " + what);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace((unsigned char)s.front())) s.remove_prefix(1);
    while (!s.empty() && std::isspace((unsigned char)s.back())) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

double parse_double(std::string_view s, const std::string& path, std::size_t line) {
    const auto t = trim(s);
    double v = 0.0;
    const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
    if (res.ec != std::errc{} || res.ptr != t.data() + t.size())
        parse_fail(path, line, "not a number: '" + std::string(t) + "'");
    return v;
}

// One side of a constraint inequality: a sum of `c*wi` terms, or the
// literal 0.  Returns per-weight coefficients.
std::vector<double> parse_term_sum(std::string_view side, int dim, std::size_t line) {
    std::vector<double> coeff(dim, 0.0);
    std::string s;
    for (const char ch : side)
        if (!std::isspace((unsigned char)ch)) s.push_back(ch);
    if (s.empty()) throw std::runtime_error("line " + std::to_string(line) + ": empty side");
    if (s == "0" || s == "+0" || s == "-0") return coeff;

    std::size_t i = 0;
    while (i < s.size()) {
        double sign = 1.0;
        if (s[i] == '+' || s[i] == '-') {
            sign = (s[i] == '-') ? -1.0 : 1.0;
            ++i;
        }
        double mag = 1.0;
        if (i < s.size() && (std::isdigit((unsigned char)s[i]) || s[i] == '.' ||
                             s[i] == '+' || s[i] == '-')) {
            const char* begin = s.data() + i;
            char* end = nullptr;
            mag = std::strtod(begin, &end);
            if (end == begin)
                throw std::runtime_error("line " + std::to_string(line) + ": bad coefficient");
            i += (std::size_t)(end - begin);
            if (i < s.size() && s[i] == '*') ++i;
        }
        if (i >= s.size() || s[i] != 'w')
            throw std::runtime_error("line " + std::to_string(line) +
                                     ": expected a weight term like w1 or 2*w1");
        ++i;
        const std::size_t digits = i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        if (i == digits)
            throw std::runtime_error("line " + std::to_string(line) + ": missing weight index");
        const int idx = std::stoi(s.substr(digits, i - digits));
        if (idx < 1 || idx > dim)
            throw std::runtime_error("line " + std::to_string(line) + ": weight index w" +
                                     std::to_string(idx) + " out of range for dimensionality " +
                                     std::to_string(dim));
        coeff[idx - 1] += sign * mag;
    }
    return coeff;
}

}  // namespace

void save_dataset_csv(const std::string& path, const Dataset& ds) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "id";
    for (int i = 1; i <= ds.dim(); ++i) out << ",a" << i;
    out << '\n';
    std::string row;
    for (const Tuple& t : ds.tuples()) {
        row.clear();
        row += std::to_string(t.id);
        for (const double v : t.values) {
            row += ',';
            row += format_double(v);
        }
        row += '\n';
        out << row;
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

Dataset load_dataset_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error(path + ": empty file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto header = split(line, ',');
    if (header.size() < 3 || trim(header[0]) != "id")
        throw std::runtime_error(path + ": header must be id,a1,...,ad with d >= 2");
    const int dim = (int)header.size() - 1;

    std::vector<Tuple> tuples;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        const auto fields = split(line, ',');
        if ((int)fields.size() != dim + 1)
            parse_fail(path, lineno, "expected " + std::to_string(dim + 1) + " fields, got " +
                                         std::to_string(fields.size()));
        Tuple t;
        const auto idf = trim(fields[0]);
        const auto idres = std::from_chars(idf.data(), idf.data() + idf.size(), t.id);
        if (idres.ec != std::errc{} || idres.ptr != idf.data() + idf.size())
            parse_fail(path, lineno, "bad id: '" + std::string(idf) + "'");
        t.values.resize(dim);
        for (int i = 0; i < dim; ++i) {
            t.values[i] = parse_double(fields[i + 1], path, lineno);
            if (!std::isfinite(t.values[i])) parse_fail(path, lineno, "non-finite value");
        }
        tuples.push_back(std::move(t));
    }

    // Per-dimension min-max rescale of any dimension that leaves [0,1].
    for (int i = 0; i < dim; ++i) {
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (const Tuple& t : tuples) {
            lo = std::min(lo, t.values[i]);
            hi = std::max(hi, t.values[i]);
        }
        if (tuples.empty() || (lo >= 0.0 && hi <= 1.0)) continue;
        for (Tuple& t : tuples) {
            double v = (hi > lo) ? (t.values[i] - lo) / (hi - lo) : 0.0;
            t.values[i] = std::min(1.0, std::max(0.0, v));
        }
    }
    return Dataset(dim, std::move(tuples));
}

void save_gen_sidecar(const std::string& csv_path, const GenSpec& spec) {
    nlohmann::json j{{"kind", to_string(spec.kind)},
                     {"n", spec.n},
                     {"dim", spec.dim},
                     {"seed", spec.seed},
                     {"sigma", spec.sigma}};
    const std::string path = csv_path + ".meta.json";
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << j.dump(2) << '\n';
}

WeightConstraintSet parse_constraints_text(const std::string& text, int dim) {
    std::vector<std::vector<double>> rows;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;
        const std::size_t op = stripped.find(">=");
        if (op == std::string_view::npos)
            throw std::runtime_error("line " + std::to_string(lineno) +
                                     ": constraint must use >=");
        const auto lhs = parse_term_sum(stripped.substr(0, op), dim, lineno);
        const auto rhs = parse_term_sum(stripped.substr(op + 2), dim, lineno);
        std::vector<double> row(dim, 0.0);
        for (int i = 0; i < dim; ++i) row[i] = lhs[i] - rhs[i];
        rows.push_back(std::move(row));
    }
    return WeightConstraintSet(dim, std::move(rows));
}

WeightConstraintSet load_constraints(const std::string& path, int dim) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_constraints_text(buf.str(), dim);
}

}  // namespace flexsky
