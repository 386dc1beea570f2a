#include "flexsky/core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace flexsky {

Dataset::Dataset(int dim, std::vector<Tuple> tuples)
    : dim_(dim), tuples_(std::move(tuples)) {
    if (dim_ < 2) throw std::invalid_argument("dataset dimensionality must be >= 2");
    std::unordered_set<TupleId> seen;
    seen.reserve(tuples_.size());
    for (const Tuple& t : tuples_) {
        if (t.id < 0)
            throw std::invalid_argument("tuple id must be non-negative, got " + std::to_string(t.id));
        if (!seen.insert(t.id).second)
            throw std::invalid_argument("duplicate tuple id " + std::to_string(t.id));
        if ((int)t.values.size() != dim_)
            throw std::invalid_argument("tuple " + std::to_string(t.id) + " has wrong dimensionality");
        for (double v : t.values)
            if (!std::isfinite(v) || v < 0.0 || v > 1.0)
                throw std::invalid_argument("tuple " + std::to_string(t.id) +
                                            " has a value outside [0,1]");
    }
}

bool dominates(std::span<const double> t, std::span<const double> s) {
    if (t.size() != s.size())
        throw std::invalid_argument("dominance test on mismatched dimensionalities");
    bool strict = false;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] > s[i]) return false;
        if (t[i] < s[i]) strict = true;
    }
    return strict;
}

bool dominates(const Tuple& t, const Tuple& s) {
    return dominates(std::span<const double>(t.values), std::span<const double>(s.values));
}

double score(std::span<const double> w, std::span<const double> values) {
    if (w.size() != values.size())
        throw std::invalid_argument("score on mismatched dimensionalities");
    double acc = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) acc += w[i] * values[i];
    return acc;
}

double score(const WeightVector& w, const Tuple& t) {
    return score(std::span<const double>(w), std::span<const double>(t.values));
}

std::vector<TupleId> skyline_bruteforce(const Dataset& r) {
    const auto& ts = r.tuples();
    std::vector<TupleId> out;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < ts.size() && !dominated; ++j)
            dominated = j != i && dominates(ts[j], ts[i]);
        if (!dominated) out.push_back(ts[i].id);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Dataset select_by_ids(const Dataset& r, const std::vector<TupleId>& ids) {
    std::unordered_set<TupleId> want(ids.begin(), ids.end());
    std::vector<Tuple> picked;
    picked.reserve(want.size());
    for (const Tuple& t : r.tuples())
        if (want.count(t.id)) picked.push_back(t);
    return Dataset(r.dim(), std::move(picked));
}

}  // namespace flexsky
