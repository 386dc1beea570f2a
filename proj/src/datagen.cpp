#include "flexsky/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "flexsky/detail/rng.hpp"

namespace flexsky {
namespace {

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

}  // namespace

const char* to_string(DataKind k) {
    switch (k) {
        case DataKind::anticorrelated: return "anticorrelated";
        case DataKind::correlated: return "correlated";
        case DataKind::independent: return "independent";
    }
    return "?";
}

DataKind parse_data_kind(const std::string& name) {
    if (name == "anticorrelated") return DataKind::anticorrelated;
    if (name == "correlated") return DataKind::correlated;
    if (name == "independent") return DataKind::independent;
    throw std::invalid_argument("unknown dataset kind: " + name);
}

Dataset generate(const GenSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("datagen: n must be >= 1");
    if (spec.dim < 2 || spec.dim > 16)
        throw std::invalid_argument("datagen: dim must be in [2,16]");
    if (!std::isfinite(spec.sigma) || spec.sigma < 0.0)
        throw std::invalid_argument("datagen: sigma must be finite and >= 0");

    detail::Rng rng(spec.seed);
    const int d = spec.dim;
    std::vector<Tuple> tuples;
    tuples.reserve(spec.n);
    std::vector<double> raw(d);
    for (std::size_t i = 0; i < spec.n; ++i) {
        Tuple t;
        t.id = (TupleId)i;
        t.values.resize(d);
        switch (spec.kind) {
            case DataKind::independent:
                for (int k = 0; k < d; ++k) t.values[k] = rng.uniform01();
                break;
            case DataKind::correlated: {
                const double base = rng.uniform01();
                for (int k = 0; k < d; ++k)
                    t.values[k] = clamp01(base + rng.normal(spec.sigma));
                break;
            }
            case DataKind::anticorrelated: {
                double mean = 0.0;
                for (int k = 0; k < d; ++k) {
                    raw[k] = rng.uniform01();
                    mean += raw[k];
                }
                mean /= d;
                const double g = rng.normal(spec.sigma) / std::sqrt((double)d);
                for (int k = 0; k < d; ++k)
                    t.values[k] = clamp01(raw[k] - mean + 0.5 + g);
                break;
            }
        }
        tuples.push_back(std::move(t));
    }
    return Dataset(d, std::move(tuples));
}

}  // namespace flexsky
