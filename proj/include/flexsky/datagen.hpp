#pragma once

#include <cstdint>
#include <string>

#include "flexsky/core.hpp"

namespace flexsky {

enum class DataKind { anticorrelated, correlated, independent };

const char* to_string(DataKind k);
DataKind parse_data_kind(const std::string& name);

struct GenSpec {
    DataKind kind = DataKind::anticorrelated;
    std::size_t n = 0;
    int dim = 4;
    std::uint64_t seed = 42;
    double sigma = 0.05;  // jitter standard deviation
};

/// Deterministic synthetic dataset in [0,1]^d with sequential ids.
/// independent: iid uniform coordinates.  correlated: one uniform base
/// value per tuple plus per-coordinate gaussian jitter.  anticorrelated:
/// a uniform point projected onto the plane sum(x) = d/2, then jittered
/// along the plane normal; coordinates clamp to [0,1].
Dataset generate(const GenSpec& spec);

}  // namespace flexsky
