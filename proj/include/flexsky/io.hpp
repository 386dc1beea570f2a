#pragma once

#include <string>

#include "flexsky/core.hpp"
#include "flexsky/datagen.hpp"

namespace flexsky {

/// Writes `id,a1,...,ad` rows with shortest round-trip float formatting,
/// so saving and reloading reproduces every value bit for bit.
void save_dataset_csv(const std::string& path, const Dataset& ds);

/// Loads a dataset CSV.  Any dimension with values outside [0,1] is
/// min-max rescaled at load time (a constant out-of-range column maps to
/// 0); non-finite values and malformed rows are errors.
Dataset load_dataset_csv(const std::string& path);

/// Writes `<csv_path>.meta.json` echoing the generation parameters.
void save_gen_sidecar(const std::string& csv_path, const GenSpec& spec);

/// Parses constraint text, one inequality per line.  Each line is a sum
/// of terms `c*wi` compared with `>=` against 0 or another term sum, so
/// both `2*w1 + -1*w2 >= 0` and the shorthand `w1 >= w2` work.  Blank
/// lines and lines starting with '#' are skipped.  Construction fails if
/// the resulting weight polytope is empty.
WeightConstraintSet parse_constraints_text(const std::string& text, int dim);
WeightConstraintSet load_constraints(const std::string& path, int dim);

}  // namespace flexsky
