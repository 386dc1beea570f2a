#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace flexsky {

using TupleId = std::int64_t;

/// A point with d numeric attributes normalized to [0,1]; smaller is better.
struct Tuple {
    TupleId id = 0;
    std::vector<double> values;
};

/// Immutable relation of same-dimensionality tuples with unique ids.
class Dataset {
  public:
    Dataset(int dim, std::vector<Tuple> tuples);

    int dim() const { return dim_; }
    std::size_t size() const { return tuples_.size(); }
    const std::vector<Tuple>& tuples() const { return tuples_; }
    const Tuple& operator[](std::size_t i) const { return tuples_[i]; }

  private:
    int dim_;
    std::vector<Tuple> tuples_;
};

/// Weight vector on the standard simplex (componentwise >= 0, sums to 1).
using WeightVector = std::vector<double>;

/// Homogeneous linear constraints a·w >= 0 on the scoring weights, applied
/// on top of the implicit simplex conditions w >= 0 and sum(w) = 1.
class WeightConstraintSet {
  public:
    /// Throws std::runtime_error when the constrained weight polytope is
    /// empty.  The check runs the vertex enumeration in polytope.cpp,
    /// where this constructor is defined.
    WeightConstraintSet(int dim, std::vector<std::vector<double>> rows);

    int dim() const { return dim_; }
    const std::vector<std::vector<double>>& rows() const { return rows_; }

  private:
    int dim_;
    std::vector<std::vector<double>> rows_;
};

/// Classic Pareto dominance: t <= s everywhere, < somewhere.
bool dominates(std::span<const double> t, std::span<const double> s);
bool dominates(const Tuple& t, const Tuple& s);

/// Weighted sum of attribute values (lower scores are better).
double score(std::span<const double> w, std::span<const double> values);
double score(const WeightVector& w, const Tuple& t);

/// All-pairs reference skyline; ids sorted ascending.
std::vector<TupleId> skyline_bruteforce(const Dataset& r);

/// Subset of r restricted to the given ids, preserving dataset order.
Dataset select_by_ids(const Dataset& r, const std::vector<TupleId>& ids);

}  // namespace flexsky
