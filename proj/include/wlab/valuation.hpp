#pragma once

#include <cstdint>
#include <memory>
#include <string_view>
#include <variant>
#include <vector>

#include "wlab/itemset.hpp"

namespace wlab {

class Valuation;
using ValuationPtr = std::shared_ptr<const Valuation>;

// value(S) = c + sum_{j in S} l_j; additive when c = 0.
struct LinearValuation {
  double c = 0.0;
  std::vector<double> l;
};

// value(S) = max_{j in S} rho_j, 0 on the empty set.
struct UnitDemandValuation {
  std::vector<double> rho;
};

// Independence oracle for the three supported matroid families.
struct Matroid {
  enum class Kind { Uniform, Partition, Explicit };
  Kind kind = Kind::Uniform;
  int m = 0;
  int rank = 0;                        // uniform
  std::vector<ItemSet> parts;          // partition
  std::vector<int> capacities;         // partition, one per part
  std::vector<ItemSet> sets;           // explicit family; independent = subset of a member

  static Matroid uniform(int m, int rank);
  static Matroid partition(int m, std::vector<ItemSet> parts, std::vector<int> capacities);
  static Matroid explicit_family(int m, std::vector<ItemSet> sets);

  bool independent(ItemSet s) const;
};

// value(S) = weight of the heaviest independent subset of S, computed
// greedily by descending weight (exact for matroids).
struct WeightedMatroidRankValuation {
  Matroid matroid;
  std::vector<double> w;
};

// Unweighted transversal: sum over parts of max_{j in S & P} r_j, r binary.
struct TransversalValuation {
  std::vector<ItemSet> parts;  // partition of all items
  std::vector<int> r;          // 0/1 per item
};

// value(S) = max_k sum_{j in S} clauses[k][j].
struct XosValuation {
  std::vector<std::vector<double>> clauses;
};

// value(S) = total weight of regions covered by some item of S.
struct CoverageValuation {
  struct Region {
    double w = 0.0;
    ItemSet covered_by;
  };
  std::vector<Region> regions;
};

// Arbitrary set function given by a dense table indexed by bundle bitmask.
struct TableValuation {
  std::vector<double> values;  // size 2^m
};

// value(S) = factor(S) * base(S) with factor in [1, 1+eps] per bundle.
struct PerturbedValuation {
  ValuationPtr base;
  double eps = 0.0;
  std::vector<double> factors;  // size 2^m
};

// Immutable, exact evaluator for every valuation class in the library.
// Evaluation is pure; instances are safe to share across threads.
class Valuation {
 public:
  using Spec = std::variant<LinearValuation, UnitDemandValuation,
                            WeightedMatroidRankValuation, TransversalValuation,
                            XosValuation, CoverageValuation, TableValuation,
                            PerturbedValuation>;

  Valuation(int m, Spec spec);  // validates sizes, ranges, finiteness

  int items() const { return m_; }
  double value(ItemSet s) const;
  double operator()(ItemSet s) const { return value(s); }

  const Spec& spec() const { return spec_; }
  std::string_view kind() const;

  template <class T>
  const T* as() const {
    return std::get_if<T>(&spec_);
  }

 private:
  int m_ = 0;
  Spec spec_;
};

// v(S | T) = v(S u T) - v(T).
double marginal(const Valuation& v, ItemSet s, ItemSet t);

// All 2^m values, indexed by bundle bitmask.
std::vector<double> value_table(const Valuation& v);

// Definition-1 style multiplicative perturbation: factors i.i.d. uniform on
// [1, 1+eps] per nonempty bundle, factor(empty) = 1, reproducible from seed.
// With monotone_repair the value table is replaced by its running max over
// subsets, which restores monotonicity for monotone bases while keeping the
// [base, (1+eps)*base] sandwich.
Valuation random_perturbation(const Valuation& base, double eps,
                              std::uint64_t seed, bool monotone_repair = false);

Valuation perturbed_from_factors(const Valuation& base, double eps,
                                 std::vector<double> factors);

}  // namespace wlab
