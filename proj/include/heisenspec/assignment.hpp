#pragma once

#include <cstddef>
#include <vector>

#include "heisenspec/extended.hpp"
#include "heisenspec/graph.hpp"
#include "heisenspec/symmetric_product.hpp"

namespace heisenspec {

/// Square matrix of extended nonnegative integers; infinite entries are
/// forbidden pairings.
class CostMatrix {
 public:
  CostMatrix() = default;
  explicit CostMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, ExtendedInt(0)) {}
  CostMatrix(std::size_t dim, std::vector<ExtendedInt> row_major);

  std::size_t dim() const { return dim_; }
  ExtendedInt operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
  ExtendedInt& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }

 private:
  std::size_t dim_ = 0;
  std::vector<ExtendedInt> entries_;
};

struct Assignment {
  ExtendedInt value;
  /// permutation[row] = column. Empty when no finite assignment exists.
  std::vector<std::size_t> permutation;
};

/// Minimum-cost perfect assignment by Kuhn-Munkres, O(a^3) for the value.
/// Among optimal permutations the lexicographically smallest is returned.
Assignment min_assignment(const CostMatrix& cost);

/// Optimal value only; skips the tie-breaking pass.
ExtendedInt min_assignment_value(const CostMatrix& cost);

/// Distance between two k-sets in G^{k} via the assignment reduction: shared
/// members are stripped and the rest are matched by base-graph distance.
ExtendedInt kset_distance(const KSet& x, const KSet& y, const DistanceMatrix& d);

}  // namespace heisenspec
