#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "chromfold/color_set.hpp"
#include "chromfold/complex.hpp"
#include "chromfold/error.hpp"

namespace chromfold {

/// One immediate-snapshot execution: processes in the same block write and
/// then snapshot together, blocks run in order.
struct OrderedPartition {
  std::vector<ColorSet> blocks;

  friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;
};

/// Number of ordered set partitions of a k-element set.
std::uint64_t fubini(int k);

/// All ordered set partitions of {0, ..., n}, lexicographically ordered.
std::vector<OrderedPartition> enumerate_executions(int n, std::size_t limit = size_limit());

/// Views produced by an execution: color i in block k sees B_1 ∪ ... ∪ B_k.
/// Sorted by color.
std::vector<ChromaticVertex> top_cell_of(const OrderedPartition& execution);

struct CrossValidationReport {
  int n = 0;
  std::size_t executions = 0;
  std::size_t subdivision_cells = 0;
  bool injective = true;
  std::vector<std::vector<ChromaticVertex>> only_in_oracle;
  std::vector<std::vector<ChromaticVertex>> only_in_subdivision;
  bool match() const {
    return injective && only_in_oracle.empty() && only_in_subdivision.empty() &&
           executions == subdivision_cells;
  }
};

/// Compares the execution-generated cells against chromatic_subdivide_simplex(n).
CrossValidationReport cross_validate(int n, std::size_t limit = size_limit());

}  // namespace chromfold
