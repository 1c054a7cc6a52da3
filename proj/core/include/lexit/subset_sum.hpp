#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lexit/vertex.hpp"

namespace lexit {

struct InstanceMeta {
  int k = 0;
  int p = 0;
  std::vector<Value> E;
  std::size_t EL_size = 0;  // cells of E^k with label below min(E)
  Value S = 0;              // their label sum
};

struct SubsetSumInstance {
  std::vector<Value> items;  // construction order
  Value target = 0;
  // indices into items summing to target, when the construction knows one
  std::optional<std::vector<std::size_t>> designated;
  InstanceMeta meta;
};

enum class SolveMode { decide, witness, count };

struct SolveResult {
  bool solvable = false;
  std::optional<std::vector<std::size_t>> witness;  // sorted indices
  std::optional<std::uint64_t> count;               // distinct index subsets
};

// Exact solver, independent of the instance construction: decide/witness via
// dynamic programming over sums, count via enumeration of index subsets
// (budget 2^24 subsets; larger counting requests raise budget_exceeded, use
// decide instead). Items must be nonnegative.
SolveResult solve_subset_sum(const std::vector<Value>& items, Value target, SolveMode mode);

inline SolveResult solve_subset_sum(const SubsetSumInstance& inst, SolveMode mode) {
  return solve_subset_sum(inst.items, inst.target, mode);
}

}  // namespace lexit
