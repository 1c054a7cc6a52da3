#include "lexit/subset_sum.hpp"

#include <algorithm>

#include "lexit/error.hpp"

namespace lexit {

namespace {

constexpr Value kTableCap = Value(1) << 26;
constexpr std::size_t kCountBits = 24;

}  // namespace

SolveResult solve_subset_sum(const std::vector<Value>& items, Value target, SolveMode mode) {
  for (Value v : items)
    if (v < 0) raise(Errc::precondition_failed, "items must be nonnegative");
  if (target < 0) return {false, std::nullopt, mode == SolveMode::count ? std::optional<std::uint64_t>(0) : std::nullopt};

  if (mode == SolveMode::count) {
    // exact enumeration of index subsets; independent of the DP path
    if (items.size() > kCountBits)
      raise(Errc::budget_exceeded, "counting capped at 2^24 subsets; use decide");
    std::uint64_t count = 0;
    std::optional<std::vector<std::size_t>> wit;
    const std::uint64_t n = items.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
      Value s = 0;
      for (std::uint64_t i = 0; i < n; ++i)
        if (mask & (std::uint64_t(1) << i)) s += items[i];
      if (s == target) {
        ++count;
        if (!wit) {
          std::vector<std::size_t> w;
          for (std::uint64_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t(1) << i)) w.push_back(i);
          wit = std::move(w);
        }
      }
    }
    return {count > 0, wit, count};
  }

  if (target > kTableCap)
    raise(Errc::budget_exceeded, "target beyond DP table cap 2^26");

  // reachable[s] true iff some prefix subset sums to s; parent[s] = index of
  // the item that first reached s, for witness reconstruction
  std::vector<bool> reach(static_cast<std::size_t>(target) + 1, false);
  std::vector<std::int32_t> parent(static_cast<std::size_t>(target) + 1, -1);
  reach[0] = true;
  for (std::size_t i = 0; i < items.size(); ++i) {
    Value v = items[i];
    if (v > target) continue;
    for (Value s = target; s >= v; --s) {
      if (reach[static_cast<std::size_t>(s)]) continue;
      if (reach[static_cast<std::size_t>(s - v)] &&
          parent[static_cast<std::size_t>(s - v)] < static_cast<std::int32_t>(i)) {
        reach[static_cast<std::size_t>(s)] = true;
        parent[static_cast<std::size_t>(s)] = static_cast<std::int32_t>(i);
      }
    }
  }
  if (!reach[static_cast<std::size_t>(target)]) return {false, std::nullopt, std::nullopt};
  if (mode == SolveMode::decide) return {true, std::nullopt, std::nullopt};

  std::vector<std::size_t> wit;
  Value s = target;
  while (s > 0) {
    std::int32_t i = parent[static_cast<std::size_t>(s)];
    wit.push_back(static_cast<std::size_t>(i));
    s -= items[static_cast<std::size_t>(i)];
  }
  std::sort(wit.begin(), wit.end());
  return {true, wit, std::nullopt};
}

}  // namespace lexit
