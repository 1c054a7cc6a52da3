#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lexit/vertex.hpp"

namespace lexit {

using Tuple = std::vector<int>;

// Pure predicate deciding edge presence for ordered pairs (x,y). A rule never
// admits a pair with max(x) <= max(y), so induced graphs are downward by
// construction. Rules must be deterministic functions of the pair alone.
class EdgeRule {
 public:
  using Fn = std::function<bool(const Vertex&, const Vertex&)>;

  EdgeRule() = default;

  bool operator()(const Vertex& x, const Vertex& y) const {
    if (x.max() <= y.max()) return false;
    return fn_(x, y);
  }

  const std::string& describe() const { return desc_; }

  static EdgeRule explicit_edges(const std::vector<Edge>& edges);

  // One hash decision per pair, probability `density`; pairs with a
  // coordinate outside {0..box-1} are rejected when box > 0.
  static EdgeRule seeded_random(double density, Coord box, std::uint64_t seed);

  // Verdict depends only on the order type of the concatenated 2k-tuple
  // (x,y): explicit table form. Classes absent from the table get no edge.
  static EdgeRule order_type_table(std::map<Tuple, bool> table);

  // Order-type rule with a hash verdict per class, probability q.
  static EdgeRule seeded_order_table(double q, std::uint64_t seed);

  // All downward pairs present / no pairs present.
  static EdgeRule complete();
  static EdgeRule edgeless();

 private:
  EdgeRule(Fn fn, std::string desc) : fn_(std::move(fn)), desc_(std::move(desc)) {}

  Fn fn_;
  std::string desc_;
};

}  // namespace lexit
