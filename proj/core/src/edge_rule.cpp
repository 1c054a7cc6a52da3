#include "lexit/edge_rule.hpp"

#include <memory>
#include <set>

#include "lexit/error.hpp"
#include "lexit/order_types.hpp"
#include "lexit/rng.hpp"

namespace lexit {

namespace {

std::vector<std::uint64_t> pair_words(const Vertex& x, const Vertex& y) {
  std::vector<std::uint64_t> w;
  w.reserve(x.k() + y.k());
  for (Coord c : x.coords()) w.push_back(static_cast<std::uint64_t>(c));
  for (Coord c : y.coords()) w.push_back(static_cast<std::uint64_t>(c));
  return w;
}

}  // namespace

EdgeRule EdgeRule::explicit_edges(const std::vector<Edge>& edges) {
  auto set = std::make_shared<std::set<Edge>>(edges.begin(), edges.end());
  for (const Edge& e : *set) {
    if (e.first.max() <= e.second.max())
      raise(Errc::not_downward,
            "edge " + e.first.str() + " -> " + e.second.str() + " violates max(x) > max(y)");
  }
  return EdgeRule([set](const Vertex& x, const Vertex& y) { return set->count({x, y}) != 0; },
                  "explicit");
}

EdgeRule EdgeRule::seeded_random(double density, Coord box, std::uint64_t seed) {
  if (density < 0.0 || density > 1.0) raise(Errc::bad_config, "density must be in [0,1]");
  return EdgeRule(
      [density, box, seed](const Vertex& x, const Vertex& y) {
        if (box > 0 && (x.max() >= box || y.max() >= box)) return false;
        auto w = pair_words(x, y);
        return unit_from_hash(mix_words(seed, w)) < density;
      },
      "seeded-random");
}

EdgeRule EdgeRule::order_type_table(std::map<Tuple, bool> table) {
  auto t = std::make_shared<std::map<Tuple, bool>>(std::move(table));
  return EdgeRule(
      [t](const Vertex& x, const Vertex& y) {
        std::vector<Coord> cat(x.coords());
        cat.insert(cat.end(), y.coords().begin(), y.coords().end());
        auto it = t->find(rank_tuple(std::span<const Coord>(cat)));
        return it != t->end() && it->second;
      },
      "order-type-table");
}

EdgeRule EdgeRule::seeded_order_table(double q, std::uint64_t seed) {
  if (q < 0.0 || q > 1.0) raise(Errc::bad_config, "q must be in [0,1]");
  return EdgeRule(
      [q, seed](const Vertex& x, const Vertex& y) {
        std::vector<Coord> cat(x.coords());
        cat.insert(cat.end(), y.coords().begin(), y.coords().end());
        Tuple r = rank_tuple(std::span<const Coord>(cat));
        std::vector<std::uint64_t> w(r.begin(), r.end());
        return unit_from_hash(mix_words(seed, w)) < q;
      },
      "seeded-order-table");
}

EdgeRule EdgeRule::complete() {
  return EdgeRule([](const Vertex&, const Vertex&) { return true; }, "complete");
}

EdgeRule EdgeRule::edgeless() {
  return EdgeRule([](const Vertex&, const Vertex&) { return false; }, "edgeless");
}

}  // namespace lexit
