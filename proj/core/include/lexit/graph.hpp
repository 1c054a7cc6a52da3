#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "lexit/edge_rule.hpp"
#include "lexit/vertex.hpp"

namespace lexit {

// Finite downward directed graph on N^k: every edge (x,y) satisfies
// max(x) > max(y), which forces acyclicity. Immutable after construction.
// Vertices are kept sorted lexicographically; adjacency lists are sorted the
// same way, so all traversals are deterministic.
class LatticeDigraph {
 public:
  LatticeDigraph() = default;

  int k() const { return k_; }
  std::size_t size() const { return verts_.size(); }
  const std::vector<Vertex>& vertices() const { return verts_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool contains(const Vertex& v) const { return index_.count(v) != 0; }
  std::uint32_t index_of(const Vertex& v) const;
  const Vertex& vertex(std::uint32_t i) const { return verts_[i]; }

  std::span<const std::uint32_t> successors(std::uint32_t i) const {
    return adj_[i];
  }
  bool terminal(std::uint32_t i) const { return adj_[i].empty(); }
  bool terminal(const Vertex& v) const { return terminal(index_of(v)); }

  // Valid evaluation order for max-recursive labelers: every successor of a
  // vertex appears before it.
  std::vector<std::uint32_t> by_increasing_max() const;

  friend LatticeDigraph make_graph(int k, std::vector<Vertex> vertices, std::vector<Edge> edges);

 private:
  int k_ = 0;
  std::vector<Vertex> verts_;
  std::unordered_map<Vertex, std::uint32_t> index_;
  std::vector<std::vector<std::uint32_t>> adj_;
  std::vector<Edge> edges_;
};

// Validates dimensions, membership of edge endpoints and the downward
// condition; deduplicates input.
LatticeDigraph make_graph(int k, std::vector<Vertex> vertices, std::vector<Edge> edges);

// Induced subgraph on D: edges are exactly the pairs of D the rule admits.
LatticeDigraph induce(const EdgeRule& rule, int k, std::vector<Vertex> D);

// Vertices reachable from z by directed paths, z included; sorted.
std::vector<Vertex> reachable(const LatticeDigraph& G, const Vertex& z);

// Terminal vertices reachable from z (the possible exits of maximal paths
// starting at z). z itself must not be terminal: callers handle that case via
// the max(z) convention of the labelers.
std::vector<Vertex> terminal_targets(const LatticeDigraph& G, const Vertex& z);

// Restriction of G to the part E^k caps: drops vertices whose max exceeds
// max(E) and stray non-cube vertices on the max(E) layer, so that the maximal
// vertices of the result are exactly those of E^k. E^k must be contained in
// G. Labels and reachable sets of surviving vertices are unchanged (edges
// never lead from smaller max to larger).
LatticeDigraph trim_to_cap(const LatticeDigraph& G, const std::vector<Value>& E);

// Seeded generator over the box {0..coord_bound-1}^k: every candidate pair
// with max(x) > max(y) gets one RNG decision, in lexicographic pair order.
LatticeDigraph random_downward(int k, Coord coord_bound, double density, std::uint64_t seed);

// All vertices of E^k (lexicographic). E must be nonempty, strictly
// ascending.
std::vector<Vertex> cube_of(const std::vector<Value>& E, int k);

}  // namespace lexit
