#pragma once

#include <cstdint>
#include <vector>

#include "lexit/graph.hpp"
#include "lexit/rng.hpp"
#include "lexit/vertex.hpp"

namespace lexit {

// Distinct random vertices from {0..bound-1}^k; count is capped by the box
// size. Result sorted lexicographically.
std::vector<Vertex> random_vertex_set(int k, Coord bound, std::size_t count,
                                      Xorshift64Star& rng);

// Small test-corpus graph: random vertex subset of the box plus a seeded
// random edge rule over it.
LatticeDigraph random_induced(int k, Coord bound, std::size_t max_vertices, double density,
                              std::uint64_t seed);

// Random strictly ascending p values from {0..bound-1}.
std::vector<Value> random_E(int p, Coord bound, Xorshift64Star& rng);

// Inputs for a jump-free check: B, a pivot x in B and extras drawn from the
// B-vertices with max >= max(x).
struct JumpFreeInputs {
  std::vector<Vertex> B;
  Vertex x;
  std::vector<Vertex> extras;
};

JumpFreeInputs sample_jump_free_inputs(int k, Coord bound, std::size_t b_size,
                                       Xorshift64Star& rng);

}  // namespace lexit
