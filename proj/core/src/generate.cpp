#include "lexit/generate.hpp"

#include <algorithm>
#include <set>

#include "lexit/error.hpp"

namespace lexit {

std::vector<Vertex> random_vertex_set(int k, Coord bound, std::size_t count,
                                      Xorshift64Star& rng) {
  if (bound < 1) raise(Errc::bad_config, "bound must be >= 1");
  double box = 1;
  for (int i = 0; i < k; ++i) box *= static_cast<double>(bound);
  if (static_cast<double>(count) > box) count = static_cast<std::size_t>(box);

  std::set<Vertex> picked;
  while (picked.size() < count) {
    std::vector<Coord> c(k);
    for (int i = 0; i < k; ++i) c[i] = static_cast<Coord>(rng.below(static_cast<std::uint64_t>(bound)));
    picked.insert(Vertex(std::move(c)));
  }
  return {picked.begin(), picked.end()};
}

LatticeDigraph random_induced(int k, Coord bound, std::size_t max_vertices, double density,
                              std::uint64_t seed) {
  Xorshift64Star rng(seed);
  std::vector<Vertex> verts = random_vertex_set(k, bound, max_vertices, rng);
  return induce(EdgeRule::seeded_random(density, 0, rng.next()), k, std::move(verts));
}

std::vector<Value> random_E(int p, Coord bound, Xorshift64Star& rng) {
  if (bound < p) raise(Errc::bad_config, "bound must be >= p");
  std::set<Value> picked;
  while (picked.size() < static_cast<std::size_t>(p))
    picked.insert(static_cast<Value>(rng.below(static_cast<std::uint64_t>(bound))));
  return {picked.begin(), picked.end()};
}

JumpFreeInputs sample_jump_free_inputs(int k, Coord bound, std::size_t b_size,
                                       Xorshift64Star& rng) {
  JumpFreeInputs in;
  in.B = random_vertex_set(k, bound, b_size, rng);
  in.x = in.B[rng.below(in.B.size())];
  for (const Vertex& z : in.B) {
    if (z == in.x || z.max() < in.x.max()) continue;
    if (rng.next_unit() < 0.5) in.extras.push_back(z);
  }
  return in;
}

}  // namespace lexit
