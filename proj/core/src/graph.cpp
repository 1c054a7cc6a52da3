#include "lexit/graph.hpp"

#include <algorithm>
#include <deque>

#include "lexit/error.hpp"
#include "lexit/rng.hpp"

namespace lexit {

namespace {

constexpr Coord kCoordCap = Coord(1) << 32;

void check_vertex(int k, const Vertex& v) {
  if (v.k() != k)
    raise(Errc::dimension_mismatch, "vertex " + v.str() + " has arity " +
                                        std::to_string(v.k()) + ", graph expects " +
                                        std::to_string(k));
  if (v.max() > kCoordCap)
    raise(Errc::too_large, "coordinate above 2^32 in " + v.str());
}

}  // namespace

std::uint32_t LatticeDigraph::index_of(const Vertex& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) raise(Errc::vertex_not_in_domain, v.str() + " not in graph");
  return it->second;
}

std::vector<std::uint32_t> LatticeDigraph::by_increasing_max() const {
  std::vector<std::uint32_t> order(verts_.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [this](std::uint32_t a, std::uint32_t b) {
    return verts_[a].max() < verts_[b].max();
  });
  return order;
}

LatticeDigraph make_graph(int k, std::vector<Vertex> vertices, std::vector<Edge> edges) {
  if (k < 2) raise(Errc::precondition_failed, "graphs need k >= 2");
  LatticeDigraph g;
  g.k_ = k;

  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  for (const Vertex& v : vertices) check_vertex(k, v);
  g.verts_ = std::move(vertices);
  for (std::uint32_t i = 0; i < g.verts_.size(); ++i) g.index_[g.verts_[i]] = i;

  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  g.adj_.resize(g.verts_.size());
  for (const Edge& e : edges) {
    auto a = g.index_.find(e.first);
    auto b = g.index_.find(e.second);
    if (a == g.index_.end() || b == g.index_.end())
      raise(Errc::vertex_not_in_domain,
            "edge endpoint missing: " + e.first.str() + " -> " + e.second.str());
    if (e.first.max() <= e.second.max())
      raise(Errc::not_downward,
            "edge " + e.first.str() + " -> " + e.second.str() + " violates max(x) > max(y)");
    g.adj_[a->second].push_back(b->second);
  }
  g.edges_ = std::move(edges);
  // edge list is sorted, so adjacency lists come out sorted too
  return g;
}

LatticeDigraph induce(const EdgeRule& rule, int k, std::vector<Vertex> D) {
  std::sort(D.begin(), D.end());
  D.erase(std::unique(D.begin(), D.end()), D.end());
  std::vector<Edge> edges;
  for (const Vertex& x : D) {
    for (const Vertex& y : D) {
      if (x.max() > y.max() && rule(x, y)) edges.emplace_back(x, y);
    }
  }
  return make_graph(k, std::move(D), std::move(edges));
}

std::vector<Vertex> reachable(const LatticeDigraph& G, const Vertex& z) {
  std::uint32_t s = G.index_of(z);
  std::vector<bool> seen(G.size(), false);
  std::deque<std::uint32_t> q{s};
  seen[s] = true;
  while (!q.empty()) {
    std::uint32_t u = q.front();
    q.pop_front();
    for (std::uint32_t v : G.successors(u)) {
      if (!seen[v]) {
        seen[v] = true;
        q.push_back(v);
      }
    }
  }
  std::vector<Vertex> out;
  for (std::uint32_t i = 0; i < G.size(); ++i)
    if (seen[i]) out.push_back(G.vertex(i));
  return out;  // vertices() is sorted, so out is sorted
}

std::vector<Vertex> terminal_targets(const LatticeDigraph& G, const Vertex& z) {
  std::uint32_t s = G.index_of(z);
  if (G.terminal(s))
    raise(Errc::terminal_source, z.str() + " is terminal; its label is max(z) by convention");
  std::vector<Vertex> out;
  for (const Vertex& v : reachable(G, z))
    if (G.terminal(G.index_of(v))) out.push_back(v);
  return out;
}

LatticeDigraph trim_to_cap(const LatticeDigraph& G, const std::vector<Value>& E) {
  std::vector<Vertex> cube = cube_of(E, G.k());
  for (const Vertex& v : cube)
    if (!G.contains(v))
      raise(Errc::cube_not_contained, "cube vertex " + v.str() + " missing from graph");
  const Coord emax = *std::max_element(E.begin(), E.end());

  std::vector<Vertex> keep;
  for (const Vertex& v : G.vertices()) {
    if (v.max() > emax) continue;
    if (v.max() == emax) {
      // only the cube may sit on the top layer, so the maximal vertices of
      // the result are exactly those of E^k
      bool in_cube = std::binary_search(cube.begin(), cube.end(), v);
      if (!in_cube) continue;
    }
    keep.push_back(v);
  }
  std::vector<Edge> edges;
  for (const Edge& e : G.edges()) {
    if (std::binary_search(keep.begin(), keep.end(), e.first) &&
        std::binary_search(keep.begin(), keep.end(), e.second))
      edges.push_back(e);
  }
  return make_graph(G.k(), std::move(keep), std::move(edges));
}

LatticeDigraph random_downward(int k, Coord coord_bound, double density, std::uint64_t seed) {
  if (coord_bound < 1) raise(Errc::bad_config, "coord_bound must be >= 1");
  if (density < 0.0 || density > 1.0) raise(Errc::bad_config, "density must be in [0,1]");
  double box_size = 1;
  for (int i = 0; i < k; ++i) box_size *= static_cast<double>(coord_bound);
  if (box_size > 4096)
    raise(Errc::too_large, "box of " + std::to_string(box_size) + " vertices; cap is 4096");
  std::vector<Vertex> box;
  std::vector<Coord> c(k, 0);
  while (true) {
    box.emplace_back(c);
    int i = k - 1;
    while (i >= 0 && c[i] == coord_bound - 1) c[i--] = 0;
    if (i < 0) break;
    ++c[i];
  }
  // box is generated in lexicographic order; one RNG draw per candidate pair,
  // in lexicographic pair order, keeps output reproducible byte for byte.
  Xorshift64Star rng(seed);
  std::vector<Edge> edges;
  for (const Vertex& x : box) {
    for (const Vertex& y : box) {
      if (x.max() <= y.max()) continue;
      if (rng.next_unit() < density) edges.emplace_back(x, y);
    }
  }
  return make_graph(k, std::move(box), std::move(edges));
}

std::vector<Vertex> cube_of(const std::vector<Value>& E, int k) {
  if (E.empty()) raise(Errc::precondition_failed, "E must be nonempty");
  std::vector<Value> s(E);
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    raise(Errc::precondition_failed, "E must have distinct elements");
  std::vector<Vertex> cube;
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    std::vector<Coord> c(k);
    for (int i = 0; i < k; ++i) c[i] = s[idx[i]];
    cube.emplace_back(std::move(c));
    int i = k - 1;
    while (i >= 0 && idx[i] == s.size() - 1) idx[i--] = 0;
    if (i < 0) break;
    ++idx[i];
  }
  return cube;
}

}  // namespace lexit
