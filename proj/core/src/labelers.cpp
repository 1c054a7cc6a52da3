#include "lexit/labelers.hpp"

#include <algorithm>

#include "lexit/error.hpp"

namespace lexit {

const LabelEntry& LabelMap::at(const Vertex& v) const {
  auto it = m_.find(v);
  if (it == m_.end()) raise(Errc::missing_vertex, "no label for " + v.str());
  return it->second;
}

LabelMap p_total(const LatticeDigraph& G) {
  std::vector<Value> val(G.size());
  LabelMap out;
  for (std::uint32_t i : G.by_increasing_max()) {
    const Vertex& z = G.vertex(i);
    Value v = z.min();
    for (std::uint32_t s : G.successors(i)) v = std::min(v, val[s]);
    val[i] = v;
    out.set(z, {v, G.terminal(i), false});
  }
  return out;
}

LabelMap t_hat(const LatticeDigraph& G) {
  std::vector<Value> val(G.size());
  LabelMap out;
  for (std::uint32_t i : G.by_increasing_max()) {
    const Vertex& z = G.vertex(i);
    Value v;
    if (G.terminal(i)) {
      v = z.max();
    } else {
      bool first = true;
      v = 0;
      for (std::uint32_t s : G.successors(i)) {
        Value c = G.terminal(s) ? G.vertex(s).min() : val[s];
        v = first ? c : std::min(v, c);
        first = false;
      }
    }
    val[i] = v;
    out.set(z, {v, G.terminal(i), false});
  }
  return out;
}

LabelMap p_hat(const LatticeDigraph& G) {
  std::vector<Value> val(G.size());
  LabelMap out;
  for (std::uint32_t i : G.by_increasing_max()) {
    const Vertex& z = G.vertex(i);
    Value v;
    if (G.terminal(i)) {
      v = z.max();
    } else {
      v = z.min();
      for (std::uint32_t s : G.successors(i)) {
        Value c = G.terminal(s) ? G.vertex(s).min() : val[s];
        v = std::min(v, c);
      }
    }
    val[i] = v;
    out.set(z, {v, G.terminal(i), false});
  }
  return out;
}

namespace {

// Depth-first enumeration of maximal paths from src; returns the least
// exit-vertex minimum. Downward graphs are acyclic, so a path is maximal
// exactly when it ends at a terminal vertex.
Value least_exit_min(const LatticeDigraph& G, std::uint32_t src, std::uint64_t max_paths,
                     std::uint64_t& paths) {
  Value best = 0;
  bool have = false;
  // frame: vertex + next successor position
  std::vector<std::pair<std::uint32_t, std::size_t>> stack{{src, 0}};
  while (!stack.empty()) {
    auto& [u, pos] = stack.back();
    auto succ = G.successors(u);
    if (succ.empty()) {
      if (++paths > max_paths)
        raise(Errc::too_large, "maximal-path budget of " + std::to_string(max_paths) +
                                   " exceeded");
      Value m = G.vertex(u).min();
      best = have ? std::min(best, m) : m;
      have = true;
      stack.pop_back();
      continue;
    }
    if (pos == succ.size()) {
      stack.pop_back();
      continue;
    }
    std::uint32_t next = succ[pos++];
    stack.emplace_back(next, 0);
  }
  return best;
}

}  // namespace

LabelMap t_hat_oracle(const LatticeDigraph& G, std::uint64_t max_paths) {
  LabelMap out;
  std::uint64_t paths = 0;
  for (std::uint32_t i = 0; i < G.size(); ++i) {
    const Vertex& z = G.vertex(i);
    if (G.terminal(i)) {
      if (++paths > max_paths)
        raise(Errc::too_large, "maximal-path budget of " + std::to_string(max_paths) +
                                   " exceeded");
      out.set(z, {z.max(), true, false});
    } else {
      out.set(z, {least_exit_min(G, i, max_paths, paths), false, false});
    }
  }
  return out;
}

Significant significant(const LabelMap& f) {
  Significant s;
  for (const auto& [v, e] : f) {
    if (e.value < v.min()) {
      s.vertices.push_back(v);
      s.labels.insert(e.value);
    }
  }
  return s;
}

}  // namespace lexit
