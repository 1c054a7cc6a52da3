#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "lexit/graph.hpp"
#include "lexit/vertex.hpp"

namespace lexit {

struct LabelEntry {
  Value value = 0;
  bool terminal = false;
  bool phi_empty = false;
};

// Vertex -> label, with per-vertex flags. Iteration is in lexicographic
// vertex order. phi_empty is meaningful only when has_phi_flags() (committee
// labelers set it); terminal is always recorded.
class LabelMap {
 public:
  void set(const Vertex& v, LabelEntry e) { m_[v] = e; }
  bool contains(const Vertex& v) const { return m_.count(v) != 0; }

  Value value(const Vertex& v) const { return at(v).value; }
  bool terminal(const Vertex& v) const { return at(v).terminal; }
  bool phi_empty(const Vertex& v) const { return at(v).phi_empty; }

  bool has_phi_flags() const { return has_phi_; }
  void set_has_phi_flags(bool b) { has_phi_ = b; }

  std::size_t size() const { return m_.size(); }
  auto begin() const { return m_.begin(); }
  auto end() const { return m_.end(); }

 private:
  const LabelEntry& at(const Vertex& v) const;

  std::map<Vertex, LabelEntry> m_;
  bool has_phi_ = false;
};

using Labeler = std::function<LabelMap(const LatticeDigraph&)>;

// Total path label: least coordinate minimum over all vertices reachable
// from z (z included). Always <= min(z).
LabelMap p_total(const LatticeDigraph& G);

// Exit label via nonterminal/terminal split of successors:
//   t(z) = max(z) if z terminal,
//   t(z) = min( {t(x) : x nonterminal successor} u {min(x) : x terminal
//   successor} ) otherwise.
LabelMap t_hat(const LatticeDigraph& G);

// Same recursion with min(z) adjoined at nonterminal vertices. Off terminal
// vertices this equals p_total.
LabelMap p_hat(const LatticeDigraph& G);

// Independent route to t_hat: enumerates every maximal path and takes the
// least exit minimum. Budget counts enumerated maximal paths per call.
LabelMap t_hat_oracle(const LatticeDigraph& G, std::uint64_t max_paths = 1000000);

// Vertices whose label regressed strictly below their own minimum, and the
// set of such label values.
struct Significant {
  std::vector<Vertex> vertices;  // sorted
  std::set<Value> labels;
};

Significant significant(const LabelMap& f);

}  // namespace lexit
