#pragma once

#include <vector>

#include "lexit/committee.hpp"
#include "lexit/graph.hpp"
#include "lexit/labelers.hpp"
#include "lexit/vertex.hpp"

namespace lexit::testutil {

// (5,5) -> (3,4) -> (2,1): the standard chain
inline LatticeDigraph chain() {
  Vertex a{5, 5}, b{3, 4}, c{2, 1};
  return make_graph(2, {a, b, c}, {{a, b}, {b, c}});
}

// (9,9) -> (2,7) terminal, (9,9) -> (3,4) -> (2,1) terminal
inline LatticeDigraph branch9() {
  Vertex z{9, 9}, t{2, 7}, m{3, 4}, u{2, 1};
  return make_graph(2, {z, t, m, u}, {{z, t}, {z, m}, {m, u}});
}

// (9,9) -> (5,7) -> (2,2), (9,9) -> (7,3) -> (2,2)
inline LatticeDigraph diamond() {
  Vertex top{9, 9}, l{5, 7}, r{7, 3}, bot{2, 2};
  return make_graph(2, {top, l, r, bot}, {{top, l}, {top, r}, {l, bot}, {r, bot}});
}

// Worked fixture over E = {4,7,11}: committee labels with rho(z) = x+y on
// the phi-empty part (the diagonal and (11,7)); the rows below min(E) carry
// the constant 2.
inline std::vector<Value> fixture_E() { return {4, 7, 11}; }

inline LabelMap fixture_labels() {
  LabelMap f;
  f.set_has_phi_flags(true);
  f.set(Vertex{4, 4}, {8, false, true});
  f.set(Vertex{7, 7}, {14, false, true});
  f.set(Vertex{11, 11}, {22, false, true});
  f.set(Vertex{4, 7}, {2, false, false});
  f.set(Vertex{4, 11}, {2, false, false});
  f.set(Vertex{7, 11}, {2, false, false});
  f.set(Vertex{7, 4}, {6, false, false});
  f.set(Vertex{11, 4}, {6, false, false});
  f.set(Vertex{11, 7}, {18, false, true});
  return f;
}

}  // namespace lexit::testutil
