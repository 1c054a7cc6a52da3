#include <algorithm>
#include <set>

#include "doctest.h"
#include "lexit/error.hpp"
#include "lexit/generate.hpp"
#include "lexit/graph.hpp"
#include "lexit/labelers.hpp"
#include "lexit/order_types.hpp"
#include "test_util.hpp"

using namespace lexit;

TEST_CASE("make_graph validates the downward condition") {
  Vertex a{5, 5}, b{3, 4};
  CHECK_NOTHROW(make_graph(2, {a, b}, {{a, b}}));
  CHECK_THROWS_WITH_AS(make_graph(2, {a, b}, {{b, a}}),
                       doctest::Contains("(3,4) -> (5,5)"), Error);
  // equal max is not downward either
  Vertex c{1, 4};
  CHECK_THROWS_AS(make_graph(2, {b, c}, {{c, b}}), Error);
}

TEST_CASE("make_graph rejects arity mismatches and foreign endpoints") {
  Vertex a{5, 5}, b{3, 4};
  CHECK_THROWS_AS(make_graph(2, {Vertex{1, 2, 3}}, {}), Error);
  CHECK_THROWS_AS(make_graph(2, {a}, {{a, b}}), Error);
  CHECK_THROWS_AS(make_graph(2, {a, Vertex{1, 2}}, {{a, Vertex{1, 2, 3}}}), Error);
}

TEST_CASE("make_graph with no edges leaves every vertex terminal") {
  LatticeDigraph g = make_graph(2, {Vertex{1, 2}, Vertex{3, 4}, Vertex{0, 0}}, {});
  for (std::uint32_t i = 0; i < g.size(); ++i) CHECK(g.terminal(i));
}

TEST_CASE("induce on {4,7}^2 under a complete order table") {
  std::map<Tuple, bool> table;
  // admit every class of concatenated pairs; the downward filter does the rest
  for (const Tuple& t : enumerate_OT(4, 4)) table[t] = true;
  LatticeDigraph g = induce(EdgeRule::order_type_table(table), 2, cube_of({4, 7}, 2));
  CHECK(g.size() == 4);
  // only (4,4) has smaller max; the three max-7 vertices point at it
  std::vector<Edge> want{{Vertex{4, 7}, Vertex{4, 4}},
                         {Vertex{7, 4}, Vertex{4, 4}},
                         {Vertex{7, 7}, Vertex{4, 4}}};
  CHECK(g.edges() == want);
}

TEST_CASE("order-table rules give order-equivalent pairs the same verdict") {
  EdgeRule rule = EdgeRule::seeded_order_table(0.5, 99);
  Xorshift64Star rng(5);
  for (int t = 0; t < 200; ++t) {
    // build a pair, then re-instantiate the same pattern on fresh values
    std::vector<Coord> vals;
    for (int i = 0; i < 4; ++i) vals.push_back(static_cast<Coord>(rng.below(6)));
    std::vector<Coord> image(6);
    Coord base = 0;
    for (int i = 0; i < 6; ++i) base = image[i] = base + 1 + static_cast<Coord>(rng.below(3));
    Vertex x1{vals[0], vals[1]}, y1{vals[2], vals[3]};
    Vertex x2{image[vals[0]], image[vals[1]]}, y2{image[vals[2]], image[vals[3]]};
    CHECK(rule(x1, y1) == rule(x2, y2));
  }
}

TEST_CASE("reachable walks the diamond") {
  LatticeDigraph g = testutil::diamond();
  CHECK(reachable(g, Vertex{9, 9}) ==
        std::vector<Vertex>{{2, 2}, {5, 7}, {7, 3}, {9, 9}});
  CHECK(reachable(g, Vertex{5, 7}) == std::vector<Vertex>{{2, 2}, {5, 7}});
  CHECK(reachable(g, Vertex{2, 2}) == std::vector<Vertex>{{2, 2}});
  CHECK_THROWS_AS(reachable(g, Vertex{1, 1}), Error);
}

TEST_CASE("terminal_targets collects the exits") {
  LatticeDigraph g = testutil::branch9();
  CHECK(terminal_targets(g, Vertex{9, 9}) == std::vector<Vertex>{{2, 1}, {2, 7}});
  CHECK(terminal_targets(g, Vertex{3, 4}) == std::vector<Vertex>{{2, 1}});
  CHECK_THROWS_AS(terminal_targets(g, Vertex{2, 7}), Error);
}

TEST_CASE("terminal_targets are exactly the terminal part of reachable") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    LatticeDigraph g = random_induced(2, 8, 10, 0.4, seed);
    for (const Vertex& z : g.vertices()) {
      if (g.terminal(g.index_of(z))) continue;
      auto tt = terminal_targets(g, z);
      std::vector<Vertex> want;
      for (const Vertex& v : reachable(g, z))
        if (g.terminal(g.index_of(v))) want.push_back(v);
      CHECK(tt == want);
    }
  }
}

TEST_CASE("trim_to_cap drops the part above the cube") {
  std::vector<Vertex> D = cube_of({4, 7, 11}, 2);
  D.push_back(Vertex{20, 1});
  LatticeDigraph g = induce(EdgeRule::edgeless(), 2, D);
  LatticeDigraph t = trim_to_cap(g, {4, 7, 11});
  CHECK(t.vertices() == cube_of({4, 7, 11}, 2));

  // idempotent
  CHECK(trim_to_cap(t, {4, 7, 11}).vertices() == t.vertices());

  CHECK_THROWS_AS(trim_to_cap(g, {4, 7, 12}), Error);
}

TEST_CASE("trim_to_cap also clears stray vertices on the top layer") {
  std::vector<Vertex> D = cube_of({4, 7}, 2);
  D.push_back(Vertex{7, 2});  // max equals max(E) but outside the cube
  LatticeDigraph g = induce(EdgeRule::complete(), 2, D);
  LatticeDigraph t = trim_to_cap(g, {4, 7});
  CHECK(t.vertices() == cube_of({4, 7}, 2));
}

TEST_CASE("trim_to_cap preserves labels and reachable sets of survivors") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Xorshift64Star rng(seed);
    std::vector<Vertex> D = cube_of({2, 5}, 2);
    auto extras = random_vertex_set(2, 9, 5, rng);
    D.insert(D.end(), extras.begin(), extras.end());
    EdgeRule rule = EdgeRule::seeded_random(0.5, 0, seed * 31 + 1);
    LatticeDigraph g = induce(rule, 2, D);
    LatticeDigraph t = trim_to_cap(g, {2, 5});
    LabelMap before = t_hat(g), after = t_hat(t);
    for (const Vertex& v : t.vertices()) {
      CHECK(after.value(v) == before.value(v));
      CHECK(reachable(t, v) == reachable(g, v));
    }
  }
}

TEST_CASE("random_downward is seeded and downward") {
  LatticeDigraph a = random_downward(2, 5, 0.3, 17);
  LatticeDigraph b = random_downward(2, 5, 0.3, 17);
  CHECK(a.vertices() == b.vertices());
  CHECK(a.edges() == b.edges());
  CHECK(a.size() == 25);
  for (const Edge& e : a.edges()) CHECK(e.first.max() > e.second.max());

  LatticeDigraph c = random_downward(2, 5, 0.3, 18);
  CHECK(c.edges() != a.edges());
}

TEST_CASE("random_downward density endpoints") {
  LatticeDigraph none = random_downward(2, 4, 0.0, 3);
  CHECK(none.edges().empty());

  LatticeDigraph all = random_downward(2, 3, 1.0, 3);
  std::size_t want = 0;
  for (const Vertex& x : all.vertices())
    for (const Vertex& y : all.vertices())
      if (x.max() > y.max()) ++want;
  CHECK(all.edges().size() == want);
}

TEST_CASE("reachable grows monotonically with the domain") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    Xorshift64Star rng(seed * 7 + 1);
    auto B = random_vertex_set(2, 8, 10, rng);
    std::vector<Vertex> A;
    for (const Vertex& v : B)
      if (rng.next_unit() < 0.6) A.push_back(v);
    if (A.empty()) continue;
    EdgeRule rule = EdgeRule::seeded_random(0.5, 0, seed);
    LatticeDigraph ga = induce(rule, 2, A), gb = induce(rule, 2, B);
    for (const Vertex& z : ga.vertices()) {
      auto ra = reachable(ga, z), rb = reachable(gb, z);
      for (const Vertex& v : ra) CHECK(std::binary_search(rb.begin(), rb.end(), v));
    }
  }
}

TEST_CASE("vertex construction guards") {
  CHECK_THROWS_AS(Vertex(std::vector<Coord>{}), Error);
  CHECK_THROWS_AS(Vertex({-1, 2}), Error);
  CHECK_THROWS_AS(make_graph(2, {Vertex{(Coord(1) << 33), 0}}, {}), Error);
}
