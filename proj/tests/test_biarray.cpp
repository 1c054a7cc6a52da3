#include <algorithm>

#include "doctest.h"
#include "lexit/biarray.hpp"
#include "lexit/error.hpp"
#include "lexit/generate.hpp"
#include "test_util.hpp"

using namespace lexit;

namespace {

// three cells of the middle class regress to 1 through a low exit vertex
EdgeRule lower_rule() {
  Vertex w{1, 2};
  return EdgeRule::explicit_edges(
      {{Vertex{4, 7}, w}, {Vertex{4, 11}, w}, {Vertex{7, 11}, w}});
}

LabelMap flat_min_labels(const std::vector<Value>& E, int k) {
  LabelMap m;
  m.set_has_phi_flags(true);
  for (const Vertex& v : cube_of(E, k))
    m.set(v, {.value = v.min(), .terminal = true, .phi_empty = true});
  return m;
}

}  // namespace

TEST_CASE("fixture bi-array yields the worked subset-sum instance") {
  CappedBiArray B = biarray_from_labels(testutil::fixture_labels(), {4, 7, 11}, 2);
  CHECK(B.capped);
  CHECK(B.Y.rows == std::vector<std::vector<Value>>{{8, 14, 22}, {2, 2, 2}, {6, 6, 18}});
  CHECK(verify_first_column(B));

  SubsetSumInstance inst = build_instance(B);
  CHECK(inst.items == std::vector<Value>{2, 2, 2, 10, 18, 19});
  CHECK(inst.target == 16);
  REQUIRE(inst.designated.has_value());
  CHECK(*inst.designated == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(inst.meta.k == 2);
  CHECK(inst.meta.p == 3);
  CHECK(inst.meta.E == std::vector<Value>{4, 7, 11});
  CHECK(inst.meta.EL_size == 3);
  CHECK(inst.meta.S == 6);

  Value dsum = 0;
  for (std::size_t i : *inst.designated) dsum += inst.items[i];
  CHECK(dsum == inst.target);

  SolveResult res = solve_subset_sum(inst, SolveMode::count);
  CHECK(res.solvable);
  CHECK(res.count == 1);
}

TEST_CASE("bare cubes never regress below min(E)") {
  Xorshift64Star rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Value> E = random_E(2 + static_cast<int>(rng.below(2)), 12, rng);
    EdgeRule rule = EdgeRule::seeded_random(0.6, 0, rng.next());
    SelectionFunction F = seeded_selection(2, 0.8, rng.next(), true);
    CappedBiArray B = capped_biarray(rule, F, RhoFunction::min(), E, 2);
    RegularityReport rep = is_regressively_regular(B.labels, B.E, 2);
    CHECK(rep.lower.empty());
    // Labels may still sit in [min(E), min(x)), so regressive_values can be
    // nonempty here; the guarantee is only the global floor.
    for (const Vertex& v : cube_of(B.E, 2)) CHECK(B.labels.value(v) >= B.E.front());
  }
}

TEST_CASE("extra low vertices open the solvable branch") {
  std::vector<Value> E{4, 7, 11};
  CappedBiArray B = capped_biarray(lower_rule(), total_min_selection(), RhoFunction::min(),
                                   E, 2, {Vertex{1, 2}});
  CHECK(B.labels.value({4, 7}) == 1);
  CHECK(B.labels.value({7, 11}) == 1);
  CHECK(B.labels.value({7, 4}) == 4);  // terminal in the cube: rho = min

  RegularityReport rep = is_regressively_regular(B.labels, B.E, 2);
  REQUIRE(rep.regular);
  CHECK(rep.lower == std::vector<Vertex>{{4, 7}, {4, 11}, {7, 11}});

  SubsetSumInstance inst = build_instance(B);
  CHECK(inst.items == std::vector<Value>{1, 1, 1, 13, 18, 19});
  CHECK(inst.target == 16);
  CHECK(verify_first_column(B));
  SolveResult res = solve_subset_sum(inst, SolveMode::count);
  CHECK(res.count == 1);
}

TEST_CASE("rebalanced rho writes the designated head into the labels") {
  std::vector<Value> E{4, 7, 11};
  CappedBiArray B1 = capped_biarray(lower_rule(), total_min_selection(), RhoFunction::min(),
                                    E, 2, {Vertex{1, 2}});
  RegularityReport rep1 = is_regressively_regular(B1.labels, B1.E, 2);
  RhoFunction rho2 = assign_rho_diag(E, rep1, RhoFunction::min());
  CHECK(rho2(Vertex{4, 4}) == 13);  // 4 + (3*4 - 3)
  CHECK(rho2(Vertex{7, 7}) == 7);

  CappedBiArray B2 = capped_biarray(lower_rule(), total_min_selection(), rho2, E, 2,
                                    {Vertex{1, 2}});
  CHECK(B2.Y.rows[0][0] == 13);
  RegularityReport rep2 = is_regressively_regular(B2.labels, B2.E, 2);
  CHECK(rep2.regular);

  // the balance identity: lower sum plus the head hits (L+1) * min(E)
  Value S = 0;
  for (const Vertex& v : rep2.lower) S += B2.labels.value(v);
  Value L = static_cast<Value>(rep2.lower.size());
  CHECK(S + B2.Y.rows[0][0] == (L + 1) * E.front());

  SubsetSumInstance inst = build_instance(B2);
  CHECK(inst.items[3] == B2.Y.rows[0][0]);
}

TEST_CASE("assign_rho_diag guards") {
  std::vector<Value> E = testutil::fixture_E();
  RegularityReport good = is_regressively_regular(testutil::fixture_labels(), E, 2);
  RhoFunction rho = assign_rho_diag(E, good, RhoFunction::min());
  CHECK(rho(Vertex{4, 4}) == 10);  // 4 + (3*4 - 6)
  CHECK(rho(Vertex{5, 9}) == 5);

  LabelMap poisoned = testutil::fixture_labels();
  poisoned.set({4, 7}, {.value = 9, .terminal = false, .phi_empty = false});
  RegularityReport bad = is_regressively_regular(poisoned, E, 2);
  CHECK_THROWS_AS(assign_rho_diag(E, bad, RhoFunction::min()), Error);

  RegularityReport flat = is_regressively_regular(flat_min_labels({4, 7}, 2), {4, 7}, 2);
  CHECK_THROWS_AS(assign_rho_diag({4, 7}, flat, RhoFunction::min()), Error);

  LabelMap noflags;
  for (const auto& [v, e] : testutil::fixture_labels()) noflags.set(v, e);
  RegularityReport nophi = is_regressively_regular(noflags, E, 2);
  CHECK_THROWS_AS(assign_rho_diag(E, nophi, RhoFunction::min()), Error);

  LabelMap busy_diag = testutil::fixture_labels();
  busy_diag.set({7, 7}, {.value = 14, .terminal = false, .phi_empty = false});
  RegularityReport busy = is_regressively_regular(busy_diag, E, 2);
  CHECK_THROWS_AS(assign_rho_diag(E, busy, RhoFunction::min()), Error);
}

TEST_CASE("empty lower part builds the unsolvable instance") {
  CappedBiArray B = biarray_from_labels(flat_min_labels({4, 7}, 2), {4, 7}, 2);
  CHECK_FALSE(verify_first_column(B));
  SubsetSumInstance inst = build_instance(B);
  CHECK(inst.items == std::vector<Value>{4, 7});
  CHECK(inst.target == 12);  // item sum + 1
  CHECK_FALSE(inst.designated.has_value());
  CHECK(inst.meta.EL_size == 0);
  SolveResult res = solve_subset_sum(inst, SolveMode::count);
  CHECK_FALSE(res.solvable);
  CHECK(res.count == 0);
}

TEST_CASE("build_instance preconditions") {
  CHECK_THROWS_AS(build_instance(CappedBiArray{}), Error);

  LabelMap poisoned = testutil::fixture_labels();
  poisoned.set({4, 7}, {.value = 9, .terminal = false, .phi_empty = false});
  CHECK_THROWS_AS(build_instance(biarray_from_labels(poisoned, {4, 7, 11}, 2)), Error);

  LabelMap busy_diag = testutil::fixture_labels();
  busy_diag.set({7, 7}, {.value = 14, .terminal = false, .phi_empty = false});
  CHECK_THROWS_AS(build_instance(biarray_from_labels(busy_diag, {4, 7, 11}, 2)), Error);

  LabelMap noflags;
  for (const auto& [v, e] : testutil::fixture_labels()) noflags.set(v, e);
  CHECK_THROWS_AS(build_instance(biarray_from_labels(noflags, {4, 7, 11}, 2)), Error);
}

TEST_CASE("fill policy must respect the diagonal minima") {
  CappedBiArray B = biarray_from_labels(testutil::fixture_labels(), {4, 7, 11}, 2);

  DiagFillPolicy zero{.fill = [](Value, int) { return Value{0}; }};
  CHECK_THROWS_AS(build_instance(B, zero), Error);

  // fills exactly at the target join extra solutions
  DiagFillPolicy at_target{.fill = [](Value t, int) { return t; }};
  SubsetSumInstance inst = build_instance(B, at_target);
  CHECK(inst.items == std::vector<Value>{2, 2, 2, 10, 16, 16});
  SolveResult res = solve_subset_sum(inst, SolveMode::count);
  CHECK(res.count == 3);
}

TEST_CASE("extras may not break the cap") {
  std::vector<Value> E{4, 7, 11};
  CHECK_THROWS_AS(capped_biarray(EdgeRule::edgeless(), total_min_selection(),
                                 RhoFunction::min(), E, 2, {Vertex{12, 1}}),
                  Error);
  CHECK_THROWS_AS(capped_biarray(EdgeRule::edgeless(), total_min_selection(),
                                 RhoFunction::min(), E, 2, {Vertex{11, 5}}),
                  Error);
  CHECK_NOTHROW(capped_biarray(EdgeRule::edgeless(), total_min_selection(),
                               RhoFunction::min(), E, 2, {Vertex{11, 11}, Vertex{1, 2}}));

  LabelMap stray = testutil::fixture_labels();
  stray.set({12, 1}, {.value = 1, .terminal = true, .phi_empty = true});
  CHECK_THROWS_AS(biarray_from_labels(stray, E, 2), Error);

  LabelMap low = testutil::fixture_labels();
  low.set({1, 2}, {.value = 1, .terminal = true, .phi_empty = true});
  CHECK_NOTHROW(biarray_from_labels(low, E, 2));
}

TEST_CASE("subset-sum solver basics") {
  SolveResult yes = solve_subset_sum({3, 34, 4, 12, 5, 2}, 9, SolveMode::witness);
  CHECK(yes.solvable);
  REQUIRE(yes.witness.has_value());
  Value sum = 0;
  for (std::size_t i : *yes.witness) sum += std::vector<Value>{3, 34, 4, 12, 5, 2}[i];
  CHECK(sum == 9);
  CHECK(std::is_sorted(yes.witness->begin(), yes.witness->end()));

  CHECK_FALSE(solve_subset_sum({3, 34, 4, 12, 5, 2}, 30, SolveMode::decide).solvable);

  SolveResult pair = solve_subset_sum({1, 2, 3}, 3, SolveMode::count);
  CHECK(pair.count == 2);  // {3} and {1,2}

  SolveResult empty = solve_subset_sum({5, 6}, 0, SolveMode::count);
  CHECK(empty.solvable);
  CHECK(empty.count == 1);  // the empty subset
  CHECK(solve_subset_sum({5, 6}, 0, SolveMode::witness).witness->empty());

  CHECK_FALSE(solve_subset_sum({1, 2}, -4, SolveMode::decide).solvable);
  CHECK(solve_subset_sum({1, 2}, -4, SolveMode::count).count == 0);

  CHECK_THROWS_AS(solve_subset_sum({-1, 2}, 1, SolveMode::decide), Error);
  CHECK_THROWS_AS(solve_subset_sum(std::vector<Value>(25, 1), 5, SolveMode::count), Error);
  CHECK_THROWS_AS(solve_subset_sum({1}, (Value(1) << 26) + 1, SolveMode::decide), Error);
}

TEST_CASE("solver count agrees with DP decide on random instances") {
  Xorshift64Star rng(31337);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Value> items;
    std::size_t n = 1 + rng.below(10);
    for (std::size_t i = 0; i < n; ++i) items.push_back(static_cast<Value>(rng.below(20)));
    Value target = static_cast<Value>(rng.below(40));
    SolveResult c = solve_subset_sum(items, target, SolveMode::count);
    SolveResult d = solve_subset_sum(items, target, SolveMode::decide);
    SolveResult w = solve_subset_sum(items, target, SolveMode::witness);
    CHECK(c.solvable == d.solvable);
    CHECK(c.solvable == (*c.count > 0));
    CHECK(w.solvable == d.solvable);
    if (w.solvable) {
      Value sum = 0;
      for (std::size_t i : *w.witness) sum += items[i];
      CHECK(sum == target);
      // indices distinct
      CHECK(std::adjacent_find(w.witness->begin(), w.witness->end()) == w.witness->end());
    }
  }
}

TEST_CASE("pipeline runs are deterministic and internally consistent") {
  int seen = 0, solvable_runs = 0, unsolvable_runs = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    PipelineConfig cfg;
    cfg.seed = seed;
    std::optional<PipelineRun> run = run_pipeline(cfg);
    if (!run) continue;
    ++seen;
    (run->first_column_solvable ? solvable_runs : unsolvable_runs)++;

    CHECK(run->solved.solvable == run->first_column_solvable);
    CHECK(run->solved.solvable == (run->instance.meta.EL_size > 0));
    CHECK(run->instance.designated.has_value() == run->solved.solvable);
    if (run->instance.designated) {
      Value sum = 0;
      for (std::size_t i : *run->instance.designated) sum += run->instance.items[i];
      CHECK(sum == run->instance.target);
      CHECK(run->instance.target ==
            (static_cast<Value>(run->instance.meta.EL_size) + 1) * run->E.front());
    }

    std::optional<PipelineRun> again = run_pipeline(cfg);
    REQUIRE(again.has_value());
    CHECK(again->E == run->E);
    CHECK(again->instance.items == run->instance.items);
    CHECK(again->instance.target == run->instance.target);
    CHECK(again->cubes_examined == run->cubes_examined);
  }
  CHECK(seen > 0);
}
