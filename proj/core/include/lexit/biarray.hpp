#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "lexit/committee.hpp"
#include "lexit/graph.hpp"
#include "lexit/labelers.hpp"
#include "lexit/order_types.hpp"
#include "lexit/regularity.hpp"
#include "lexit/subset_sum.hpp"

namespace lexit {

// Instantiated canonical array X over E^k together with its committee labels
// Y, evaluated on a domain whose maximal vertices are exactly those of E^k
// (the cube itself, or the cube plus extra vertices of strictly smaller
// max). labels covers the whole evaluation domain.
struct CappedBiArray {
  VertexArray X;
  ValueArray Y;
  std::vector<Value> E;
  bool capped = false;
  LabelMap labels;
};

// Labels D = E^k u extras with h_rho and pairs the result with the canonical
// array. Extras must have max < max(E) (or lie in E^k), keeping the domain
// capped. Labels strictly below min(E) can only enter through extras: on the
// bare cube every label is >= min(E).
CappedBiArray capped_biarray(const EdgeRule& rule, const SelectionFunction& F,
                             const RhoFunction& rho, std::vector<Value> E, int k,
                             const std::vector<Vertex>& extras = {});

// Same pairing from an already-computed label map covering E^k.
CappedBiArray biarray_from_labels(const LabelMap& labels, std::vector<Value> E, int k);

// Rebalanced rho for the all-minimum diagonal vertex: with S the label sum
// over the below-min(E) cells and L their count, rho(e1..e1) becomes
// e_0 + (L*e_0 - S), so that S plus the new diagonal label equals
// (L+1)*e_0. Requires a regular report with nonempty lower part and a
// phi-empty diagonal.
RhoFunction assign_rho_diag(const std::vector<Value>& E, const RegularityReport& report,
                            const RhoFunction& base);

// Value for diagonal row cell j (2..p, 1-based) given the target; default is
// target + j, which exceeds the target and so can never join a solution.
struct DiagFillPolicy {
  std::function<Value(Value target, int j)> fill = [](Value t, int j) {
    return t + static_cast<Value>(j);
  };
};

// Subset-sum instance of the first-column construction. Items are the labels
// of the below-min(E) rows plus the (rebalanced and filled) diagonal row.
//   lower part nonempty: target (L+1)*e_0, designated = lower cells + the
//     rebalanced diagonal head; solvable by construction.
//   lower part empty: target = item sum + 1; unsolvable.
// Regularity and a phi-empty diagonal row (diagonally restricted selection)
// are preconditions. Fill values must respect rho >= min.
SubsetSumInstance build_instance(const CappedBiArray& B, const DiagFillPolicy& policy = {});

// Decides solvability from column 1 alone: some row head below e_0. At most
// one comparison per row (m rows, m < k^k).
bool verify_first_column(const CappedBiArray& B);

// Seeded end-to-end run: sample a rule, a diagonally restricted selection, a
// rho and extra low vertices; search cubes E in range for a regressively
// regular bi-array; build and solve the instance.
struct PipelineConfig {
  int k = 2;
  int p = 3;
  Coord coord_bound = 12;
  double density = 0.5;
  double selection_q = 1.0;  // 1 = total-min, else seeded with this q
  int r = 1;
  std::uint64_t seed = 0;
  std::size_t max_extras = 3;
  std::uint64_t budget = 2000;  // candidate cubes
};

struct PipelineRun {
  std::vector<Value> E;
  CappedBiArray biarray;
  RegularityReport report;
  SubsetSumInstance instance;
  SolveResult solved;         // decide (+count when feasible)
  bool first_column_solvable = false;
  std::uint64_t cubes_examined = 0;
};

std::optional<PipelineRun> run_pipeline(const PipelineConfig& cfg);

}  // namespace lexit
