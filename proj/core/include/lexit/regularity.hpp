#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lexit/committee.hpp"
#include "lexit/graph.hpp"
#include "lexit/labelers.hpp"
#include "lexit/order_types.hpp"

namespace lexit {

enum class ClassKind { decreasing_mins, nondecreasing_mins, violation };

const char* class_kind_name(ClassKind k);

struct ClassVerdict {
  Tuple ot;
  std::size_t size = 0;
  ClassKind kind = ClassKind::violation;
  // constant label of a decreasing-mins class
  std::optional<Value> value;
  // violation: lex-first regressed vertex and lex-first vertex breaking
  // constancy-below-min(E)
  std::optional<std::pair<Vertex, Vertex>> witness;
};

struct RegularityReport {
  int k = 0;
  std::vector<Value> E;
  bool regular = false;
  std::vector<ClassVerdict> classes;       // canonical order-type order
  std::set<Value> regressive_values;       // over all of E^k
  std::vector<Vertex> lower;               // f(x) < min(E)
  std::vector<Vertex> upper;               // f(x) >= min(x)
  bool has_phi = false;
  std::vector<Vertex> phi_nonempty;        // committee set nonempty
  std::vector<Vertex> phi_empty;           // committee set empty
};

// Labels regressed strictly below the vertex minimum, over the given domain.
std::set<Value> regressive_values(const LabelMap& f, std::span<const Vertex> domain);

// Classifies every order-type class of E^k: either the labels are constant
// and strictly below min(E), or every label is at least its vertex minimum.
// f must cover E^k. When f carries phi flags the phi partition is reported
// too.
RegularityReport is_regressively_regular(const LabelMap& f, const std::vector<Value>& E, int k);

struct CheckOutcome {
  bool pass = true;
  std::optional<Vertex> witness;
  std::string detail;
};

// A subseteq B, fixed rule: labels never grow when the domain grows
// (checked for p_hat).
CheckOutcome check_decreasing(const EdgeRule& rule, const std::vector<Vertex>& A,
                              const std::vector<Vertex>& B, const Labeler& labeler);

// Builds A = {z in B : max(z) < max(x)} u {x} u extras (extras from B with
// max >= max(x)) and checks f_A(x) >= f_B(x).
CheckOutcome check_jump_free(const EdgeRule& rule, const Labeler& labeler,
                             const std::vector<Vertex>& B, const Vertex& x,
                             const std::vector<Vertex>& extras);

// A family of label functions to search over: label(E) evaluates the family
// member on the cube E^k, or nullopt when the family has no member covering
// that cube (fixed finite fixtures).
struct FamilySpec {
  int k = 0;
  std::function<std::optional<LabelMap>(const std::vector<Value>& E)> label;

  static FamilySpec from_rule(int k, EdgeRule rule, Labeler labeler);
  static FamilySpec fixed(int k, LabelMap labels);
};

enum class SearchStatus { found, range_exhausted, budget_exhausted };

struct SearchOutcome {
  SearchStatus status = SearchStatus::range_exhausted;
  std::optional<std::vector<Value>> E;
  std::optional<RegularityReport> report;
  std::uint64_t cubes_examined = 0;
};

// Iterates p-element subsets E of {0..coord_bound-1} in lexicographic
// combination order and returns the first regressively regular one. budget
// caps the number of candidates considered. jobs > 1 evaluates candidate
// blocks concurrently; the reported E is still the first in order.
SearchOutcome search_regular_E(const FamilySpec& family, int p, Coord coord_bound,
                               std::uint64_t budget, int jobs = 1);

}  // namespace lexit
