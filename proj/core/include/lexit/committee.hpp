#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lexit/graph.hpp"
#include "lexit/labelers.hpp"
#include "lexit/vertex.hpp"

namespace lexit {

struct CommitteeMember {
  Vertex y;
  Value n = 0;

  bool operator==(const CommitteeMember&) const = default;
  auto operator<=>(const CommitteeMember&) const = default;
};

// Partial selection function F(z, ((y_1,n_1),...,(y_r,n_r))). choose returns
// the 1-based index i of the selected member or nullopt where F is
// undefined; the evaluator reads n_i itself, so the reported value is the
// committee member's value by construction. When diagonal_restricted, F is
// undefined at every z with all coordinates equal.
class SelectionFunction {
 public:
  using ChooseFn =
      std::function<std::optional<int>(const Vertex& z, std::span<const CommitteeMember>)>;

  SelectionFunction() = default;
  SelectionFunction(int r, bool diagonal_restricted, ChooseFn choose, std::string kind)
      : r_(r), diag_(diagonal_restricted), choose_(std::move(choose)), kind_(std::move(kind)) {}

  int r() const { return r_; }
  bool diagonal_restricted() const { return diag_; }
  const std::string& kind() const { return kind_; }

  std::optional<int> choose(const Vertex& z, std::span<const CommitteeMember> c) const {
    if (diag_ && z.diagonal()) return std::nullopt;
    return choose_(z, c);
  }

  SelectionFunction restricted_to_offdiagonal() const {
    return SelectionFunction(r_, true, choose_, kind_);
  }

 private:
  int r_ = 1;
  bool diag_ = false;
  ChooseFn choose_;
  std::string kind_;
};

// r = 1, defined at every committee: picks the sole member. Makes the
// committee labeler coincide with t_hat.
SelectionFunction total_min_selection();

// Defined with hash probability q per committee; selected index is a second
// independent hash. Pure in (z, committee, seed).
SelectionFunction seeded_selection(int r, double q, std::uint64_t seed,
                                   bool diagonal_restricted);

// Explicit table keyed by (z, committee with values); for fixtures.
SelectionFunction table_selection(
    int r, std::map<std::pair<Vertex, std::vector<CommitteeMember>>, int> table,
    bool diagonal_restricted = false);

struct CommitteeBudget {
  int max_r = 3;
  std::uint64_t max_tuples = 1000000;  // per vertex
};

// Set of defined F values at z: committees are all r-tuples of successors of
// z with repetition, in lexicographic order; member values come from memo
// (its value where the successor's committee set was nonempty, the
// successor's min where it was empty). memo must cover all successors with
// phi flags.
std::set<Value> phi_set(const LatticeDigraph& G, const SelectionFunction& F, const Vertex& z,
                        const LabelMap& memo, const CommitteeBudget& budget = {});

// Committee labeler: min of the committee-value set, max(z) where that set is
// empty. phi flags are recorded; the value equals max(z) exactly on the
// phi-empty vertices.
LabelMap s_hat(const LatticeDigraph& G, const SelectionFunction& F,
               const CommitteeBudget& budget = {});

// rho(z) >= min(z) everywhere on its domain.
class RhoFunction {
 public:
  using Fn = std::function<Value(const Vertex&)>;

  RhoFunction() = default;
  RhoFunction(Fn fn, std::string name) : fn_(std::move(fn)), name_(std::move(name)) {}

  Value operator()(const Vertex& v) const { return fn_(v); }
  const std::string& name() const { return name_; }

  static RhoFunction min();
  static RhoFunction sum();
  // base everywhere except one vertex. Raises rho_below_min if the override
  // breaks the invariant.
  static RhoFunction with_override(const RhoFunction& base, const Vertex& at, Value value);

 private:
  Fn fn_;
  std::string name_;
};

// Variant of s_hat falling back to rho(z) instead of max(z) on phi-empty
// vertices. Committee member values still use min(y) for phi-empty
// successors, so the committee sets are identical to s_hat's and the two
// labelers agree wherever the set is nonempty.
LabelMap h_rho(const LatticeDigraph& G, const SelectionFunction& F, const RhoFunction& rho,
               const CommitteeBudget& budget = {});

}  // namespace lexit
