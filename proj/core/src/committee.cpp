#include "lexit/committee.hpp"

#include <algorithm>
#include <memory>

#include "lexit/error.hpp"
#include "lexit/rng.hpp"

namespace lexit {

SelectionFunction total_min_selection() {
  return SelectionFunction(
      1, false,
      [](const Vertex&, std::span<const CommitteeMember>) { return std::optional<int>(1); },
      "total-min");
}

SelectionFunction seeded_selection(int r, double q, std::uint64_t seed,
                                   bool diagonal_restricted) {
  if (r < 1) raise(Errc::bad_config, "selection needs r >= 1");
  if (q < 0.0 || q > 1.0) raise(Errc::bad_config, "q must be in [0,1]");
  return SelectionFunction(
      r, diagonal_restricted,
      [r, q, seed](const Vertex& z, std::span<const CommitteeMember> c) -> std::optional<int> {
        std::vector<std::uint64_t> w;
        w.reserve(z.k() * (c.size() + 1) + c.size());
        for (Coord x : z.coords()) w.push_back(static_cast<std::uint64_t>(x));
        for (const CommitteeMember& m : c) {
          for (Coord x : m.y.coords()) w.push_back(static_cast<std::uint64_t>(x));
          w.push_back(static_cast<std::uint64_t>(m.n));
        }
        std::uint64_t h = mix_words(seed, w);
        if (unit_from_hash(h) >= q) return std::nullopt;
        std::uint64_t h2 = splitmix64(h);
        return 1 + static_cast<int>(h2 % static_cast<std::uint64_t>(r));
      },
      "seeded");
}

SelectionFunction table_selection(
    int r, std::map<std::pair<Vertex, std::vector<CommitteeMember>>, int> table,
    bool diagonal_restricted) {
  auto t = std::make_shared<decltype(table)>(std::move(table));
  for (const auto& [key, idx] : *t) {
    if (idx < 1 || idx > r) raise(Errc::bad_config, "table index out of [1,r]");
    if (key.second.size() != static_cast<std::size_t>(r))
      raise(Errc::bad_config, "table committee arity != r");
  }
  return SelectionFunction(
      r, diagonal_restricted,
      [t](const Vertex& z, std::span<const CommitteeMember> c) -> std::optional<int> {
        auto it = t->find({z, std::vector<CommitteeMember>(c.begin(), c.end())});
        if (it == t->end()) return std::nullopt;
        return it->second;
      },
      "table");
}

std::set<Value> phi_set(const LatticeDigraph& G, const SelectionFunction& F, const Vertex& z,
                        const LabelMap& memo, const CommitteeBudget& budget) {
  if (F.r() > budget.max_r)
    raise(Errc::budget_exceeded,
          "committee arity " + std::to_string(F.r()) + " above cap " +
              std::to_string(budget.max_r));
  std::set<Value> phi;
  if (F.diagonal_restricted() && z.diagonal()) return phi;

  auto succ = G.successors(G.index_of(z));
  if (succ.empty()) return phi;

  const int r = F.r();
  double tuples = 1;
  for (int i = 0; i < r; ++i) tuples *= static_cast<double>(succ.size());
  if (tuples > static_cast<double>(budget.max_tuples))
    raise(Errc::budget_exceeded, "committee tuple budget exceeded at " + z.str());

  std::vector<CommitteeMember> members(succ.size());
  for (std::size_t i = 0; i < succ.size(); ++i) {
    const Vertex& y = G.vertex(succ[i]);
    // phi-empty successors contribute their min, not their label
    members[i] = {y, memo.phi_empty(y) ? y.min() : memo.value(y)};
  }

  // odometer over successor indices: r-tuples with repetition, lexicographic
  std::vector<std::size_t> idx(r, 0);
  std::vector<CommitteeMember> committee(r);
  while (true) {
    for (int i = 0; i < r; ++i) committee[i] = members[idx[i]];
    if (auto choice = F.choose(z, committee)) {
      if (*choice < 1 || *choice > r)
        raise(Errc::bad_config, "selection returned index out of [1,r]");
      phi.insert(committee[*choice - 1].n);
    }
    int i = r - 1;
    while (i >= 0 && idx[i] == succ.size() - 1) idx[i--] = 0;
    if (i < 0) break;
    ++idx[i];
  }
  return phi;
}

namespace {

LabelMap committee_labels(const LatticeDigraph& G, const SelectionFunction& F,
                          const CommitteeBudget& budget,
                          const std::function<Value(const Vertex&)>& on_empty) {
  LabelMap out;
  out.set_has_phi_flags(true);
  for (std::uint32_t i : G.by_increasing_max()) {
    const Vertex& z = G.vertex(i);
    std::set<Value> phi = phi_set(G, F, z, out, budget);
    if (phi.empty()) {
      out.set(z, {on_empty(z), G.terminal(i), true});
    } else {
      out.set(z, {*phi.begin(), G.terminal(i), false});
    }
  }
  return out;
}

}  // namespace

LabelMap s_hat(const LatticeDigraph& G, const SelectionFunction& F,
               const CommitteeBudget& budget) {
  return committee_labels(G, F, budget, [](const Vertex& z) { return z.max(); });
}

LabelMap h_rho(const LatticeDigraph& G, const SelectionFunction& F, const RhoFunction& rho,
               const CommitteeBudget& budget) {
  for (const Vertex& z : G.vertices()) {
    if (rho(z) < z.min())
      raise(Errc::rho_below_min,
            "rho(" + z.str() + ") = " + std::to_string(rho(z)) + " < " +
                std::to_string(z.min()));
  }
  return committee_labels(G, F, budget, [&rho](const Vertex& z) { return rho(z); });
}

RhoFunction RhoFunction::min() {
  return RhoFunction([](const Vertex& z) { return z.min(); }, "min");
}

RhoFunction RhoFunction::sum() {
  return RhoFunction(
      [](const Vertex& z) {
        Value s = 0;
        for (Coord c : z.coords()) s += c;
        return s;
      },
      "sum");
}

RhoFunction RhoFunction::with_override(const RhoFunction& base, const Vertex& at, Value value) {
  if (value < at.min())
    raise(Errc::rho_below_min, "override " + std::to_string(value) + " below min of " + at.str());
  return RhoFunction(
      [base, at, value](const Vertex& z) { return z == at ? value : base(z); },
      base.name() + "+override");
}

}  // namespace lexit
