#include "lexit/biarray.hpp"

#include <algorithm>

#include "lexit/error.hpp"
#include "lexit/generate.hpp"
#include "lexit/rng.hpp"

namespace lexit {

namespace {

std::vector<Value> sorted_E(std::vector<Value> E) {
  std::sort(E.begin(), E.end());
  if (E.empty() || std::adjacent_find(E.begin(), E.end()) != E.end())
    raise(Errc::precondition_failed, "E must be nonempty with distinct elements");
  return E;
}

}  // namespace

CappedBiArray capped_biarray(const EdgeRule& rule, const SelectionFunction& F,
                             const RhoFunction& rho, std::vector<Value> E, int k,
                             const std::vector<Vertex>& extras) {
  CappedBiArray B;
  B.E = sorted_E(std::move(E));
  const Coord emax = B.E.back();

  std::vector<Vertex> D = cube_of(B.E, k);
  for (const Vertex& z : extras) {
    if (z.max() >= emax && !std::binary_search(D.begin(), D.end(), z))
      raise(Errc::precondition_failed,
            "extra " + z.str() + " would break the cap: max >= max(E)");
    D.push_back(z);
  }

  LatticeDigraph G = induce(rule, k, std::move(D));
  B.labels = h_rho(G, F, rho);
  B.X = instantiate(canonical_array(k, static_cast<int>(B.E.size())), B.E);
  B.Y = apply_labels(B.labels, B.X);
  B.capped = true;
  return B;
}

CappedBiArray biarray_from_labels(const LabelMap& labels, std::vector<Value> E, int k) {
  CappedBiArray B;
  B.E = sorted_E(std::move(E));
  const Coord emax = B.E.back();
  std::vector<Vertex> cube = cube_of(B.E, k);
  for (const auto& [v, entry] : labels) {
    if (v.max() > emax || (v.max() == emax && !std::binary_search(cube.begin(), cube.end(), v)))
      raise(Errc::precondition_failed,
            "label domain vertex " + v.str() + " breaks the cap by E^k");
  }
  B.labels = labels;
  B.X = instantiate(canonical_array(k, static_cast<int>(B.E.size())), B.E);
  B.Y = apply_labels(labels, B.X);
  B.capped = true;
  return B;
}

RhoFunction assign_rho_diag(const std::vector<Value>& E, const RegularityReport& report,
                            const RhoFunction& base) {
  if (!report.regular) raise(Errc::not_regular, "assign_rho_diag needs a regular report");
  if (report.lower.empty())
    raise(Errc::precondition_failed, "no cells below min(E); nothing to rebalance");
  std::vector<Value> Es = sorted_E(E);
  const Value e0 = Es.front();

  if (report.has_phi) {
    for (const Vertex& d : cube_of(Es, report.k)) {
      if (!d.diagonal()) continue;
      if (!std::binary_search(report.phi_empty.begin(), report.phi_empty.end(), d))
        raise(Errc::precondition_failed, "diagonal vertex " + d.str() + " has a nonempty committee set");
    }
  } else {
    raise(Errc::precondition_failed, "report carries no committee flags");
  }

  Value S = 0;
  for (const ClassVerdict& cv : report.classes)
    if (cv.kind == ClassKind::decreasing_mins) S += *cv.value * static_cast<Value>(cv.size);
  const Value L = static_cast<Value>(report.lower.size());

  // S < L*e0 because every lower cell is strictly below e0, so the new
  // diagonal value is strictly above e0 >= min
  Vertex diag0(std::vector<Coord>(report.k, e0));
  return RhoFunction::with_override(base, diag0, e0 + (L * e0 - S));
}

SubsetSumInstance build_instance(const CappedBiArray& B, const DiagFillPolicy& policy) {
  if (!B.capped) raise(Errc::precondition_failed, "bi-array is not capped");
  const int k = B.X.k;
  const int p = B.X.p;
  const Value e0 = B.E.front();

  RegularityReport rep = is_regressively_regular(B.labels, B.E, k);
  if (!rep.regular) raise(Errc::not_regular, "bi-array labels are not regressively regular");
  if (!rep.has_phi) raise(Errc::precondition_failed, "labels lack committee flags");
  for (const Vertex& d : B.X.rows[0])
    if (!B.labels.phi_empty(d))
      raise(Errc::precondition_failed,
            "diagonal vertex " + d.str() + " has a nonempty committee set; selection must be "
            "diagonally restricted");

  // lower rows by the first-column rule, cross-checked against the
  // label-level report
  std::vector<std::size_t> lower_rows;
  Value S_col = 0;
  std::size_t L_col = 0;
  for (std::size_t i = 1; i < B.Y.rows.size(); ++i) {
    if (B.Y.rows[i][0] < e0) {
      lower_rows.push_back(i);
      L_col += B.Y.rows[i].size();
      for (Value v : B.Y.rows[i]) S_col += v;
    }
  }
  Value S = 0;
  for (const Vertex& v : rep.lower) S += B.labels.value(v);
  if (L_col != rep.lower.size() || S_col != S)
    raise(Errc::precondition_failed, "first-column rows disagree with the lower part");

  SubsetSumInstance inst;
  inst.meta = {k, p, B.E, rep.lower.size(), S};
  const Value L = static_cast<Value>(rep.lower.size());

  if (L > 0) {
    inst.target = (L + 1) * e0;
    std::vector<std::size_t> designated;
    for (std::size_t i : lower_rows)
      for (Value v : B.Y.rows[i]) {
        designated.push_back(inst.items.size());
        inst.items.push_back(v);
      }
    // rebalanced diagonal head: S + head = target
    designated.push_back(inst.items.size());
    inst.items.push_back(inst.target - S);
    for (int j = 2; j <= p; ++j) {
      Value fill = policy.fill(inst.target, j);
      if (fill < B.E[static_cast<std::size_t>(j) - 1])
        raise(Errc::policy_violates_rho,
              "fill " + std::to_string(fill) + " below the diagonal vertex minimum " +
                  std::to_string(B.E[static_cast<std::size_t>(j) - 1]));
      inst.items.push_back(fill);
    }
    inst.designated = std::move(designated);
  } else {
    // diagonal row as labeled; unsolvable by exceeding every subset sum
    for (Value v : B.Y.rows[0]) inst.items.push_back(v);
    Value total = 0;
    for (Value v : inst.items) total += v;
    inst.target = total + 1;
  }
  return inst;
}

bool verify_first_column(const CappedBiArray& B) {
  const Value e0 = B.X.rows[0][0][0];  // diagonal head is (e0,...,e0)
  for (const auto& row : B.Y.rows)
    if (row[0] < e0) return true;
  return false;
}

std::optional<PipelineRun> run_pipeline(const PipelineConfig& cfg) {
  Xorshift64Star rng(cfg.seed);
  const std::uint64_t rule_seed = rng.next();
  const std::uint64_t sel_seed = rng.next();

  EdgeRule rule = EdgeRule::seeded_random(cfg.density, 0, rule_seed);
  SelectionFunction F =
      cfg.selection_q >= 1.0
          ? total_min_selection().restricted_to_offdiagonal()
          : seeded_selection(cfg.r, cfg.selection_q, sel_seed, true);
  RhoFunction rho = RhoFunction::min();

  std::vector<Value> E(cfg.p);
  for (int i = 0; i < cfg.p; ++i) E[i] = i;
  std::uint64_t examined = 0;
  bool more = true;
  while (more && examined < cfg.budget) {
    std::vector<Value> cand = E;
    {
      const int pp = cfg.p;
      int i = pp - 1;
      while (i >= 0 && E[i] == cfg.coord_bound - pp + i) --i;
      if (i < 0) {
        more = false;
      } else {
        ++E[i];
        for (int j = i + 1; j < pp; ++j) E[j] = E[j - 1] + 1;
      }
    }
    ++examined;

    // a few extra vertices of smaller max; these are the only way labels can
    // regress below min(E)
    std::vector<Vertex> extras;
    if (cand.back() > 0) {
      std::size_t want = rng.below(cfg.max_extras + 1);
      std::vector<Vertex> pool = random_vertex_set(cfg.k, cand.back(), want + 4, rng);
      for (const Vertex& v : pool) {
        if (extras.size() >= want) break;
        if (v.max() < cand.back()) extras.push_back(v);
      }
    }

    CappedBiArray B;
    try {
      B = capped_biarray(rule, F, rho, cand, cfg.k, extras);
    } catch (const Error&) {
      continue;
    }
    RegularityReport rep = is_regressively_regular(B.labels, B.E, cfg.k);
    if (!rep.regular) continue;

    PipelineRun run;
    try {
      run.instance = build_instance(B);
    } catch (const Error& e) {
      if (e.code() == Errc::policy_violates_rho) continue;
      throw;
    }
    run.E = B.E;
    run.report = std::move(rep);
    run.first_column_solvable = verify_first_column(B);
    run.biarray = std::move(B);
    run.cubes_examined = examined;
    SolveMode mode =
        run.instance.items.size() <= 24 ? SolveMode::count : SolveMode::decide;
    run.solved = solve_subset_sum(run.instance, mode);
    return run;
  }
  return std::nullopt;
}

}  // namespace lexit
