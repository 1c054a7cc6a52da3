#include "lexit/regularity.hpp"

#include <algorithm>
#include <future>

#include "lexit/error.hpp"

namespace lexit {

const char* class_kind_name(ClassKind k) {
  switch (k) {
    case ClassKind::decreasing_mins: return "decreasing-mins";
    case ClassKind::nondecreasing_mins: return "nondecreasing-mins";
    case ClassKind::violation: return "violation";
  }
  return "unknown";
}

std::set<Value> regressive_values(const LabelMap& f, std::span<const Vertex> domain) {
  std::set<Value> out;
  for (const Vertex& v : domain) {
    Value x = f.value(v);
    if (x < v.min()) out.insert(x);
  }
  return out;
}

RegularityReport is_regressively_regular(const LabelMap& f, const std::vector<Value>& E,
                                         int k) {
  RegularityReport rep;
  rep.k = k;
  rep.E = E;
  std::sort(rep.E.begin(), rep.E.end());
  const Value e0 = rep.E.front();
  const int p = static_cast<int>(rep.E.size());

  VertexArray X = instantiate(canonical_array(k, p), rep.E);
  rep.has_phi = f.has_phi_flags();
  rep.regular = true;

  for (const auto& row : X.rows) {
    ClassVerdict cv;
    cv.ot = rank_tuple(row.front());
    cv.size = row.size();

    bool constant_below = true;
    Value first_val = f.value(row.front());
    bool nondecreasing = true;
    for (const Vertex& x : row) {
      Value v = f.value(x);
      if (v != first_val || v >= e0) constant_below = false;
      if (v < x.min()) nondecreasing = false;
    }
    if (constant_below) {
      cv.kind = ClassKind::decreasing_mins;
      cv.value = first_val;
    } else if (nondecreasing) {
      cv.kind = ClassKind::nondecreasing_mins;
    } else {
      cv.kind = ClassKind::violation;
      rep.regular = false;
      // lex-first regressed vertex, then lex-first vertex breaking
      // constancy-below-min(E) relative to it
      Vertex wx, wy;
      for (const Vertex& x : row) {
        if (f.value(x) < x.min()) {
          wx = x;
          break;
        }
      }
      for (const Vertex& y : row) {
        if (f.value(y) != f.value(wx) || f.value(y) >= e0) {
          wy = y;
          break;
        }
      }
      cv.witness = {wx, wy};
    }
    rep.classes.push_back(std::move(cv));

    for (const Vertex& x : row) {
      Value v = f.value(x);
      if (v < e0) rep.lower.push_back(x);
      if (v >= x.min()) rep.upper.push_back(x);
      if (rep.has_phi) {
        if (f.phi_empty(x))
          rep.phi_empty.push_back(x);
        else
          rep.phi_nonempty.push_back(x);
      }
    }
  }

  std::sort(rep.lower.begin(), rep.lower.end());
  std::sort(rep.upper.begin(), rep.upper.end());
  std::sort(rep.phi_empty.begin(), rep.phi_empty.end());
  std::sort(rep.phi_nonempty.begin(), rep.phi_nonempty.end());

  std::vector<Vertex> cube = cube_of(rep.E, k);
  rep.regressive_values = regressive_values(f, cube);
  return rep;
}

CheckOutcome check_decreasing(const EdgeRule& rule, const std::vector<Vertex>& A,
                              const std::vector<Vertex>& B, const Labeler& labeler) {
  for (const Vertex& a : A) {
    if (std::find(B.begin(), B.end(), a) == B.end())
      raise(Errc::precondition_failed, "A must be a subset of B; " + a.str() + " is not");
  }
  if (A.empty()) return {true, std::nullopt, "empty A"};
  const int k = A.front().k();
  LabelMap fa = labeler(induce(rule, k, A));
  LabelMap fb = labeler(induce(rule, k, B));
  for (const Vertex& a : A) {
    if (fa.value(a) < fb.value(a))
      return {false, a,
              "label grew: " + std::to_string(fa.value(a)) + " < " +
                  std::to_string(fb.value(a)) + " at " + a.str()};
  }
  return {true, std::nullopt, ""};
}

CheckOutcome check_jump_free(const EdgeRule& rule, const Labeler& labeler,
                             const std::vector<Vertex>& B, const Vertex& x,
                             const std::vector<Vertex>& extras) {
  if (std::find(B.begin(), B.end(), x) == B.end())
    raise(Errc::precondition_failed, "pivot " + x.str() + " must be in B");
  std::vector<Vertex> A;
  for (const Vertex& z : B)
    if (z.max() < x.max()) A.push_back(z);
  A.push_back(x);
  for (const Vertex& z : extras) {
    if (std::find(B.begin(), B.end(), z) == B.end())
      raise(Errc::precondition_failed, "extra " + z.str() + " must be in B");
    if (z.max() < x.max())
      raise(Errc::precondition_failed, "extra " + z.str() + " must have max >= max(x)");
    if (!(z == x)) A.push_back(z);
  }
  const int k = x.k();
  LabelMap fa = labeler(induce(rule, k, A));
  LabelMap fb = labeler(induce(rule, k, B));
  if (fa.value(x) < fb.value(x))
    return {false, x,
            "jump: " + std::to_string(fa.value(x)) + " < " + std::to_string(fb.value(x)) +
                " at " + x.str()};
  return {true, std::nullopt, ""};
}

FamilySpec FamilySpec::from_rule(int k, EdgeRule rule, Labeler labeler) {
  FamilySpec fs;
  fs.k = k;
  fs.label = [k, rule = std::move(rule),
              labeler = std::move(labeler)](const std::vector<Value>& E) {
    return std::optional<LabelMap>(labeler(induce(rule, k, cube_of(E, k))));
  };
  return fs;
}

FamilySpec FamilySpec::fixed(int k, LabelMap labels) {
  FamilySpec fs;
  fs.k = k;
  fs.label = [k, labels = std::move(labels)](
                 const std::vector<Value>& E) -> std::optional<LabelMap> {
    for (const Vertex& v : cube_of(E, k))
      if (!labels.contains(v)) return std::nullopt;
    return labels;
  };
  return fs;
}

namespace {

bool next_combination(std::vector<Value>& c, Coord bound) {
  const int p = static_cast<int>(c.size());
  int i = p - 1;
  while (i >= 0 && c[i] == bound - p + i) --i;
  if (i < 0) return false;
  ++c[i];
  for (int j = i + 1; j < p; ++j) c[j] = c[j - 1] + 1;
  return true;
}

std::optional<RegularityReport> examine(const FamilySpec& family, const std::vector<Value>& E) {
  auto labels = family.label(E);
  if (!labels) return std::nullopt;
  RegularityReport rep = is_regressively_regular(*labels, E, family.k);
  if (!rep.regular) return std::nullopt;
  return rep;
}

}  // namespace

SearchOutcome search_regular_E(const FamilySpec& family, int p, Coord coord_bound,
                               std::uint64_t budget, int jobs) {
  if (p < 1 || coord_bound < p) raise(Errc::bad_config, "need 1 <= p <= coord_bound");
  if (jobs < 1) jobs = 1;

  SearchOutcome out;
  std::vector<Value> E(p);
  for (int i = 0; i < p; ++i) E[i] = i;
  bool more = true;

  while (more) {
    // candidate block, evaluated concurrently but reported in order
    std::vector<std::vector<Value>> block;
    while (more && block.size() < static_cast<std::size_t>(jobs) * 8) {
      if (out.cubes_examined + block.size() >= budget) break;
      block.push_back(E);
      more = next_combination(E, coord_bound);
    }
    if (block.empty()) {
      out.status = more ? SearchStatus::budget_exhausted : SearchStatus::range_exhausted;
      return out;
    }

    std::vector<std::optional<RegularityReport>> results(block.size());
    if (jobs == 1) {
      for (std::size_t i = 0; i < block.size(); ++i) results[i] = examine(family, block[i]);
    } else {
      std::vector<std::future<std::optional<RegularityReport>>> futs;
      futs.reserve(block.size());
      for (const auto& cand : block)
        futs.push_back(std::async(std::launch::async,
                                  [&family, cand]() { return examine(family, cand); }));
      for (std::size_t i = 0; i < block.size(); ++i) results[i] = futs[i].get();
    }
    for (std::size_t i = 0; i < block.size(); ++i) {
      ++out.cubes_examined;
      if (results[i]) {
        out.status = SearchStatus::found;
        out.E = block[i];
        out.report = std::move(results[i]);
        return out;
      }
    }
  }
  out.status = SearchStatus::range_exhausted;
  return out;
}

}  // namespace lexit
