#include "lexit/order_types.hpp"

#include <algorithm>
#include <map>

#include "lexit/error.hpp"
#include "lexit/labelers.hpp"

namespace lexit {

Tuple rank_tuple(std::span<const Coord> coords) {
  std::vector<Coord> distinct(coords.begin(), coords.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  Tuple r(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    r[i] = static_cast<int>(
        std::lower_bound(distinct.begin(), distinct.end(), coords[i]) - distinct.begin());
  }
  return r;
}

Tuple rank_tuple_of(const Tuple& t) {
  std::vector<Coord> c(t.begin(), t.end());
  return rank_tuple(std::span<const Coord>(c));
}

bool ot_equal(const Vertex& a, const Vertex& b) {
  if (a.k() != b.k()) raise(Errc::dimension_mismatch, "ot_equal needs equal arity");
  return rank_tuple(a) == rank_tuple(b);
}

bool ot_equal_pairwise(const Vertex& a, const Vertex& b) {
  if (a.k() != b.k()) raise(Errc::dimension_mismatch, "ot_equal needs equal arity");
  const int k = a.k();
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if ((a[i] < a[j]) != (b[i] < b[j])) return false;
      if ((a[i] == a[j]) != (b[i] == b[j])) return false;
    }
  }
  return true;
}

std::vector<Tuple> enumerate_functions(int k, int p) {
  if (k < 1 || p < 1) raise(Errc::precondition_failed, "enumerate_functions needs k,p >= 1");
  std::vector<Tuple> out;
  Tuple f(k, 0);
  while (true) {
    out.push_back(f);
    int i = k - 1;
    while (i >= 0 && f[i] == p - 1) f[i--] = 0;
    if (i < 0) break;
    ++f[i];
  }
  return out;
}

std::vector<Tuple> enumerate_surjections(int k, int j) {
  std::vector<Tuple> out;
  if (j < 1 || j > k) return out;
  for (Tuple& f : enumerate_functions(k, j)) {
    std::vector<bool> hit(j, false);
    for (int v : f) hit[v] = true;
    if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) out.push_back(std::move(f));
  }
  return out;
}

std::uint64_t surjection_count(int k, int j) { return enumerate_surjections(k, j).size(); }

std::vector<Tuple> enumerate_OT(int k, int p) {
  if (k < 1 || p < 1) raise(Errc::precondition_failed, "enumerate_OT needs k,p >= 1");
  std::vector<Tuple> out;
  for (int j = 1; j <= std::min(k, p); ++j) {
    auto s = enumerate_surjections(k, j);
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

OrderTypeArray canonical_array(int k, int p) {
  OrderTypeArray T;
  T.k = k;
  T.p = p;
  const auto ots = enumerate_OT(k, p);
  std::map<Tuple, std::size_t> row_of;
  T.rows.resize(ots.size());
  for (std::size_t i = 0; i < ots.size(); ++i) row_of[ots[i]] = i;
  // F_{k,p} enumerated lexicographically, so each row comes out sorted with
  // its rank tuple (the pointwise-least member) first.
  for (Tuple& f : enumerate_functions(k, p)) {
    T.rows[row_of.at(rank_tuple_of(f))].push_back(std::move(f));
  }
  return T;
}

VertexArray instantiate(const OrderTypeArray& T, std::vector<Value> E) {
  std::sort(E.begin(), E.end());
  if (std::adjacent_find(E.begin(), E.end()) != E.end())
    raise(Errc::precondition_failed, "E must have distinct elements");
  if (static_cast<int>(E.size()) != T.p)
    raise(Errc::size_mismatch, "|E| must equal the array's p");
  for (Value e : E)
    if (e < 0) raise(Errc::precondition_failed, "E must be nonnegative");

  VertexArray X;
  X.k = T.k;
  X.p = T.p;
  X.E = E;
  X.rows.resize(T.rows.size());
  for (std::size_t i = 0; i < T.rows.size(); ++i) {
    X.rows[i].reserve(T.rows[i].size());
    for (const Tuple& f : T.rows[i]) {
      std::vector<Coord> c(f.size());
      for (std::size_t t = 0; t < f.size(); ++t) c[t] = E[f[t]];
      X.rows[i].emplace_back(std::move(c));
    }
  }
  return X;
}

ValueArray apply_labels(const LabelMap& g, const VertexArray& X) {
  ValueArray Y;
  Y.rows.resize(X.rows.size());
  for (std::size_t i = 0; i < X.rows.size(); ++i) {
    Y.rows[i].reserve(X.rows[i].size());
    for (const Vertex& v : X.rows[i]) {
      if (!g.contains(v)) raise(Errc::missing_vertex, "label map lacks " + v.str());
      Y.rows[i].push_back(g.value(v));
    }
  }
  return Y;
}

}  // namespace lexit
