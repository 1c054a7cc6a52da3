#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lexit/vertex.hpp"

namespace lexit {

// Index tuple: an element of F_{k,p} (functions {0..k-1} -> {0..p-1}) or a
// rank tuple (surjective onto an initial segment {0..j-1}).
using Tuple = std::vector<int>;

// Rank tuple of a coordinate sequence: each entry replaced by the rank of its
// value among the distinct values present. (3,8,5,3,8) -> (0,2,1,0,2).
Tuple rank_tuple(std::span<const Coord> coords);
inline Tuple rank_tuple(const Vertex& v) { return rank_tuple(std::span<const Coord>(v.coords())); }
Tuple rank_tuple_of(const Tuple& t);

// Order equivalence. rank-based and pairwise-comparison-based routes give the
// same answer; both are exposed so they can be cross-checked.
bool ot_equal(const Vertex& a, const Vertex& b);
bool ot_equal_pairwise(const Vertex& a, const Vertex& b);

// All functions {0..k-1} -> {0..p-1} in lexicographic order; p^k entries.
std::vector<Tuple> enumerate_functions(int k, int p);

// Rank tuples surjective onto {0..j-1}, in lexicographic order.
std::vector<Tuple> enumerate_surjections(int k, int j);
std::uint64_t surjection_count(int k, int j);

// Canonical list of order types of k-tuples drawn from a p-element set:
// surjective rank tuples grouped by number of distinct values j = 1..min(k,p),
// lexicographic within each group. Its indexing defines the row order of the
// canonical array.
std::vector<Tuple> enumerate_OT(int k, int p);

// Row i lists the order-type class of the i-th element of enumerate_OT(k,p)
// within F_{k,p}, lexicographically ordered; the class representative (the
// rank tuple itself) comes first. Rows partition F_{k,p}.
struct OrderTypeArray {
  int k = 0;
  int p = 0;
  std::vector<std::vector<Tuple>> rows;
};

OrderTypeArray canonical_array(int k, int p);

// The same array instantiated on a concrete p-element set E (sorted
// ascending): index tuple f becomes the vertex (e_f(0), ..., e_f(k-1)).
struct VertexArray {
  int k = 0;
  int p = 0;
  std::vector<Value> E;
  std::vector<std::vector<Vertex>> rows;
};

VertexArray instantiate(const OrderTypeArray& T, std::vector<Value> E);

struct ValueArray {
  std::vector<std::vector<Value>> rows;
};

class LabelMap;  // labelers.hpp

// Cell-wise label lookup; every cell of X must be in g's domain.
ValueArray apply_labels(const LabelMap& g, const VertexArray& X);

}  // namespace lexit
