#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "lexit/error.hpp"

namespace lexit {

using Coord = std::int64_t;
using Value = std::int64_t;

// Point of N^k. Coordinates are nonnegative; max/min are cached at
// construction. Ordering is lexicographic on coordinates.
class Vertex {
 public:
  Vertex() = default;

  explicit Vertex(std::vector<Coord> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) raise(Errc::dimension_mismatch, "vertex needs at least one coordinate");
    max_ = min_ = coords_[0];
    for (Coord c : coords_) {
      if (c < 0) raise(Errc::dimension_mismatch, "negative coordinate");
      if (c > max_) max_ = c;
      if (c < min_) min_ = c;
    }
  }

  Vertex(std::initializer_list<Coord> coords) : Vertex(std::vector<Coord>(coords)) {}

  int k() const { return static_cast<int>(coords_.size()); }
  Coord operator[](std::size_t i) const { return coords_[i]; }
  Coord max() const { return max_; }
  Coord min() const { return min_; }
  const std::vector<Coord>& coords() const { return coords_; }

  bool diagonal() const { return max_ == min_; }

  bool operator==(const Vertex& o) const { return coords_ == o.coords_; }
  std::strong_ordering operator<=>(const Vertex& o) const {
    return coords_ <=> o.coords_;
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(coords_[i]);
    }
    return s + ")";
  }

 private:
  std::vector<Coord> coords_;
  Coord max_ = 0;
  Coord min_ = 0;
};

using Edge = std::pair<Vertex, Vertex>;

}  // namespace lexit

template <>
struct std::hash<lexit::Vertex> {
  std::size_t operator()(const lexit::Vertex& v) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (lexit::Coord c : v.coords()) {
      h ^= static_cast<std::uint64_t>(c);
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h);
  }
};
