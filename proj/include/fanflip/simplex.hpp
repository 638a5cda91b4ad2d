#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace fanflip {

using Vertex = int;

/// A finite vertex set, stored as a strictly increasing list of ids.
/// Ordering is lexicographic on that list, which is the canonical order used
/// for facets, faces and moves throughout the library.
class Simplex {
 public:
  Simplex() = default;
  Simplex(std::initializer_list<Vertex> vertices) : Simplex(std::vector<Vertex>(vertices)) {}
  explicit Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  }

  /// Caller guarantees the input is already strictly increasing.
  static Simplex from_sorted(std::vector<Vertex> vertices) {
    Simplex s;
    s.vertices_ = std::move(vertices);
    return s;
  }

  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }
  int dim() const noexcept { return static_cast<int>(vertices_.size()) - 1; }

  auto begin() const noexcept { return vertices_.begin(); }
  auto end() const noexcept { return vertices_.end(); }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }
  Vertex front() const { return vertices_.front(); }
  Vertex back() const { return vertices_.back(); }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }

  bool contains(Vertex v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }
  bool contains(const Simplex& other) const {
    return std::includes(vertices_.begin(), vertices_.end(), other.begin(), other.end());
  }
  bool disjoint(const Simplex& other) const {
    auto a = vertices_.begin();
    auto b = other.vertices_.begin();
    while (a != vertices_.end() && b != other.vertices_.end()) {
      if (*a == *b) return false;
      if (*a < *b) ++a; else ++b;
    }
    return true;
  }

  Simplex without(Vertex v) const {
    std::vector<Vertex> out;
    out.reserve(vertices_.size());
    for (Vertex w : vertices_)
      if (w != v) out.push_back(w);
    return from_sorted(std::move(out));
  }

  Simplex with(Vertex v) const {
    std::vector<Vertex> out(vertices_);
    out.insert(std::upper_bound(out.begin(), out.end(), v), v);
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) return *this;
    return from_sorted(std::move(out));
  }

  Simplex operator|(const Simplex& other) const {
    std::vector<Vertex> out;
    out.reserve(size() + other.size());
    std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
    return from_sorted(std::move(out));
  }

  Simplex operator-(const Simplex& other) const {
    std::vector<Vertex> out;
    std::set_difference(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
    return from_sorted(std::move(out));
  }

  Simplex operator&(const Simplex& other) const {
    std::vector<Vertex> out;
    std::set_intersection(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
    return from_sorted(std::move(out));
  }

  /// Faces of codimension one, in canonical order.
  std::vector<Simplex> boundary_facets() const {
    std::vector<Simplex> out;
    out.reserve(size());
    for (Vertex v : vertices_) out.push_back(without(v));
    std::sort(out.begin(), out.end());
    return out;
  }

  /// All nonempty subsets.
  std::vector<Simplex> nonempty_faces() const {
    std::vector<Simplex> out;
    const std::size_t n = size();
    out.reserve((std::size_t{1} << n) - 1);
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      std::vector<Vertex> f;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t{1} << i)) f.push_back(vertices_[i]);
      out.push_back(from_sorted(std::move(f)));
    }
    return out;
  }

  bool operator==(const Simplex&) const = default;
  auto operator<=>(const Simplex&) const = default;

 private:
  std::vector<Vertex> vertices_;
};

/// Sign negation of every vertex id. This is the antipodal map of every
/// Z2-complex in the library.
inline Simplex antipode(const Simplex& a) {
  std::vector<Vertex> out;
  out.reserve(a.size());
  for (auto it = a.vertices().rbegin(); it != a.vertices().rend(); ++it) out.push_back(-*it);
  return Simplex::from_sorted(std::move(out));
}

/// True when no vertex v of `a` has -v in `a` as well.
inline bool is_free(const Simplex& a) {
  for (Vertex v : a)
    if (v > 0 && a.contains(-v)) return false;
  return true;
}

inline std::string to_string(const Simplex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

inline std::ostream& operator<<(std::ostream& os, const Simplex& s) { return os << to_string(s); }

/// Canonical comparison used when ordering faces and moves: by dimension,
/// then lexicographically.
struct ByDimensionThenLex {
  bool operator()(const Simplex& a, const Simplex& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

}  // namespace fanflip
