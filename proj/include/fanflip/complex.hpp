#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <span>
#include <vector>

#include "fanflip/error.hpp"
#include "fanflip/simplex.hpp"

namespace fanflip {

/// Face counts f_0..f_d of the nonempty faces, by dimension.
struct FVector {
  std::vector<long long> counts;

  int dimension() const { return static_cast<int>(counts.size()) - 1; }

  long long euler_characteristic() const {
    long long chi = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * counts[i];
    return chi;
  }

  long long operator[](std::size_t i) const { return i < counts.size() ? counts[i] : 0; }

  bool operator==(const FVector&) const = default;
  auto operator<=>(const FVector&) const = default;
};

/// A finite abstract simplicial complex, stored by its facets.
///
/// Facets are kept as a sorted antichain; every subset of a facet is a face.
/// Values are immutable once built, and each vertex keeps the indices of the
/// facets containing it so that links and membership are local queries.
class SimplicialComplex {
 public:
  /// Builds the complex generated by `facets`. Members contained in another
  /// member are dropped. An input consisting only of the empty set yields the
  /// complex {∅} of dimension -1.
  static SimplicialComplex from_facets(std::vector<Simplex> facets) {
    if (facets.empty()) throw Error(ErrorCode::EmptyComplex, "no facets given");
    for (const auto& f : facets)
      if (f.contains(Vertex{0})) throw Error(ErrorCode::InvalidVertexId, "vertex id 0 in " + to_string(f));

    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

    const bool pure = std::all_of(facets.begin(), facets.end(),
                                  [&](const Simplex& f) { return f.size() == facets.front().size(); });
    if (!pure) facets = prune_dominated(std::move(facets));
    return SimplicialComplex(std::move(facets));
  }

  static SimplicialComplex from_facets(std::initializer_list<Simplex> facets) {
    return from_facets(std::vector<Simplex>(facets));
  }

  const std::vector<Simplex>& facets() const noexcept { return facets_; }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  std::size_t num_facets() const noexcept { return facets_.size(); }
  std::size_t num_vertices() const noexcept { return vertices_.size(); }

  int dimension() const {
    std::size_t top = 0;
    for (const auto& f : facets_) top = std::max(top, f.size());
    return static_cast<int>(top) - 1;
  }

  bool is_pure() const {
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](const Simplex& f) { return f.size() == facets_.front().size(); });
  }

  bool has_vertex(Vertex v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

  bool has_facet(const Simplex& f) const { return std::binary_search(facets_.begin(), facets_.end(), f); }

  /// Indices into facets() of the facets containing `v` (ascending).
  std::span<const std::uint32_t> star_indices(Vertex v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) return {};
    return stars_[static_cast<std::size_t>(it - vertices_.begin())];
  }

  std::size_t degree(Vertex v) const { return star_indices(v).size(); }

  /// Face membership, respecting downward closure.
  bool contains(const Simplex& face) const {
    if (face.empty()) return true;
    auto best = star_indices(face.front());
    for (Vertex v : face) {
      auto s = star_indices(v);
      if (s.size() < best.size()) best = s;
    }
    return std::any_of(best.begin(), best.end(), [&](std::uint32_t i) { return facets_[i].contains(face); });
  }

  /// Facets containing `face`, in canonical order.
  std::vector<Simplex> facets_containing(const Simplex& face) const {
    std::vector<Simplex> out;
    if (face.empty()) return facets_;
    auto best = star_indices(face.front());
    for (Vertex v : face) {
      auto s = star_indices(v);
      if (s.size() < best.size()) best = s;
    }
    for (std::uint32_t i : best)
      if (facets_[i].contains(face)) out.push_back(facets_[i]);
    return out;
  }

  /// Every nonempty face, sorted by dimension and then lexicographically.
  std::vector<Simplex> all_faces() const {
    std::vector<Simplex> out;
    for (const auto& f : facets_) {
      auto sub = f.nonempty_faces();
      out.insert(out.end(), std::make_move_iterator(sub.begin()), std::make_move_iterator(sub.end()));
    }
    std::sort(out.begin(), out.end(), ByDimensionThenLex{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<Simplex> faces(int dim) const {
    std::vector<Simplex> out;
    for (auto& f : all_faces())
      if (f.dim() == dim) out.push_back(std::move(f));
    return out;
  }

  std::vector<Simplex> edges() const { return faces(1); }

  FVector f_vector() const {
    FVector fv;
    fv.counts.assign(static_cast<std::size_t>(std::max(dimension() + 1, 0)), 0);
    for (const auto& f : all_faces()) ++fv.counts[f.size() - 1];
    return fv;
  }

  long long euler_characteristic() const { return f_vector().euler_characteristic(); }

  /// Largest |v| over all vertices, 0 for {∅}.
  Vertex max_abs_vertex() const {
    Vertex m = 0;
    for (Vertex v : vertices_) m = std::max(m, std::abs(v));
    return m;
  }

  bool operator==(const SimplicialComplex& other) const { return facets_ == other.facets_; }

 private:
  explicit SimplicialComplex(std::vector<Simplex> facets) : facets_(std::move(facets)) {
    for (const auto& f : facets_) vertices_.insert(vertices_.end(), f.begin(), f.end());
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    stars_.resize(vertices_.size());
    for (std::uint32_t i = 0; i < facets_.size(); ++i)
      for (Vertex v : facets_[i]) {
        auto pos = std::lower_bound(vertices_.begin(), vertices_.end(), v) - vertices_.begin();
        stars_[static_cast<std::size_t>(pos)].push_back(i);
      }
  }

  // Input sorted and deduplicated; result stays sorted.
  static std::vector<Simplex> prune_dominated(std::vector<Simplex> facets) {
    std::vector<std::size_t> order(facets.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return facets[a].size() > facets[b].size(); });
    std::map<Vertex, std::vector<std::size_t>> kept_by_vertex;
    std::vector<bool> keep(facets.size(), false);
    for (std::size_t i : order) {
      const Simplex& f = facets[i];
      bool dominated = false;
      if (f.empty()) {
        dominated = facets.size() > 1;
      } else if (auto it = kept_by_vertex.find(f.front()); it != kept_by_vertex.end()) {
        dominated = std::any_of(it->second.begin(), it->second.end(), [&](std::size_t j) {
          return facets[j].size() > f.size() && facets[j].contains(f);
        });
      }
      if (dominated) continue;
      keep[i] = true;
      for (Vertex v : f) kept_by_vertex[v].push_back(i);
    }
    std::vector<Simplex> out;
    for (std::size_t i = 0; i < facets.size(); ++i)
      if (keep[i]) out.push_back(std::move(facets[i]));
    return out;
  }

  std::vector<Simplex> facets_;
  std::vector<Vertex> vertices_;
  std::vector<std::vector<std::uint32_t>> stars_;
};

/// The complex {∅}: the link of a facet, the boundary of a vertex.
inline SimplicialComplex void_complex() { return SimplicialComplex::from_facets({Simplex{}}); }

/// The boundary of a simplex as a complex. For a single vertex this is {∅}.
inline SimplicialComplex boundary_of(const Simplex& a) {
  if (a.size() <= 1) return void_complex();
  return SimplicialComplex::from_facets(a.boundary_facets());
}

/// lk(A) = {B : A ∩ B = ∅, A ∪ B ∈ K}.
inline SimplicialComplex link(const SimplicialComplex& k, const Simplex& a) {
  if (!k.contains(a)) throw Error(ErrorCode::FaceNotPresent, "link of " + to_string(a));
  std::vector<Simplex> out;
  for (const auto& f : k.facets_containing(a)) out.push_back(f - a);
  return SimplicialComplex::from_facets(std::move(out));
}

/// Closed star st(A) = A ⋆ lk(A), i.e. the facets containing A.
inline SimplicialComplex star(const SimplicialComplex& k, const Simplex& a) {
  if (!k.contains(a)) throw Error(ErrorCode::FaceNotPresent, "star of " + to_string(a));
  return SimplicialComplex::from_facets(k.facets_containing(a));
}

inline SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l) {
  std::vector<Vertex> shared;
  std::set_intersection(k.vertices().begin(), k.vertices().end(), l.vertices().begin(), l.vertices().end(),
                        std::back_inserter(shared));
  if (!shared.empty())
    throw Error(ErrorCode::VertexCollision, "join operands share vertex " + std::to_string(shared.front()));
  std::vector<Simplex> out;
  out.reserve(k.num_facets() * l.num_facets());
  for (const auto& f : k.facets())
    for (const auto& g : l.facets()) out.push_back(f | g);
  return SimplicialComplex::from_facets(std::move(out));
}

/// Replaces st(A) by a ⋆ ∂A ⋆ lk(A). When A is a single vertex, ∂A is {∅}
/// and the operation renames that vertex to `fresh`.
inline SimplicialComplex stellar_subdivide(const SimplicialComplex& k, const Simplex& a, Vertex fresh) {
  if (fresh == 0) throw Error(ErrorCode::InvalidVertexId, "fresh vertex id 0");
  if (a.empty() || !k.contains(a)) throw Error(ErrorCode::FaceNotPresent, "stellar subdivision at " + to_string(a));
  if (k.has_vertex(fresh)) throw Error(ErrorCode::VertexCollision, "vertex " + std::to_string(fresh) + " already present");

  std::vector<Simplex> out;
  out.reserve(k.num_facets() + a.size() * k.degree(a.front()));
  for (const auto& f : k.facets()) {
    if (!f.contains(a)) {
      out.push_back(f);
      continue;
    }
    const Simplex rest = f - a;
    for (Vertex x : a) out.push_back((a.without(x) | rest).with(fresh));
  }
  return SimplicialComplex::from_facets(std::move(out));
}

/// sd(K) together with the face each new vertex is the barycenter of.
struct Subdivision {
  SimplicialComplex complex;
  std::map<Vertex, Simplex> face_map;
};

namespace detail {

/// Facets of sd(K) are the maximal flags of faces; each permutation of a
/// facet's vertices spells out one flag by its prefixes.
inline SimplicialComplex flag_complex_of_faces(const SimplicialComplex& k, const std::map<Simplex, Vertex>& id_of) {
  std::vector<Simplex> out;
  for (const auto& f : k.facets()) {
    std::vector<Vertex> perm(f.begin(), f.end());
    do {
      std::vector<Vertex> prefix;
      std::vector<Vertex> chain;
      for (Vertex v : perm) {
        prefix.push_back(v);
        chain.push_back(id_of.at(Simplex(prefix)));
      }
      out.emplace_back(std::move(chain));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return SimplicialComplex::from_facets(std::move(out));
}

}  // namespace detail

/// Barycentric subdivision. The barycenter of the i-th face in canonical
/// order (by dimension, then lexicographic) receives id i+1.
inline Subdivision barycentric_subdivide(const SimplicialComplex& k) {
  std::map<Simplex, Vertex> id_of;
  Subdivision sd{void_complex(), {}};
  Vertex next = 1;
  for (auto& face : k.all_faces()) {
    id_of.emplace(face, next);
    sd.face_map.emplace(next, std::move(face));
    ++next;
  }
  sd.complex = detail::flag_complex_of_faces(k, id_of);
  return sd;
}

/// Pure, of dimension ≥ 0, every ridge in exactly two facets, and connected
/// through ridges.
inline bool is_closed_pseudomanifold(const SimplicialComplex& k) {
  if (k.dimension() < 0 || !k.is_pure()) return false;
  std::map<Simplex, std::vector<std::size_t>> ridges;
  const auto& facets = k.facets();
  for (std::size_t i = 0; i < facets.size(); ++i)
    for (auto& r : facets[i].boundary_facets()) ridges[r].push_back(i);

  std::vector<std::size_t> parent(facets.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [ridge, owners] : ridges) {
    if (owners.size() != 2) return false;
    parent[find(owners[0])] = find(owners[1]);
  }
  for (std::size_t i = 0; i < facets.size(); ++i)
    if (find(i) != find(0)) return false;
  return true;
}

/// 64-bit FNV-1a over the canonical facet list.
inline std::uint64_t digest(const SimplicialComplex& k) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint32_t word) {
    for (int b = 0; b < 4; ++b) {
      h ^= (word >> (8 * b)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  for (const auto& f : k.facets()) {
    for (Vertex v : f) mix(static_cast<std::uint32_t>(v));
    mix(0u);  // separator; 0 is never a vertex id
  }
  return h;
}

}  // namespace fanflip
