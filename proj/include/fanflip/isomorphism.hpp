#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "fanflip/complex.hpp"

namespace fanflip {

using VertexMap = std::map<Vertex, Vertex>;

namespace detail {

// Backtracking search for a facet-preserving vertex bijection. Candidates are
// pruned by (degree, link f-vector); each assignment is checked against the
// edges to already-mapped vertices and against every facet that becomes
// fully mapped. Exponential in the worst case; meant for small complexes.
class IsomorphismSearch {
 public:
  IsomorphismSearch(const SimplicialComplex& k, const SimplicialComplex& l, bool equivariant)
      : k_(k), l_(l), equivariant_(equivariant) {}

  std::optional<VertexMap> run() {
    if (k_.num_vertices() != l_.num_vertices() || k_.num_facets() != l_.num_facets()) return std::nullopt;
    if (k_.dimension() != l_.dimension()) return std::nullopt;
    if (k_.num_vertices() == 0) return VertexMap{};
    if (k_.f_vector() != l_.f_vector()) return std::nullopt;

    auto sig_k = signatures(k_);
    auto sig_l = signatures(l_);
    {
      std::multiset<Signature> a, b;
      for (auto& [v, s] : sig_k) a.insert(s);
      for (auto& [v, s] : sig_l) b.insert(s);
      if (a != b) return std::nullopt;
    }
    sig_k_ = std::move(sig_k);
    sig_l_ = std::move(sig_l);
    adj_k_ = adjacency(k_);
    adj_l_ = adjacency(l_);
    order_ = search_order();
    if (search(0)) return forward_;
    return std::nullopt;
  }

 private:
  struct Signature {
    std::size_t degree;
    FVector link;
    auto operator<=>(const Signature&) const = default;
    bool operator==(const Signature&) const = default;
  };

  static std::map<Vertex, Signature> signatures(const SimplicialComplex& c) {
    std::map<Vertex, Signature> out;
    for (Vertex v : c.vertices()) out.emplace(v, Signature{c.degree(v), link(c, Simplex{v}).f_vector()});
    return out;
  }

  static std::map<Vertex, std::set<Vertex>> adjacency(const SimplicialComplex& c) {
    std::map<Vertex, std::set<Vertex>> out;
    for (Vertex v : c.vertices()) out[v];
    for (const auto& f : c.facets())
      for (Vertex a : f)
        for (Vertex b : f)
          if (a != b) out[a].insert(b);
    return out;
  }

  // Greedy connectivity order: next is the unplaced vertex with the most
  // placed neighbours, ties broken by fewest candidates, then by id.
  std::vector<Vertex> search_order() const {
    std::map<Signature, std::size_t> multiplicity;
    for (auto& [v, s] : sig_l_) ++multiplicity[s];
    std::vector<Vertex> order;
    std::set<Vertex> placed;
    while (order.size() < k_.num_vertices()) {
      Vertex best = 0;
      std::pair<std::size_t, std::size_t> best_key{0, 0};
      bool have = false;
      for (Vertex v : k_.vertices()) {
        if (placed.count(v)) continue;
        std::size_t linked = 0;
        for (Vertex w : adj_k_.at(v)) linked += placed.count(w);
        std::pair<std::size_t, std::size_t> key{linked, static_cast<std::size_t>(-1) - multiplicity[sig_k_.at(v)]};
        if (!have || key > best_key) {
          best = v;
          best_key = key;
          have = true;
        }
      }
      order.push_back(best);
      placed.insert(best);
    }
    return order;
  }

  bool consistent(Vertex u, Vertex x) const {
    if (used_.count(x) || sig_k_.at(u) != sig_l_.at(x)) return false;
    const auto& nk = adj_k_.at(u);
    const auto& nl = adj_l_.at(x);
    for (const auto& [w, y] : forward_)
      if (nk.count(w) != nl.count(y)) return false;
    return true;
  }

  bool facets_ok(Vertex u) const {
    for (std::uint32_t i : k_.star_indices(u)) {
      const Simplex& f = k_.facets()[i];
      std::vector<Vertex> image;
      image.reserve(f.size());
      for (Vertex w : f) {
        auto it = forward_.find(w);
        if (it == forward_.end()) break;
        image.push_back(it->second);
      }
      if (image.size() == f.size() && !l_.has_facet(Simplex(std::move(image)))) return false;
    }
    return true;
  }

  void assign(Vertex u, Vertex x) {
    forward_.emplace(u, x);
    used_.insert(x);
  }
  void unassign(Vertex u) {
    used_.erase(forward_.at(u));
    forward_.erase(u);
  }

  bool search(std::size_t pos) {
    while (pos < order_.size() && forward_.count(order_[pos])) ++pos;
    if (pos == order_.size()) return true;
    const Vertex u = order_[pos];
    for (Vertex x : l_.vertices()) {
      if (!consistent(u, x)) continue;
      assign(u, x);
      bool ok = facets_ok(u);
      bool paired = false;
      if (ok && equivariant_) {
        ok = k_.has_vertex(-u) && l_.has_vertex(-x) && consistent(-u, -x);
        if (ok) {
          assign(-u, -x);
          paired = true;
          ok = facets_ok(-u);
        }
      }
      if (ok && search(pos + 1)) return true;
      if (paired) unassign(-u);
      unassign(u);
    }
    return false;
  }

  const SimplicialComplex& k_;
  const SimplicialComplex& l_;
  bool equivariant_;
  std::map<Vertex, Signature> sig_k_, sig_l_;
  std::map<Vertex, std::set<Vertex>> adj_k_, adj_l_;
  std::vector<Vertex> order_;
  VertexMap forward_;
  std::set<Vertex> used_;
};

}  // namespace detail

/// A vertex bijection mapping the facets of `k` onto the facets of `l`, if
/// one exists.
inline std::optional<VertexMap> find_isomorphism(const SimplicialComplex& k, const SimplicialComplex& l) {
  return detail::IsomorphismSearch(k, l, false).run();
}

/// Like find_isomorphism, but the bijection must also commute with the
/// antipodal map v ↦ -v.
inline std::optional<VertexMap> find_z2_isomorphism(const SimplicialComplex& k, const SimplicialComplex& l) {
  return detail::IsomorphismSearch(k, l, true).run();
}

inline bool is_isomorphic(const SimplicialComplex& k, const SimplicialComplex& l) {
  return find_isomorphism(k, l).has_value();
}

/// Applies a vertex map to every facet.
inline SimplicialComplex relabel_vertices(const SimplicialComplex& k, const VertexMap& map) {
  std::vector<Simplex> out;
  out.reserve(k.num_facets());
  for (const auto& f : k.facets()) {
    std::vector<Vertex> image;
    for (Vertex v : f) image.push_back(map.at(v));
    out.emplace_back(std::move(image));
  }
  return SimplicialComplex::from_facets(std::move(out));
}

}  // namespace fanflip
