#pragma once

#include <cstdlib>
#include <map>
#include <set>
#include <vector>

#include "fanflip/complex.hpp"

namespace fanflip {

class Z2Complex;
Z2Complex make_signed(SimplicialComplex k);
struct Z2Subdivision;
Z2Subdivision equivariant_sd(const Z2Complex& m);

/// A simplicial complex with the free involution v ↦ -v.
///
/// Invariants: -A is a face whenever A is, and no face contains both v and
/// -v. Only make_signed and equivariant_sd construct values, so every
/// Z2Complex in circulation has been validated.
class Z2Complex {
 public:
  const SimplicialComplex& complex() const noexcept { return complex_; }
  const std::vector<Simplex>& facets() const noexcept { return complex_.facets(); }
  int dimension() const { return complex_.dimension(); }

  /// Set only on outputs of equivariant_sd; quotient() requires it.
  bool is_barycentric() const noexcept { return barycentric_; }

  bool operator==(const Z2Complex& other) const { return complex_ == other.complex_; }

 private:
  Z2Complex(SimplicialComplex k, bool barycentric) : complex_(std::move(k)), barycentric_(barycentric) {}

  friend Z2Complex make_signed(SimplicialComplex k);
  friend Z2Subdivision equivariant_sd(const Z2Complex& m);

  SimplicialComplex complex_;
  bool barycentric_ = false;
};

/// Validates freeness, then equivariance, then vertex pairing.
inline Z2Complex make_signed(SimplicialComplex k) {
  for (const auto& f : k.facets())
    if (!is_free(f)) throw Error(ErrorCode::ActionNotFree, "facet " + to_string(f) + " contains an antipodal pair");
  for (const auto& f : k.facets())
    if (!k.has_facet(antipode(f)))
      throw Error(ErrorCode::NotEquivariant, "antipode of facet " + to_string(f) + " is missing");
  // Implied by facet equivariance; kept so the contract holds on its own.
  for (Vertex v : k.vertices())
    if (!k.has_vertex(-v)) throw Error(ErrorCode::UnpairedVertex, "vertex " + std::to_string(v) + " has no antipode");
  return Z2Complex(std::move(k), false);
}

struct Z2Subdivision {
  Z2Complex complex;
  std::map<Vertex, Simplex> face_map;
};

/// Equivariant barycentric subdivision, performed as a sequence of stellar
/// subdivisions: faces of non-increasing dimension, lexicographic within a
/// dimension, each face immediately followed by its antipode. The barycenters
/// of A and -A receive ids +k and -k, with k counting subdivided pairs.
inline Z2Subdivision equivariant_sd(const Z2Complex& m) {
  auto faces = m.complex().all_faces();
  std::stable_sort(faces.begin(), faces.end(),
                   [](const Simplex& a, const Simplex& b) { return a.size() > b.size(); });

  const Vertex base = m.complex().max_abs_vertex();
  SimplicialComplex current = m.complex();
  std::set<Simplex> done;
  std::map<Vertex, Simplex> raw_map;
  Vertex pairs = 0;
  for (const auto& a : faces) {
    if (done.count(a)) continue;
    const Simplex minus_a = antipode(a);
    ++pairs;
    current = stellar_subdivide(current, a, base + pairs);
    current = stellar_subdivide(current, minus_a, -(base + pairs));
    raw_map.emplace(pairs, a);
    raw_map.emplace(-pairs, minus_a);
    done.insert(a);
    done.insert(minus_a);
  }

  std::vector<Simplex> renumbered;
  renumbered.reserve(current.num_facets());
  for (const auto& f : current.facets()) {
    std::vector<Vertex> vs;
    for (Vertex v : f) vs.push_back(v > 0 ? v - base : v + base);
    renumbered.emplace_back(std::move(vs));
  }
  Z2Complex signed_sd = make_signed(SimplicialComplex::from_facets(std::move(renumbered)));
  return Z2Subdivision{Z2Complex(signed_sd.complex_, true), std::move(raw_map)};
}

/// M/Z2 with one vertex per antipodal pair, named by its positive member.
struct Quotient {
  SimplicialComplex complex;
  std::map<Vertex, Vertex> projection;

  Simplex project(const Simplex& face) const {
    std::vector<Vertex> image;
    for (Vertex v : face) image.push_back(projection.at(v));
    return Simplex(std::move(image));
  }
};

inline Quotient quotient(const Z2Complex& m) {
  if (!m.is_barycentric())
    throw Error(ErrorCode::QuotientRequiresSubdivision, "quotient is only taken after equivariant_sd");
  Quotient q{void_complex(), {}};
  for (Vertex v : m.complex().vertices()) q.projection.emplace(v, std::abs(v));
  std::vector<Simplex> images;
  images.reserve(m.facets().size());
  for (const auto& f : m.facets()) images.push_back(q.project(f));
  q.complex = SimplicialComplex::from_facets(images);
  if (q.complex.num_facets() * 2 != m.facets().size())
    throw Error(ErrorCode::QuotientRequiresSubdivision, "quotient is not simplicial");
  return q;
}

}  // namespace fanflip
