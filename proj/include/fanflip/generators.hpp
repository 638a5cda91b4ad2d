#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "fanflip/fan.hpp"
#include "fanflip/rng.hpp"
#include "fanflip/z2.hpp"

namespace fanflip {

/// ∂Δ^k on vertices 1..k+1.
inline SimplicialComplex simplex_boundary(int k) {
  if (k < 1) throw Error(ErrorCode::InvalidDimension, "simplex_boundary needs k >= 1, got " + std::to_string(k));
  std::vector<Vertex> all;
  for (Vertex v = 1; v <= k + 1; ++v) all.push_back(v);
  return SimplicialComplex::from_facets(Simplex::from_sorted(all).boundary_facets());
}

/// Boundary of the k-dimensional cross polytope: vertices ±1..±k, one facet
/// per sign pattern.
inline Z2Complex cross_polytope(int k) {
  if (k < 1) throw Error(ErrorCode::InvalidDimension, "cross_polytope needs k >= 1, got " + std::to_string(k));
  if (k > 20) throw Error(ErrorCode::InvalidDimension, "cross_polytope(" + std::to_string(k) + ") is too large");
  std::vector<Simplex> facets;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::vector<Vertex> f;
    for (int i = 0; i < k; ++i) f.push_back((mask >> i) & 1u ? -(i + 1) : i + 1);
    facets.emplace_back(std::move(f));
  }
  return make_signed(SimplicialComplex::from_facets(std::move(facets)));
}

/// λ(±i) = ±i.
inline FanLabelling canonical_cross_labelling(int k) {
  if (k < 1) throw Error(ErrorCode::InvalidDimension, "canonical_cross_labelling needs k >= 1");
  FanLabelling out;
  for (Vertex i = 1; i <= k; ++i) {
    out.set(i, Label(i));
    out.set(-i, Label(-i));
  }
  return out;
}

/// Draws labels in ±1..±m for the positive vertices (negatives follow by
/// antipodality), then repeatedly redraws one endpoint of some complementary
/// edge. Gives up with GenerationFailed after a bounded number of rounds.
inline FanLabelling random_fan_labelling(const Z2Complex& m, int bound, std::uint64_t seed) {
  if (bound < 1) throw Error(ErrorCode::GenerationFailed, "label bound must be positive");
  Rng rng(seed);
  std::vector<Vertex> reps;
  for (Vertex v : m.complex().vertices())
    if (v > 0) reps.push_back(v);

  std::map<Vertex, long long> label;
  auto draw = [&](Vertex v) {
    long long x = static_cast<long long>(rng.index(static_cast<std::size_t>(bound))) + 1;
    if (rng.coin()) x = -x;
    label[v] = x;
    label[-v] = -x;
  };
  for (Vertex v : reps) draw(v);

  const auto edges = m.complex().edges();
  const std::size_t max_rounds = 2000 + 50 * reps.size();
  for (std::size_t round = 0; round < max_rounds; ++round) {
    std::set<Vertex> offending;
    for (const auto& e : edges)
      if (label[e[0]] + label[e[1]] == 0) {
        offending.insert(std::abs(e[0]));
        offending.insert(std::abs(e[1]));
      }
    if (offending.empty()) return FanLabelling::from_integers(label);
    auto it = offending.begin();
    std::advance(it, static_cast<std::ptrdiff_t>(rng.index(offending.size())));
    draw(*it);
  }
  throw Error(ErrorCode::GenerationFailed,
              "no Fan labelling with bound " + std::to_string(bound) + " found after " + std::to_string(max_rounds) + " rounds");
}

}  // namespace fanflip
