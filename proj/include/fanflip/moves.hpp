#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "fanflip/complex.hpp"
#include "fanflip/rng.hpp"
#include "fanflip/z2.hpp"

namespace fanflip {

/// Bistellar move κ(A, B): A ⋆ ∂B is replaced by ∂A ⋆ B.
///
/// `removed` is A, a face of the complex whose link is ∂B. `inserted` is B,
/// absent from the complex; when A is a facet, B is a single fresh vertex.
struct BistellarMove {
  Simplex removed;
  Simplex inserted;

  /// Dimension r of A. In an n-complex the facet count changes by 2r - n.
  int level() const { return removed.dim(); }

  BistellarMove inverse() const { return {inserted, removed}; }
  BistellarMove antipodal() const { return {antipode(removed), antipode(inserted)}; }

  bool operator==(const BistellarMove&) const = default;
  auto operator<=>(const BistellarMove&) const = default;
};

inline std::string to_string(const BistellarMove& m) {
  return "κ(" + to_string(m.removed) + ", " + to_string(m.inserted) + ")";
}

/// Default fresh vertex id: one past the largest |v| in use.
inline Vertex next_fresh_vertex(const SimplicialComplex& k) { return k.max_abs_vertex() + 1; }

/// κ(A, B) if lk(A) = ∂B for a simplex B absent from `k`. When A is a facet,
/// B is {fresh}, defaulting to next_fresh_vertex(k).
inline std::optional<BistellarMove> find_move(const SimplicialComplex& k, const Simplex& a, Vertex fresh = 0) {
  if (a.empty() || !k.contains(a)) throw Error(ErrorCode::FaceNotPresent, "no face " + to_string(a));
  const int n = k.dimension();
  const int r = a.dim();
  const auto star_facets = k.facets_containing(a);

  if (r == n) {
    if (fresh == 0) fresh = next_fresh_vertex(k);
    if (k.has_vertex(fresh)) return std::nullopt;
    return BistellarMove{a, Simplex{fresh}};
  }

  const std::size_t expected = static_cast<std::size_t>(n - r + 1);
  if (star_facets.size() != expected) return std::nullopt;
  Simplex b;
  for (const auto& f : star_facets) {
    const Simplex rest = f - a;
    if (rest.size() + 1 != expected) return std::nullopt;
    b = b | rest;
  }
  // `expected` distinct (n-r)-subsets of an (n-r+1)-set are all of them.
  if (b.size() != expected || k.contains(b)) return std::nullopt;
  return BistellarMove{a, std::move(b)};
}

inline bool is_admissible(const SimplicialComplex& k, const BistellarMove& m) {
  if (m.removed.empty() || m.inserted.empty() || !k.contains(m.removed)) return false;
  if (m.removed.dim() == k.dimension()) {
    if (m.inserted.size() != 1) return false;
    const Vertex fresh = m.inserted.front();
    return fresh != 0 && !k.has_vertex(fresh);
  }
  auto found = find_move(k, m.removed);
  return found && found->inserted == m.inserted;
}

/// All admissible moves, ordered by (dim A, lexicographic A).
inline std::vector<BistellarMove> enumerate_moves(const SimplicialComplex& k) {
  std::vector<BistellarMove> out;
  const Vertex fresh = next_fresh_vertex(k);
  for (const auto& a : k.all_faces())
    if (auto m = find_move(k, a, fresh)) out.push_back(std::move(*m));
  return out;
}

struct MoveResult {
  SimplicialComplex complex;
  BistellarMove inverse;
};

namespace detail {

inline SimplicialComplex flip_unchecked(const SimplicialComplex& k, const BistellarMove& m) {
  std::vector<Simplex> out;
  out.reserve(k.num_facets() + m.removed.size());
  for (const auto& f : k.facets())
    if (!f.contains(m.removed)) out.push_back(f);
  for (Vertex x : m.removed) out.push_back(m.removed.without(x) | m.inserted);
  return SimplicialComplex::from_facets(std::move(out));
}

}  // namespace detail

inline MoveResult apply_move(const SimplicialComplex& k, const BistellarMove& m) {
  if (!is_admissible(k, m)) throw Error(ErrorCode::MoveNotAdmissible, to_string(m));
  return MoveResult{detail::flip_unchecked(k, m), m.inverse()};
}

/// Admissible Z2-moves κ̃(A, B), one representative per antipodal pair: the
/// one whose A is lexicographically smaller than -A. Fresh vertices are
/// allocated as the pair ±(max |v| + 1).
inline std::vector<BistellarMove> enumerate_z2_moves(const Z2Complex& m) {
  std::vector<BistellarMove> out;
  const auto& k = m.complex();
  const Vertex fresh = next_fresh_vertex(k);
  for (const auto& a : k.all_faces()) {
    if (antipode(a) < a) continue;
    auto mv = find_move(k, a, fresh);
    // With A ∪ B free the two flips touch disjoint stars, so the antipodal
    // flip stays admissible; apply_z2_move still re-checks.
    if (mv && is_free(mv->removed | mv->inserted)) out.push_back(std::move(*mv));
  }
  return out;
}

struct Z2MoveResult {
  Z2Complex complex;
  BistellarMove inverse;
};

/// Applies κ(A, B) and then κ(-A, -B).
inline Z2MoveResult apply_z2_move(const Z2Complex& m, const BistellarMove& mv) {
  const auto& k = m.complex();
  if (!is_admissible(k, mv)) throw Error(ErrorCode::MoveNotAdmissible, to_string(mv));
  if (!is_free(mv.removed | mv.inserted))
    throw Error(ErrorCode::ActionNotFree, to_string(mv) + " would create a face containing an antipodal pair");
  const SimplicialComplex first = detail::flip_unchecked(k, mv);
  const BistellarMove mirrored = mv.antipodal();
  if (!is_admissible(first, mirrored))
    throw Error(ErrorCode::InterferingAntipodalMove, to_string(mirrored) + " invalidated by " + to_string(mv));
  return Z2MoveResult{make_signed(detail::flip_unchecked(first, mirrored)), mv.inverse()};
}

enum class SequenceKind { plain, z2 };

/// A replayable list of moves. For z2 sequences each entry stands for the
/// antipodal pair κ̃(A, B).
struct FlipSequence {
  SequenceKind kind = SequenceKind::plain;
  std::vector<BistellarMove> moves;
  std::uint64_t source_digest = 0;
  std::uint64_t target_digest = 0;

  bool operator==(const FlipSequence&) const = default;
};

/// Moves replayed backwards, each inverted.
inline FlipSequence inverse(const FlipSequence& seq) {
  FlipSequence out{seq.kind, {}, seq.target_digest, seq.source_digest};
  for (auto it = seq.moves.rbegin(); it != seq.moves.rend(); ++it) out.moves.push_back(it->inverse());
  return out;
}

/// Replays every move; an inadmissible step raises CorruptSequence.
inline SimplicialComplex replay(const SimplicialComplex& source, const FlipSequence& seq) {
  if (seq.kind != SequenceKind::plain) throw CorruptSequence(0, "z2 sequence replayed on a plain complex");
  SimplicialComplex current = source;
  for (std::size_t i = 0; i < seq.moves.size(); ++i) {
    if (!is_admissible(current, seq.moves[i])) throw CorruptSequence(i, to_string(seq.moves[i]) + " not admissible");
    current = detail::flip_unchecked(current, seq.moves[i]);
  }
  return current;
}

inline Z2Complex replay(const Z2Complex& source, const FlipSequence& seq) {
  if (seq.kind != SequenceKind::z2) throw CorruptSequence(0, "plain sequence replayed on a Z2-complex");
  Z2Complex current = source;
  for (std::size_t i = 0; i < seq.moves.size(); ++i) {
    try {
      current = apply_z2_move(current, seq.moves[i]).complex;
    } catch (const Error& e) {
      throw CorruptSequence(i, e.what());
    }
  }
  return current;
}

struct WalkResult {
  Z2Complex complex;
  FlipSequence sequence;
};

/// `steps` Z2-moves, each drawn uniformly from enumerate_z2_moves.
inline WalkResult random_z2_walk(const Z2Complex& m, std::size_t steps, std::uint64_t seed) {
  Rng rng(seed);
  WalkResult walk{m, FlipSequence{SequenceKind::z2, {}, digest(m.complex()), 0}};
  for (std::size_t s = 0; s < steps; ++s) {
    const auto moves = enumerate_z2_moves(walk.complex);
    if (moves.empty()) throw Error(ErrorCode::NoAdmissibleMove, "walk step " + std::to_string(s));
    const auto& pick = moves[rng.index(moves.size())];
    walk.complex = apply_z2_move(walk.complex, pick).complex;
    walk.sequence.moves.push_back(pick);
  }
  walk.sequence.target_digest = digest(walk.complex.complex());
  return walk;
}

}  // namespace fanflip
