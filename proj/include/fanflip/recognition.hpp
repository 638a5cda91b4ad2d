#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <future>
#include <numeric>
#include <optional>
#include <vector>

#include "fanflip/fan.hpp"
#include "fanflip/generators.hpp"
#include "fanflip/isomorphism.hpp"
#include "fanflip/moves.hpp"
#include "fanflip/rng.hpp"

namespace fanflip {

/// Search knobs. The budget counts flips tried, accepted or not.
struct ReductionConfig {
  std::size_t budget = 100000;
  std::uint64_t seed = 0;
  double initial_temperature = 0.5;
  double cooling = 0.999;          // geometric, per flip tried
  double min_temperature = 0.05;
  std::size_t stagnation_limit = 400;  // flips without a new best before a restart
  std::size_t max_restarts = 10000;
  unsigned chains = 1;             // independent chains; the lowest-index success wins
};

enum class Outcome { reduced, inconclusive };

inline std::string_view to_string(Outcome o) { return o == Outcome::reduced ? "reduced" : "inconclusive"; }

struct ReductionStats {
  std::size_t flips_tried = 0;
  std::size_t flips_accepted = 0;
  std::size_t restarts = 0;
  FVector best_f_vector;
  /// Best f-vector at the moment of each restart.
  std::vector<FVector> best_at_restart;
};

/// Outcome of a flip search. `reduced` means replaying `sequence` from the
/// input ends at `final_complex`, which is isomorphic (Z2-isomorphic for
/// z2 sequences) to the target. `inconclusive` claims nothing.
struct ReductionReport {
  Outcome outcome = Outcome::inconclusive;
  FlipSequence sequence;
  ReductionStats stats;
  ReductionConfig config;
  SimplicialComplex final_complex = void_complex();
  std::optional<VertexMap> target_map;
};

namespace detail {

struct PlainSearch {
  using State = SimplicialComplex;
  static constexpr SequenceKind kind = SequenceKind::plain;

  SimplicialComplex target;
  FVector target_f;

  explicit PlainSearch(int n) : target(simplex_boundary(n + 1)), target_f(target.f_vector()) {}

  static const SimplicialComplex& complex(const State& s) { return s; }
  static std::vector<BistellarMove> moves(const State& s) { return enumerate_moves(s); }
  static State apply(const State& s, const BistellarMove& m) { return flip_unchecked(s, m); }
  std::optional<VertexMap> match(const State& s) const { return find_isomorphism(s, target); }
};

struct Z2Search {
  using State = Z2Complex;
  static constexpr SequenceKind kind = SequenceKind::z2;

  SimplicialComplex target;
  FVector target_f;

  explicit Z2Search(int n) : target(cross_polytope(n + 1).complex()), target_f(target.f_vector()) {}

  static const SimplicialComplex& complex(const State& s) { return s.complex(); }
  static std::vector<BistellarMove> moves(const State& s) { return enumerate_z2_moves(s); }
  static State apply(const State& s, const BistellarMove& m) { return apply_z2_move(s, m).complex; }
  std::optional<VertexMap> match(const State& s) const { return find_z2_isomorphism(s.complex(), target); }
};

/// One annealing chain. Improving moves (fewer facets) are taken greedily,
/// preferring the largest drop; otherwise a random move is proposed and
/// accepted with probability exp(-Δ/T), Δ being the facet-count increase.
/// The immediate inverse of the previous move is avoided when anything else
/// is available. After `stagnation_limit` flips without a new best state the
/// chain restarts from the best state with the initial temperature.
template <class Search>
ReductionReport run_chain(const Search& search, const typename Search::State& input, const ReductionConfig& cfg,
                          std::uint64_t seed) {
  using State = typename Search::State;
  Rng rng(seed);
  ReductionReport report;
  report.config = cfg;
  report.sequence.kind = Search::kind;
  report.sequence.source_digest = digest(Search::complex(input));

  const int n = Search::complex(input).dimension();
  State current = input;
  std::vector<BistellarMove> path;
  FVector current_f = Search::complex(current).f_vector();

  State best = current;
  std::vector<BistellarMove> best_path;
  FVector best_f = current_f;
  report.stats.best_f_vector = best_f;

  auto finish = [&](Outcome outcome, std::optional<VertexMap> map) {
    report.outcome = outcome;
    report.target_map = std::move(map);
    report.sequence.moves = path;
    report.final_complex = Search::complex(current);
    report.sequence.target_digest = digest(report.final_complex);
    report.stats.best_f_vector = best_f;
    return report;
  };

  if (current_f == search.target_f)
    if (auto map = search.match(current)) return finish(Outcome::reduced, std::move(map));

  double temperature = cfg.initial_temperature;
  std::size_t since_best = 0;
  std::optional<BistellarMove> undo;

  while (report.stats.flips_tried < cfg.budget) {
    auto moves = Search::moves(current);
    if (moves.empty()) break;

    std::vector<std::size_t> pool;
    int best_delta = 0;
    for (std::size_t i = 0; i < moves.size(); ++i) {
      const int delta = 2 * moves[i].level() - n;
      if (delta < best_delta) {
        best_delta = delta;
        pool.clear();
      }
      if (delta < 0 && delta == best_delta) pool.push_back(i);
    }
    const bool greedy = !pool.empty();
    if (!greedy) {
      pool.resize(moves.size());
      std::iota(pool.begin(), pool.end(), 0);
    }
    if (undo && pool.size() > 1) {
      auto is_undo = [&](std::size_t i) { return moves[i] == *undo || moves[i] == undo->antipodal(); };
      if (!std::all_of(pool.begin(), pool.end(), is_undo))
        pool.erase(std::remove_if(pool.begin(), pool.end(), is_undo), pool.end());
    }

    const BistellarMove& pick = moves[pool[rng.index(pool.size())]];
    ++report.stats.flips_tried;
    temperature = std::max(cfg.min_temperature, temperature * cfg.cooling);

    const int delta = 2 * pick.level() - n;
    const bool accept = greedy || delta <= 0 || rng.uniform() < std::exp(-delta / temperature);
    if (accept) {
      current = Search::apply(current, pick);
      path.push_back(pick);
      undo = pick.inverse();
      ++report.stats.flips_accepted;
      current_f = Search::complex(current).f_vector();

      if (current_f == search.target_f)
        if (auto map = search.match(current)) return finish(Outcome::reduced, std::move(map));
      if (current_f < best_f) {
        best = current;
        best_path = path;
        best_f = current_f;
        since_best = 0;
        continue;
      }
    }

    if (++since_best >= cfg.stagnation_limit) {
      if (report.stats.restarts >= cfg.max_restarts) break;
      ++report.stats.restarts;
      report.stats.best_at_restart.push_back(best_f);
      current = best;
      path = best_path;
      current_f = best_f;
      temperature = cfg.initial_temperature;
      since_best = 0;
      undo.reset();
    }
  }
  return finish(Outcome::inconclusive, std::nullopt);
}

inline std::uint64_t chain_seed(std::uint64_t seed, unsigned chain) {
  return seed + 0x9E3779B97F4A7C15ull * chain;
}

template <class Search>
ReductionReport run_chains(const Search& search, const typename Search::State& input, const ReductionConfig& cfg) {
  if (cfg.chains <= 1) return run_chain(search, input, cfg, cfg.seed);
  std::vector<std::future<ReductionReport>> futures;
  for (unsigned c = 0; c < cfg.chains; ++c)
    futures.push_back(std::async(std::launch::async, [&, c] { return run_chain(search, input, cfg, chain_seed(cfg.seed, c)); }));
  std::vector<ReductionReport> reports;
  for (auto& f : futures) reports.push_back(f.get());
  for (auto& r : reports)
    if (r.outcome == Outcome::reduced) return std::move(r);
  return std::move(reports.front());
}

}  // namespace detail

/// Searches for bistellar moves from `k` to ∂Δ^{n+1}. Success certifies that
/// `k` is a combinatorial sphere; failure claims nothing.
inline ReductionReport reduce_to_boundary_simplex(const SimplicialComplex& k, const ReductionConfig& cfg = {}) {
  if (!is_closed_pseudomanifold(k))
    throw Error(ErrorCode::NotClosedPseudomanifold, "reduction input must be a closed pseudomanifold");
  return detail::run_chains(detail::PlainSearch(k.dimension()), k, cfg);
}

/// Searches for Z2-bistellar moves from `m` to the boundary of the
/// (n+1)-dimensional cross polytope.
inline ReductionReport z2_reduce_to_cross_polytope(const Z2Complex& m, const ReductionConfig& cfg = {}) {
  if (!is_closed_pseudomanifold(m.complex()))
    throw Error(ErrorCode::NotClosedPseudomanifold, "reduction input must be a closed pseudomanifold");
  return detail::run_chains(detail::Z2Search(m.dimension()), m, cfg);
}

/// Replays `seq` from `source`; true iff the end equals or is isomorphic to
/// `target`. Inadmissible steps raise CorruptSequence.
inline bool replay_verify(const SimplicialComplex& source, const FlipSequence& seq, const SimplicialComplex& target) {
  if (seq.source_digest != 0 && seq.source_digest != digest(source))
    throw CorruptSequence(0, "sequence was recorded on a different source complex");
  const SimplicialComplex end = replay(source, seq);
  return end == target || is_isomorphic(end, target);
}

inline bool replay_verify(const Z2Complex& source, const FlipSequence& seq, const SimplicialComplex& target) {
  if (seq.source_digest != 0 && seq.source_digest != digest(source.complex()))
    throw CorruptSequence(0, "sequence was recorded on a different source complex");
  const Z2Complex end = replay(source, seq);
  return end.complex() == target || find_z2_isomorphism(end.complex(), target).has_value();
}

/// Whether `k` reduces to the boundary of a simplex within the budget. A
/// false answer is inconclusive.
inline bool is_combinatorial_sphere(const SimplicialComplex& k, const ReductionConfig& cfg = {}) {
  if (!is_closed_pseudomanifold(k)) return false;
  return reduce_to_boundary_simplex(k, cfg).outcome == Outcome::reduced;
}

/// Checks that the link of each listed vertex is a combinatorial sphere.
inline bool vertex_links_are_spheres(const SimplicialComplex& k, const std::vector<Vertex>& vertices,
                                     const ReductionConfig& cfg = {}) {
  for (Vertex v : vertices)
    if (!is_combinatorial_sphere(link(k, Simplex{v}), cfg)) return false;
  return true;
}

inline bool is_combinatorial_manifold(const SimplicialComplex& k, const ReductionConfig& cfg = {}) {
  return vertex_links_are_spheres(k, k.vertices(), cfg);
}

struct TraceEntry {
  std::size_t step = 0;
  std::optional<BistellarMove> move;  // empty for the input itself
  AlphaCounts alpha;
  RelabelRule rule = RelabelRule::unchanged;

  int parity() const { return static_cast<int>(alpha.plus % 2); }
};

struct FanCertificate {
  long long alpha_plus = 0;           // of the input labelling, counted directly
  std::vector<TraceEntry> trace;
  FanLabelling final_labelling;       // integral
  SimplicialComplex final_complex = void_complex();
  ReductionReport reduction;

  bool parity_constant() const {
    return std::all_of(trace.begin(), trace.end(), [&](const TraceEntry& e) { return e.parity() == trace.front().parity(); });
  }
  bool ends_with_single_positive_facet() const { return !trace.empty() && trace.back().alpha.plus == 1; }
  bool verified() const { return parity_constant() && ends_with_single_positive_facet(); }
};

/// Reduces `m` to the cross polytope and carries `lambda` along the flip
/// sequence with relabel_move, recording the alternating-facet counts at
/// every step. A verified certificate shows the input count is odd.
inline FanCertificate fan_certificate(const Z2Complex& m, const FanLabelling& lambda, const ReductionConfig& cfg = {}) {
  if (!validate_fan(m, lambda).ok()) throw Error(ErrorCode::InvalidLabelling, "input is not a Fan labelling");
  FanCertificate cert;
  const AlphaCounts initial = alpha_counts(m, lambda);
  cert.alpha_plus = initial.plus;

  cert.reduction = z2_reduce_to_cross_polytope(m, cfg);
  if (cert.reduction.outcome != Outcome::reduced)
    throw CertificateUnavailable(initial.plus, "reduction inconclusive after " +
                                                   std::to_string(cert.reduction.stats.flips_tried) + " flips");

  Z2Complex current = m;
  FanLabelling labels = lambda;
  cert.trace.push_back(TraceEntry{0, std::nullopt, initial, RelabelRule::unchanged});
  const auto& moves = cert.reduction.sequence.moves;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    auto step = relabel_move(current, labels, moves[i]);
    current = std::move(step.complex);
    labels = std::move(step.labelling);
    cert.trace.push_back(TraceEntry{i + 1, moves[i], alpha_counts(current, labels), step.rule});
  }
  cert.final_complex = current.complex();
  cert.final_labelling = integerize(labels);
  return cert;
}

}  // namespace fanflip
