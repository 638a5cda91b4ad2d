#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fanflip/moves.hpp"
#include "fanflip/z2.hpp"

namespace fanflip {

/// Exact label values. Perturbed labels are midpoints, so denominators grow
/// with the number of perturbations along a sequence; arbitrary precision
/// keeps that exact.
using Label = boost::multiprecision::cpp_rational;

inline Label abs_label(const Label& x) { return x < 0 ? Label(-x) : x; }

namespace detail {

// Sign of |x| - |y| without normalizing a rational.
inline int compare_abs(const Label& x, const Label& y) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  using boost::multiprecision::cpp_int;
  const cpp_int dx = denominator(x);
  const cpp_int dy = denominator(y);
  cpp_int lhs = numerator(x);
  cpp_int rhs = numerator(y);
  if (lhs.sign() < 0) lhs = -lhs;
  if (rhs.sign() < 0) rhs = -rhs;
  if (dx != 1 || dy != 1) {
    lhs *= dy;
    rhs *= dx;
  }
  return lhs.compare(rhs);
}

inline bool complementary(const Label& x, const Label& y) { return x.sign() == -y.sign() && compare_abs(x, y) == 0; }

}  // namespace detail

/// Vertex → nonzero label. A Fan labelling additionally satisfies
/// λ(-v) = -λ(v) and has no edge {u, v} with λ(u) + λ(v) = 0; see validate_fan.
class FanLabelling {
 public:
  FanLabelling() = default;
  explicit FanLabelling(std::map<Vertex, Label> labels) : labels_(std::move(labels)) {}

  static FanLabelling from_integers(const std::map<Vertex, long long>& labels) {
    FanLabelling out;
    for (auto [v, x] : labels) out.labels_.emplace(v, Label(x));
    return out;
  }

  bool has(Vertex v) const { return labels_.count(v) != 0; }
  const Label& at(Vertex v) const {
    auto it = labels_.find(v);
    if (it == labels_.end()) throw Error(ErrorCode::IncompleteLabelling, "no label for vertex " + std::to_string(v));
    return it->second;
  }
  void set(Vertex v, Label x) { labels_[v] = std::move(x); }
  void erase(Vertex v) { labels_.erase(v); }

  const std::map<Vertex, Label>& labels() const noexcept { return labels_; }

  bool is_integral() const {
    return std::all_of(labels_.begin(), labels_.end(),
                       [](const auto& kv) { return boost::multiprecision::denominator(kv.second) == 1; });
  }

  /// Integer view; throws InvalidLabelling on a non-integral label.
  std::map<Vertex, long long> to_integers() const {
    std::map<Vertex, long long> out;
    for (const auto& [v, x] : labels_) {
      if (boost::multiprecision::denominator(x) != 1)
        throw Error(ErrorCode::InvalidLabelling, "label of " + std::to_string(v) + " is not an integer");
      out.emplace(v, boost::multiprecision::numerator(x).convert_to<long long>());
    }
    return out;
  }

  bool operator==(const FanLabelling&) const = default;

 private:
  std::map<Vertex, Label> labels_;
};

struct FanViolations {
  std::vector<Vertex> antipodality;      // vertices v > 0 with λ(-v) ≠ -λ(v)
  std::vector<Simplex> complementary;    // edges with λ(u) + λ(v) = 0
  std::vector<Vertex> zero_labels;

  bool ok() const { return antipodality.empty() && complementary.empty() && zero_labels.empty(); }
};

inline FanViolations validate_fan(const SimplicialComplex& k, const FanLabelling& lambda) {
  FanViolations out;
  for (Vertex v : k.vertices()) {
    if (!lambda.has(v)) throw Error(ErrorCode::IncompleteLabelling, "no label for vertex " + std::to_string(v));
    if (lambda.at(v).sign() == 0) out.zero_labels.push_back(v);
  }
  for (Vertex v : k.vertices())
    if (v > 0 && k.has_vertex(-v) && lambda.at(-v) != -lambda.at(v)) out.antipodality.push_back(v);
  for (const auto& e : k.edges())
    if (detail::complementary(lambda.at(e[0]), lambda.at(e[1]))) out.complementary.push_back(e);
  return out;
}

inline FanViolations validate_fan(const Z2Complex& m, const FanLabelling& lambda) {
  return validate_fan(m.complex(), lambda);
}

enum class Alternation { none, positive, negative };

/// Alternating: labels pairwise distinct in absolute value and signs
/// alternating by increasing absolute value. Positive or negative by the sign
/// of the label of least absolute value.
inline Alternation classify_simplex(const Simplex& a, const FanLabelling& lambda) {
  if (a.empty()) return Alternation::none;
  std::vector<const Label*> labels;
  labels.reserve(a.size());
  for (Vertex v : a) labels.push_back(&lambda.at(v));
  std::sort(labels.begin(), labels.end(), [](const Label* x, const Label* y) { return detail::compare_abs(*x, *y) < 0; });
  for (std::size_t i = 1; i < labels.size(); ++i) {
    if (detail::compare_abs(*labels[i], *labels[i - 1]) == 0) return Alternation::none;
    if (labels[i]->sign() == labels[i - 1]->sign()) return Alternation::none;
  }
  return labels.front()->sign() > 0 ? Alternation::positive : Alternation::negative;
}

struct AlphaCounts {
  long long plus = 0;
  long long minus = 0;
  bool operator==(const AlphaCounts&) const = default;
};

/// Positive and negative alternating facets.
inline AlphaCounts alpha_counts(const SimplicialComplex& k, const FanLabelling& lambda) {
  AlphaCounts out;
  for (const auto& f : k.facets()) {
    switch (classify_simplex(f, lambda)) {
      case Alternation::positive: ++out.plus; break;
      case Alternation::negative: ++out.minus; break;
      case Alternation::none: break;
    }
  }
  return out;
}

inline AlphaCounts alpha_counts(const Z2Complex& m, const FanLabelling& lambda) {
  return alpha_counts(m.complex(), lambda);
}

/// First edge (canonical order) whose labels sum to zero. Requires
/// λ(-v) = -λ(v); with labels in ±1..±n on a centrally symmetric n-sphere
/// such an edge always exists.
inline Simplex tucker_witness(const Z2Complex& m, const FanLabelling& lambda) {
  const auto check = validate_fan(m, lambda);
  if (!check.antipodality.empty() || !check.zero_labels.empty())
    throw Error(ErrorCode::InvalidLabelling, "labelling is not antipodal");
  if (check.complementary.empty())
    throw Error(ErrorCode::NoWitness, "no complementary edge: invalid input or a counterexample");
  return check.complementary.front();
}

/// Order-preserving map of the distinct absolute values onto 1..m, signs
/// kept. Classification of every simplex is unchanged.
inline FanLabelling integerize(const FanLabelling& lambda) {
  std::vector<Label> magnitudes;
  for (const auto& [v, x] : lambda.labels()) magnitudes.push_back(abs_label(x));
  std::sort(magnitudes.begin(), magnitudes.end());
  magnitudes.erase(std::unique(magnitudes.begin(), magnitudes.end()), magnitudes.end());
  FanLabelling out;
  for (const auto& [v, x] : lambda.labels()) {
    const auto rank = std::lower_bound(magnitudes.begin(), magnitudes.end(), abs_label(x)) - magnitudes.begin() + 1;
    out.set(v, x < 0 ? Label(-rank) : Label(rank));
  }
  return out;
}

/// Which relabelling rule fired.
enum class RelabelRule {
  fresh_vertex,      // B = {u}: u takes the least positive label of A
  perturbed_edge,    // B = {u, v} complementary: the positive one moves up by ε
  unchanged,
};

struct RelabelResult {
  Z2Complex complex;
  FanLabelling labelling;
  RelabelRule rule;
  std::optional<Vertex> changed;  // u; -u changed with it
  BistellarMove inverse;
};

/// Applies the Z2-move and returns a Fan labelling of the result whose number
/// of positive alternating facets has the same parity.
///
/// Only the pair {u, -u} is ever (re)labelled. For a fresh vertex the side of
/// the move carrying a positive label on A is used, preferring (A, B) as
/// given. For a complementary new edge, the positive endpoint u in B moves to
/// the midpoint between |λ(u)| and the next larger absolute value in use (or
/// |λ(u)| + 1/2 if there is none). Other labels are never renumbered.
inline RelabelResult relabel_move(const Z2Complex& m, const FanLabelling& lambda, const BistellarMove& mv) {
  if (!validate_fan(m, lambda).ok()) throw Error(ErrorCode::InvalidLabelling, "input is not a Fan labelling");
  auto moved = apply_z2_move(m, mv);

  FanLabelling next = lambda;
  if (mv.removed.size() == 1 && !moved.complex.complex().has_vertex(mv.removed.front())) {
    next.erase(mv.removed.front());
    next.erase(-mv.removed.front());
  }

  RelabelResult out{std::move(moved.complex), {}, RelabelRule::unchanged, std::nullopt, moved.inverse};

  if (mv.inserted.size() == 1) {
    const Vertex u = mv.inserted.front();
    auto least_positive = [&](const Simplex& a) -> std::optional<Label> {
      std::optional<Label> best;
      for (Vertex v : a) {
        const Label& x = lambda.at(v);
        if (x > 0 && (!best || x < *best)) best = x;
      }
      return best;
    };
    if (auto x = least_positive(mv.removed)) {
      next.set(u, *x);
      next.set(-u, -*x);
    } else {
      const Label y = *least_positive(antipode(mv.removed));
      next.set(-u, y);
      next.set(u, -y);
    }
    out.rule = RelabelRule::fresh_vertex;
    out.changed = u;
  } else if (mv.inserted.size() == 2) {
    const Vertex p = mv.inserted[0];
    const Vertex q = mv.inserted[1];
    if (detail::complementary(lambda.at(p), lambda.at(q))) {
      const Vertex u = lambda.at(p) > 0 ? p : q;
      const Label current = lambda.at(u);
      std::optional<Label> above;
      for (const auto& [w, x] : lambda.labels()) {
        const Label mag = abs_label(x);
        if (mag > current && (!above || mag < *above)) above = mag;
      }
      const Label moved_to = above ? Label((current + *above) / 2) : Label(current + Label(1, 2));
      next.set(u, moved_to);
      next.set(-u, -moved_to);
      out.rule = RelabelRule::perturbed_edge;
      out.changed = u;
    }
  }
  out.labelling = std::move(next);
  return out;
}

}  // namespace fanflip
