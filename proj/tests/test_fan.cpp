#include <catch_amalgamated.hpp>

#include "corpus.hpp"
#include "fanflip/fanflip.hpp"

using namespace fanflip;

namespace {

FanLabelling octa_labels(long long a, long long b, long long c) {
  return FanLabelling::from_integers({{1, a}, {-1, -a}, {2, b}, {-2, -b}, {3, c}, {-3, -c}});
}

// Oracle: a simplex alternates iff every pair has distinct absolute values
// and, for each pair, the number of labels strictly between them in absolute
// value decides whether their signs agree.
Alternation classify_oracle(const std::vector<long long>& labels) {
  if (labels.empty()) return Alternation::none;
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      const long long a = std::llabs(labels[i]);
      const long long b = std::llabs(labels[j]);
      if (a == b) return Alternation::none;
      long long between = 0;
      for (long long x : labels)
        if (std::llabs(x) > std::min(a, b) && std::llabs(x) < std::max(a, b)) ++between;
      const bool same_sign = (labels[i] > 0) == (labels[j] > 0);
      if (same_sign != (between % 2 == 1)) return Alternation::none;
    }
  const auto smallest = *std::min_element(labels.begin(), labels.end(),
                                          [](long long x, long long y) { return std::llabs(x) < std::llabs(y); });
  return smallest > 0 ? Alternation::positive : Alternation::negative;
}

// Every labelling of n vertices up to the value of the labels: a weak order
// of absolute values (ranks 1..k) and one sign per rank. Two vertices of equal
// absolute value share a sign, so there is no complementary pair.
void for_each_pattern(int n, const std::function<void(const std::vector<long long>&)>& fn) {
  std::vector<int> rank(static_cast<std::size_t>(n), 0);
  std::function<void(int)> assign_ranks = [&](int i) {
    if (i == n) {
      const int k = *std::max_element(rank.begin(), rank.end());
      for (int r = 1; r <= k; ++r)
        if (std::find(rank.begin(), rank.end(), r) == rank.end()) return;
      for (unsigned signs = 0; signs < (1u << k); ++signs) {
        std::vector<long long> labels;
        for (int r : rank) labels.push_back((signs >> (r - 1)) & 1u ? -r : r);
        fn(labels);
      }
      return;
    }
    for (int r = 1; r <= n; ++r) {
      rank[static_cast<std::size_t>(i)] = r;
      assign_ranks(i + 1);
    }
  };
  assign_ranks(0);
}

long long alpha_plus_mod2(const Z2Complex& m, const FanLabelling& l) { return alpha_counts(m, l).plus % 2; }

}  // namespace

TEST_CASE("validate_fan", "[fan]") {
  const auto octa = cross_polytope(3);
  CHECK(validate_fan(octa, canonical_cross_labelling(3)).ok());

  const auto v = validate_fan(octa, octa_labels(1, 2, 1));
  CHECK(v.antipodality.empty());
  CHECK(v.complementary == std::vector<Simplex>{Simplex{-3, 1}, Simplex{-1, 3}});

  const auto w = validate_fan(octa, FanLabelling::from_integers({{1, 1}, {-1, 1}, {2, 2}, {-2, -2}, {3, 3}, {-3, -3}}));
  CHECK(w.antipodality == std::vector<Vertex>{1});

  auto missing = canonical_cross_labelling(3);
  missing.erase(-3);
  CHECK_THROWS_AS(validate_fan(octa, missing), Error);
  try {
    (void)validate_fan(octa, missing);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IncompleteLabelling);
  }
}

TEST_CASE("classify_simplex", "[fan]") {
  auto classify = [](std::vector<long long> labels) {
    std::map<Vertex, long long> m;
    std::vector<Vertex> vs;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      m[static_cast<Vertex>(i + 1)] = labels[i];
      vs.push_back(static_cast<Vertex>(i + 1));
    }
    return classify_simplex(Simplex(vs), FanLabelling::from_integers(m));
  };
  CHECK(classify({1, -2, 3}) == Alternation::positive);
  CHECK(classify({-1, 2, -3}) == Alternation::negative);
  CHECK(classify({1, 2, -3}) == Alternation::none);
  CHECK(classify({3, -2, 1}) == Alternation::positive);
  CHECK(classify({2, 2}) == Alternation::none);
  CHECK(classify({-5}) == Alternation::negative);

  SECTION("agrees with the pairwise oracle") {
    for (int n = 1; n <= 5; ++n)
      for_each_pattern(n, [&](const std::vector<long long>& labels) { CHECK(classify(labels) == classify_oracle(labels)); });
  }
}

TEST_CASE("alpha counts", "[fan]") {
  CHECK(alpha_counts(cross_polytope(3), canonical_cross_labelling(3)) == AlphaCounts{1, 1});
  CHECK(alpha_counts(cross_polytope(2), canonical_cross_labelling(2)) == AlphaCounts{1, 1});

  SECTION("antipodal facets have opposite classes") {
    for (const auto& [name, m] : testing::z2_corpus()) {
      INFO(name);
      const auto lambda = random_fan_labelling(m, m.dimension() + 2, 11);
      for (const auto& f : m.facets()) {
        const auto a = classify_simplex(f, lambda);
        const auto b = classify_simplex(antipode(f), lambda);
        if (a == Alternation::none) CHECK(b == Alternation::none);
        if (a == Alternation::positive) CHECK(b == Alternation::negative);
        if (a == Alternation::negative) CHECK(b == Alternation::positive);
      }
      const auto counts = alpha_counts(m, lambda);
      CHECK(counts.plus == counts.minus);
    }
  }
}

TEST_CASE("boundary of a simplex has alpha in {(0,0),(1,1),(2,0),(0,2)}", "[fan][property]") {
  const std::set<std::pair<long long, long long>> allowed{{0, 0}, {1, 1}, {2, 0}, {0, 2}};
  for (int n = 3; n <= 6; ++n) {
    const auto bd = simplex_boundary(n - 1);
    std::size_t patterns = 0;
    for_each_pattern(n, [&](const std::vector<long long>& labels) {
      std::map<Vertex, long long> m;
      for (std::size_t i = 0; i < labels.size(); ++i) m[static_cast<Vertex>(i + 1)] = labels[i];
      const auto a = alpha_counts(bd, FanLabelling::from_integers(m));
      CHECK(allowed.count({a.plus, a.minus}) == 1);
      ++patterns;
    });
    // Σ_k S(n,k)·k!·2^k labellings for n = 3..6.
    const std::map<int, std::size_t> expected{{3, 74}, {4, 730}, {5, 9002}, {6, 133210}};
    CHECK(patterns == expected.at(n));
  }
}

TEST_CASE("tucker_witness", "[fan]") {
  const auto octa = cross_polytope(3);
  CHECK(tucker_witness(octa, octa_labels(1, 2, 1)) == Simplex{-3, 1});
  CHECK(tucker_witness(octa, octa_labels(1, 1, 2)) == Simplex{-2, 1});

  try {
    (void)tucker_witness(octa, canonical_cross_labelling(3));
    FAIL("expected NoWitness");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoWitness);
  }
  try {
    (void)tucker_witness(octa, FanLabelling::from_integers({{1, 1}, {-1, 1}, {2, 2}, {-2, -2}, {3, 1}, {-3, -1}}));
    FAIL("expected InvalidLabelling");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidLabelling);
  }

  SECTION("walked 2-spheres with labels in ±{1,2}") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const auto walk = random_z2_walk(octa, 12, seed);
      Rng rng(seed * 7919);
      std::map<Vertex, long long> labels;
      for (Vertex v : walk.complex.complex().vertices())
        if (v > 0) {
          const long long x = rng.coin() ? 1 + static_cast<long long>(rng.index(2)) : -1 - static_cast<long long>(rng.index(2));
          labels[v] = x;
          labels[-v] = -x;
        }
      const auto lambda = FanLabelling::from_integers(labels);
      const auto e = tucker_witness(walk.complex, lambda);
      CHECK(walk.complex.complex().contains(e));
      CHECK(lambda.at(e[0]) + lambda.at(e[1]) == 0);
    }
  }
}

TEST_CASE("relabel_move rules", "[fan]") {
  const auto octa = cross_polytope(3);
  const auto canon = canonical_cross_labelling(3);

  SECTION("R1: fresh vertex takes the least positive label of A") {
    const BistellarMove mv{Simplex{1, -2, 3}, Simplex{7}};
    const auto r = relabel_move(octa, canon, mv);
    CHECK(r.rule == RelabelRule::fresh_vertex);
    CHECK(r.changed == 7);
    CHECK(r.labelling.at(7) == 1);
    CHECK(r.labelling.at(-7) == -1);
    CHECK(validate_fan(r.complex, r.labelling).ok());
    CHECK(alpha_plus_mod2(r.complex, r.labelling) == 1);
  }
  SECTION("R1: all-negative A uses the antipodal side") {
    const auto r = relabel_move(octa, canon, {Simplex{-1, -2, -3}, Simplex{7}});
    CHECK(r.labelling.at(-7) == 1);
    CHECK(r.labelling.at(7) == -1);
    CHECK(validate_fan(r.complex, r.labelling).ok());
  }

  // Octahedron with facet pair {±1,±2,±3} subdivided by ±4.
  const auto m = apply_z2_move(octa, {Simplex{1, 2, 3}, Simplex{4}}).complex;

  SECTION("R2: complementary new edge perturbs its positive endpoint") {
    const auto lambda = FanLabelling::from_integers({{1, 1}, {-1, -1}, {2, 3}, {-2, -3}, {3, 2}, {-3, -2}, {4, 2}, {-4, -2}});
    REQUIRE(validate_fan(m, lambda).ok());
    const BistellarMove mv{Simplex{1, 2}, Simplex{-3, 4}};
    REQUIRE(is_admissible(m.complex(), mv));
    const auto r = relabel_move(m, lambda, mv);
    CHECK(r.rule == RelabelRule::perturbed_edge);
    CHECK(r.changed == 4);
    CHECK(r.labelling.at(4) == Label(5, 2));
    CHECK(r.labelling.at(-4) == Label(-5, 2));
    CHECK(validate_fan(r.complex, r.labelling).ok());
    CHECK(alpha_plus_mod2(r.complex, r.labelling) == alpha_plus_mod2(m, lambda));

    const auto ints = integerize(r.labelling);
    CHECK(ints.at(4) == 3);
    CHECK(ints.at(2) == 4);
    CHECK(ints.at(-2) == -4);
    CHECK(ints.at(3) == 2);
    CHECK(ints.at(1) == 1);
  }
  SECTION("R3: non-complementary flip keeps every label") {
    auto lambda = canon;
    lambda.set(4, Label(1));
    lambda.set(-4, Label(-1));
    REQUIRE(validate_fan(m, lambda).ok());
    const auto r = relabel_move(m, lambda, {Simplex{1, 2}, Simplex{-3, 4}});
    CHECK(r.rule == RelabelRule::unchanged);
    CHECK_FALSE(r.changed);
    CHECK(r.labelling == lambda);
    CHECK(alpha_counts(r.complex, r.labelling).plus == alpha_counts(m, lambda).plus);
  }
  SECTION("removing a vertex pair drops its labels") {
    auto lambda = canon;
    lambda.set(4, Label(1));
    lambda.set(-4, Label(-1));
    const auto r = relabel_move(m, lambda, {Simplex{4}, Simplex{1, 2, 3}});
    CHECK(r.complex == octa);
    CHECK_FALSE(r.labelling.has(4));
    CHECK_FALSE(r.labelling.has(-4));
    CHECK(r.labelling == canon);
  }
  SECTION("errors") {
    try {
      (void)relabel_move(octa, octa_labels(1, 2, 1), {Simplex{1, 2, 3}, Simplex{7}});
      FAIL("expected InvalidLabelling");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidLabelling);
    }
    try {
      (void)relabel_move(octa, canon, {Simplex{1, 2}, Simplex{3, 4}});
      FAIL("expected MoveNotAdmissible");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::MoveNotAdmissible);
    }
  }
}

TEST_CASE("relabel soundness and locality on the corpus", "[fan][property]") {
  for (const auto& [name, m] : testing::z2_corpus()) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      INFO(name << " seed " << seed);
      const auto lambda = random_fan_labelling(m, m.dimension() + 2, seed);
      const auto before = alpha_counts(m, lambda);
      for (const auto& mv : enumerate_z2_moves(m)) {
        for (const auto& oriented : {mv, mv.antipodal()}) {
          INFO(to_string(oriented));
          const auto r = relabel_move(m, lambda, oriented);
          const auto& next = r.complex.complex();
          CHECK(validate_fan(r.complex, r.labelling).ok());
          CHECK(alpha_counts(r.complex, r.labelling).plus % 2 == before.plus % 2);

          for (Vertex v : next.vertices())
            if (lambda.has(v) && (!r.changed || (v != *r.changed && v != -*r.changed)))
              CHECK(r.labelling.at(v) == lambda.at(v));

          const Simplex b = oriented.inserted;
          for (const auto& f : next.facets()) {
            if (f.contains(b) || f.contains(antipode(b))) continue;
            REQUIRE(m.complex().has_facet(f));
            CHECK(classify_simplex(f, r.labelling) == classify_simplex(f, lambda));
          }

          const Simplex ab = oriented.removed | b;
          for (const auto& e : next.edges())
            if (ab.contains(e)) CHECK(r.labelling.at(e[0]) + r.labelling.at(e[1]) != 0);
        }
      }
    }
  }
}

TEST_CASE("integerize", "[fan]") {
  const auto x = FanLabelling(std::map<Vertex, Label>{{1, Label(5, 2)}, {2, Label(-2)}, {3, Label(1)}});
  CHECK(integerize(x) == FanLabelling::from_integers({{1, 3}, {2, -2}, {3, 1}}));
  const auto canon = canonical_cross_labelling(4);
  CHECK(integerize(canon) == canon);

  SECTION("random rational labellings keep their classification") {
    Rng rng(99);
    for (const auto& [name, m] : testing::z2_corpus()) {
      INFO(name);
      std::map<Vertex, Label> labels;
      for (Vertex v : m.complex().vertices())
        if (v > 0) {
          Label l(static_cast<long long>(rng.index(40)) + 1, static_cast<long long>(rng.index(6)) + 1);
          if (rng.coin()) l = -l;
          labels[v] = l;
          labels[-v] = -l;
        }
      const FanLabelling lambda(labels);
      const auto ints = integerize(lambda);
      CHECK(ints.is_integral());
      CHECK(integerize(ints) == ints);
      CHECK(alpha_counts(m, ints) == alpha_counts(m, lambda));
      for (const auto& f : m.complex().all_faces()) CHECK(classify_simplex(f, ints) == classify_simplex(f, lambda));
      const auto v1 = validate_fan(m, lambda);
      const auto v2 = validate_fan(m, ints);
      CHECK(v1.complementary == v2.complementary);
      CHECK(v1.antipodality == v2.antipodality);
    }
  }
}
