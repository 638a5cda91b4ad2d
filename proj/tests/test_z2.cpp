#include <catch_amalgamated.hpp>

#include "corpus.hpp"
#include "fanflip/fanflip.hpp"

using namespace fanflip;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::ParseError;
}

void check_free_and_equivariant(const SimplicialComplex& k) {
  for (const auto& a : k.all_faces()) {
    CHECK(k.contains(antipode(a)));
    CHECK(a.disjoint(antipode(a)));
  }
}

}  // namespace

TEST_CASE("antipode", "[z2]") {
  CHECK(antipode(Simplex{1, -2, 3}) == Simplex{-1, 2, -3});
  CHECK(antipode(Simplex{}) == Simplex{});
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Vertex> vs;
    const auto n = rng.index(6);
    for (std::size_t i = 0; i < n; ++i) vs.push_back(static_cast<Vertex>(rng.index(19)) - 9);
    std::erase(vs, 0);
    const Simplex a(vs);
    CHECK(antipode(antipode(a)) == a);
  }
}

TEST_CASE("make_signed", "[z2]") {
  CHECK_NOTHROW(make_signed(cross_polytope(3).complex()));
  CHECK(code_of([] { make_signed(SimplicialComplex::from_facets({{1, -1}})); }) == ErrorCode::ActionNotFree);
  CHECK(code_of([] { make_signed(SimplicialComplex::from_facets({{1, -1}, {2, 3}, {-2, -3}})); }) == ErrorCode::ActionNotFree);
  CHECK(code_of([] { make_signed(SimplicialComplex::from_facets({{1, 2}})); }) == ErrorCode::NotEquivariant);
}

TEST_CASE("Z2 invariants on the corpus", "[z2][property]") {
  for (const auto& [name, m] : testing::z2_corpus()) {
    INFO(name);
    const auto& k = m.complex();
    check_free_and_equivariant(k);
    // lk(-A) = -lk(A)
    for (const auto& a : k.all_faces()) {
      std::vector<Simplex> mirrored;
      const auto lk = link(k, a);
      for (const auto& f : lk.facets()) mirrored.push_back(antipode(f));
      CHECK(link(k, antipode(a)) == SimplicialComplex::from_facets(mirrored));
    }
  }
}

TEST_CASE("equivariant subdivision", "[z2]") {
  SECTION("square becomes an 8-cycle, then a 16-cycle") {
    auto once = equivariant_sd(cross_polytope(2));
    CHECK(once.complex.complex().f_vector() == FVector{{8, 8}});
    CHECK(once.complex.is_barycentric());
    auto twice = equivariant_sd(once.complex);
    CHECK(twice.complex.complex().f_vector() == FVector{{16, 16}});
    check_free_and_equivariant(twice.complex.complex());
  }
  SECTION("octahedron") {
    auto sd = equivariant_sd(cross_polytope(3));
    CHECK(sd.complex.complex().f_vector() == FVector{{26, 72, 48}});
    CHECK_NOTHROW(make_signed(sd.complex.complex()));
    check_free_and_equivariant(sd.complex.complex());
  }
  SECTION("ids come in pairs and name antipodal faces") {
    auto sd = equivariant_sd(cross_polytope(3));
    for (const auto& [v, face] : sd.face_map) CHECK(sd.face_map.at(-v) == antipode(face));
    // Top-dimensional faces are subdivided first, so they get the small ids.
    CHECK(sd.face_map.at(1).dim() == 2);
    CHECK(sd.face_map.at(13).dim() == 0);
  }
}

TEST_CASE("sequential stellar subdivision agrees with the flag construction", "[z2][property]") {
  for (const auto& [name, m] : testing::z2_corpus()) {
    INFO(name);
    if (m.complex().num_facets() > 60) continue;
    auto sd = equivariant_sd(m);
    std::map<Simplex, Vertex> id_of;
    for (const auto& [v, face] : sd.face_map) id_of.emplace(face, v);
    CHECK(detail::flag_complex_of_faces(m.complex(), id_of) == sd.complex.complex());
  }
}

TEST_CASE("quotient", "[z2]") {
  SECTION("requires a barycentric subdivision") {
    CHECK(code_of([] { quotient(cross_polytope(3)); }) == ErrorCode::QuotientRequiresSubdivision);
  }
  SECTION("RP^1 from the square") {
    auto q = quotient(equivariant_sd(cross_polytope(2)).complex);
    CHECK(q.complex.f_vector() == FVector{{4, 4}});
    CHECK(q.complex.euler_characteristic() == 0);
  }
  SECTION("RP^2 from the octahedron") {
    auto q = quotient(equivariant_sd(cross_polytope(3)).complex);
    CHECK(q.complex.f_vector() == FVector{{13, 36, 24}});
    CHECK(q.complex.euler_characteristic() == 1);
  }
  SECTION("RP^3 from the 16-cell") {
    auto sd = equivariant_sd(cross_polytope(4)).complex;
    auto q = quotient(sd);
    const auto full = sd.complex().f_vector();
    const auto half = q.complex.f_vector();
    REQUIRE(full.counts.size() == half.counts.size());
    for (std::size_t i = 0; i < full.counts.size(); ++i) CHECK(full.counts[i] == 2 * half.counts[i]);
    CHECK(half.euler_characteristic() == 0);
  }
  SECTION("vertex links survive the projection") {
    auto sd = equivariant_sd(cross_polytope(3)).complex;
    auto q = quotient(sd);
    for (Vertex v : sd.complex().vertices()) {
      const auto up = link(sd.complex(), Simplex{v});
      const auto down = link(q.complex, Simplex{q.projection.at(v)});
      CHECK(is_isomorphic(up, down));
      std::vector<Simplex> projected;
      for (const auto& f : up.facets()) projected.push_back(q.project(f));
      CHECK(SimplicialComplex::from_facets(projected) == down);
    }
  }
}
