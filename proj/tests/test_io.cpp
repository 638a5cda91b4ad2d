#include <catch_amalgamated.hpp>

#include "corpus.hpp"
#include "fanflip/fanflip.hpp"

using namespace fanflip;

namespace {

ErrorCode parse_error_of(std::string_view text) {
  try {
    (void)parse_complex_file(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error for " << text);
  return ErrorCode::EmptyComplex;
}

}  // namespace

TEST_CASE("complex files round-trip", "[io][property]") {
  for (const auto& [name, k] : testing::corpus()) {
    INFO(name);
    const auto text = serialize(to_file(k));
    const auto back = parse_complex_file(text);
    CHECK(back.complex() == k);
    CHECK(serialize(back) == text);
  }
  for (const auto& [name, m] : testing::z2_corpus()) {
    INFO(name);
    const auto lambda = random_fan_labelling(m, m.dimension() + 2, 3);
    const auto file = to_file(m, lambda);
    const auto text = serialize(file);
    const auto back = parse_complex_file(text);
    CHECK(back == file);
    CHECK(back.z2);
    CHECK(back.z2_complex() == m);
    CHECK(back.labelling() == lambda);
    CHECK(serialize(back) == text);
  }
}

TEST_CASE("canonical complex text", "[io]") {
  const auto text = serialize(to_file(cross_polytope(2), canonical_cross_labelling(2)));
  CHECK(text ==
        "{\n"
        "  \"format\": 1,\n"
        "  \"z2\": true,\n"
        "  \"facets\": [\n"
        "    [-2, -1],\n"
        "    [-2, 1],\n"
        "    [-1, 2],\n"
        "    [1, 2]\n"
        "  ],\n"
        "  \"labels\": [\n"
        "    [-2, -2],\n"
        "    [-1, -1],\n"
        "    [1, 1],\n"
        "    [2, 2]\n"
        "  ]\n"
        "}\n");
}

TEST_CASE("lenient input forms", "[io]") {
  const auto f = parse_complex_file(R"({"facets": [[3, 1], [2, 1], [2, 3]], "labels": {"1": 1, "2": -2, "3": 3}})");
  CHECK(f.complex() == simplex_boundary(2));
  CHECK_FALSE(f.z2);
  REQUIRE(f.labels);
  CHECK(f.labels->at(2) == -2);
  CHECK(f.facets == std::vector<Simplex>{Simplex{1, 2}, Simplex{1, 3}, Simplex{2, 3}});
}

TEST_CASE("parse errors", "[io]") {
  try {
    (void)parse_complex_file("{\n  \"facets\": [[1, 2],\n  [2, 3}\n");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK_THAT(std::string(e.what()), Catch::Matchers::ContainsSubstring("line 3"));
  }
  CHECK(parse_error_of("[]") == ErrorCode::ParseError);
  CHECK(parse_error_of(R"({"z2": true})") == ErrorCode::ParseError);
  CHECK(parse_error_of(R"({"format": 2, "facets": [[1]]})") == ErrorCode::ParseError);
  CHECK(parse_error_of(R"({"facets": [[1, "x"]]})") == ErrorCode::ParseError);
  CHECK(parse_error_of(R"({"facets": [[1, 2]], "z2": 1})") == ErrorCode::ParseError);
  CHECK(parse_error_of(R"({"facets": [[1, 2]], "labels": {"a": 1}})") == ErrorCode::ParseError);
  CHECK(parse_error_of(R"({"facets": [[1, 2]], "labels": [[1, 0.5]]})") == ErrorCode::ParseError);
  CHECK(parse_error_of(R"({"facets": [[0, 2]]})") == ErrorCode::InvalidVertexId);
  CHECK(parse_error_of(R"({"facets": [[1, 2]], "labels": [[0, 1]]})") == ErrorCode::InvalidVertexId);
}

TEST_CASE("flip sequences round-trip", "[io]") {
  const auto walk = random_z2_walk(cross_polytope(3), 10, 1);
  const auto text = dump(to_json(walk.sequence));
  const auto back = parse_flip_sequence(text);
  CHECK(back == walk.sequence);
  CHECK(replay(cross_polytope(3), back) == walk.complex);

  const auto plain = reduce_to_boundary_simplex(barycentric_subdivide(simplex_boundary(3)).complex);
  CHECK(parse_flip_sequence(dump(to_json(plain.sequence))) == plain.sequence);

  SECTION("inconsistent fresh ids are rejected") {
    const auto bad = R"({"kind": "z2", "moves": [{"A": [1, 2, 3], "B": [7], "fresh": [7, 7]}]})";
    CHECK_THROWS_AS(parse_flip_sequence(bad), Error);
  }
  SECTION("unknown kind") {
    CHECK_THROWS_AS(parse_flip_sequence(R"({"kind": "other", "moves": []})"), Error);
  }
}

TEST_CASE("certificate document", "[io]") {
  const auto walk = random_z2_walk(cross_polytope(3), 6, 4);
  const auto lambda = random_fan_labelling(walk.complex, 4, 4);
  const auto cert = fan_certificate(walk.complex, lambda);
  const auto j = to_json(cert);
  CHECK(j["verified"] == true);
  CHECK(j["alpha_plus"] == cert.alpha_plus);
  REQUIRE(j["trace"].size() == cert.trace.size());
  for (std::size_t i = 0; i < cert.trace.size(); ++i) {
    CHECK(j["trace"][i]["step"] == i);
    CHECK(j["trace"][i]["alpha_plus_mod2"] == cert.trace[i].parity());
  }
  CHECK(j["trace"][0]["move"].is_null());
  const auto seq = flip_sequence_from_json(j["reduction"]["sequence"]);
  CHECK(replay_verify(walk.complex, seq, cross_polytope(3).complex()));
}
