#include <doctest.h>

#include "tgpd/io.hpp"

using namespace tgpd;

TEST_CASE("relation documents") {
  const auto doc = io::parse_document(R"({"elements":["a","b"],"rel":[["a","a"],["b","b"],["a","a"]]})");
  CHECK(io::detect_kind(doc) == io::InputKind::Relation);
  const RelStructure r = io::read_relation(doc);
  CHECK(r.size() == 2);
  CHECK(r.pairs().size() == 2);
  CHECK(io::read_relation(io::parse_document(io::to_json(r).dump())) == r);
}

TEST_CASE("parse errors carry line numbers") {
  try {
    io::parse_document("{\n  \"elements\": [\"a\"],\n  \"rel\": [\n    [\"a\" \"a\"]\n  ]\n}");
    FAIL("expected a parse error");
  } catch (const ParseError &e) {
    CHECK(e.line() == 4);
  }
  try {
    io::read_relation(io::parse_document("{\n  \"elements\": [\"a\"],\n  \"rel\": [\n    [\"a\", \"zz\"]\n  ]\n}"));
    FAIL("expected an unknown label");
  } catch (const ParseError &e) {
    CHECK(e.line() == 4);
  }
  CHECK_THROWS_AS(io::parse_kind("lattice"), ParseError);
}

TEST_CASE("topology documents") {
  const auto doc = io::parse_document(R"({"points":["0","1"],"opens":[[1]]})");
  CHECK(io::detect_kind(doc) == io::InputKind::Topology);
  const auto in = io::read_topology(doc);
  CHECK(in.opens.size() == 3);
  CHECK(in.warnings.size() == 2);
  const FiniteSpace s(in.points, in.opens);
  CHECK(s.is_open(Subset::of(2, {1})));
}

TEST_CASE("semigroup documents") {
  const auto doc = io::parse_document(
      R"({"elements":["0","e"],"table":[["0","0"],["0","e"]],"zero":"0"})");
  CHECK(io::detect_kind(doc) == io::InputKind::Semigroup);
  const auto s = io::build_semigroup(io::read_semigroup(doc));
  CHECK(s.base().zero() == std::optional<std::size_t>{0});
  CHECK(s.P().size() == 1);
  const auto bad = io::parse_document(
      R"({"elements":["0","e"],"table":[["0","0"],["0","e"]],"zero":"e"})");
  CHECK_THROWS_AS(io::build_semigroup(io::read_semigroup(bad)), InvalidStructure);
}

TEST_CASE("groupoid documents") {
  const auto g = pair_groupoid(2);
  const auto j = io::to_json(g);
  const auto doc = io::parse_document(j.dump());
  CHECK(io::detect_kind(doc) == io::InputKind::Groupoid);
  const auto in = io::read_groupoid(doc);
  CHECK(validate_groupoid(in.groupoid).ok());
  CHECK(in.groupoid.product() == g.product());
  CHECK_FALSE(in.bisections);
}
