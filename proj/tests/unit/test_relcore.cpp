#include <doctest.h>

#include "fixtures.hpp"
#include "tgpd/oracles.hpp"

using namespace tgpd;
using fx::S;

TEST_CASE("subset basics") {
  Subset a = Subset::of(5, {0, 3});
  Subset b = Subset::of(5, {3, 4});
  CHECK((a | b) == Subset::of(5, {0, 3, 4}));
  CHECK((a & b) == Subset::of(5, {3}));
  CHECK((a - b) == Subset::of(5, {0}));
  CHECK((~a) == Subset::of(5, {1, 2, 4}));
  CHECK(Subset::of(5, {3}).subset_of(a));
  CHECK_FALSE(a.subset_of(b));
  CHECK(a.count() == 2);
  CHECK(Subset::full(5).is_full());
  CHECK_THROWS_AS(a | Subset(4), CarrierMismatch);
  CHECK(all_subsets(3).size() == 8);
  CHECK(subsets_up_to(4, 2).size() == 11);
  Subset wide(100);
  wide.set(99).set(64).set(1);
  CHECK(wide.indices() == std::vector<std::size_t>{1, 64, 99});
}

TEST_CASE("carrier invariants") {
  CHECK_THROWS_AS(Carrier(std::vector<std::string>{}), InvalidStructure);
  CHECK_THROWS_AS(Carrier({"a", "a"}), InvalidStructure);
  CHECK_THROWS_AS(Carrier({"a", ""}), InvalidStructure);
  std::vector<std::string> many(65);
  for (std::size_t i = 0; i < many.size(); ++i) {
    many[i] = "p" + std::to_string(i);
  }
  CHECK_THROWS_AS(Carrier{many}, CapExceeded);
  Carrier c({"a", "b", "c"});
  CHECK(c.format(c.subset({"c", "a"})) == "{a,c}");
  CHECK_THROWS_AS(c.index_of("zz"), ParseError);
}

TEST_CASE("images and subset order") {
  const auto e1 = fx::e1(), e2 = fx::e2(), e4 = fx::e4();
  CHECK(up_image(e1, S(e1, {"a"})) == S(e1, {"a"}));
  CHECK(up_image(e4, S(e4, {"u"})) == S(e4, {"u", "v"}));
  CHECK(up_image(e2, e2.empty_set()).empty());
  CHECK(down_image(e2, S(e2, {"a"})) == S(e2, {"a", "c"}));

  CHECK(subset_prec(e2, S(e2, {"c"}), S(e2, {"a"})));
  CHECK(subset_prec(e1, e1.empty_set(), S(e1, {"b"})));
  CHECK_FALSE(subset_prec(e1, S(e1, {"a"}), S(e1, {"b"})));
  CHECK_THROWS_AS(subset_prec(e1, S(e1, {"a"}), Subset(3)), CarrierMismatch);
}

TEST_CASE("dense and compact covers") {
  const auto e1 = fx::e1(), e2 = fx::e2();
  CHECK(dense_cover(e2, S(e2, {"a"}), S(e2, {"b"})));
  CHECK(dense_cover(e1, e1.empty_set(), S(e1, {"a"})));
  CHECK_FALSE(dense_cover(e1, S(e1, {"a"}), S(e1, {"b"})));

  CHECK(compact_cover(e2, S(e2, {"a"}), S(e2, {"b"})));
  CHECK(compact_cover(e1, e1.empty_set(), S(e1, {"b"})));
  CHECK_FALSE(compact_cover(e1, S(e1, {"a"}), S(e1, {"b"})));
  // The witness F = {b,c} from the definition.
  CHECK(subset_prec(e2, S(e2, {"b", "c"}), S(e2, {"b"})));
  CHECK(dense_cover(e2, S(e2, {"a"}), S(e2, {"b", "c"})));
}

TEST_CASE("disjointness, meets, centred") {
  const auto e1 = fx::e1(), e2 = fx::e2();
  CHECK(disjoint(e1, S(e1, {"a"}), S(e1, {"b"})));
  CHECK_FALSE(disjoint(e2, S(e2, {"a"}), S(e2, {"b"})));
  for (std::size_t p = 0; p < e2.size(); ++p) {
    const Subset s = Subset::singleton(3, p);
    CHECK_FALSE(disjoint(e2, s, s));
  }
  CHECK(perp_set(e1, S(e1, {"a"})) == S(e1, {"b"}));

  CHECK(formal_meet(e2, S(e2, {"a", "b"})) == S(e2, {"c"}));
  CHECK(formal_meet(e2, e2.empty_set()).is_full());
  CHECK(formal_meet(e1, S(e1, {"a", "b"})).empty());

  CHECK(centred(e2, S(e2, {"a", "b"})));
  CHECK_FALSE(centred(e1, S(e1, {"a", "b"})));
  CHECK(centred(e1, e1.empty_set()));
}

TEST_CASE("hatted covers") {
  const auto e2 = fx::e2(), e3 = fx::e3();
  CHECK_FALSE(hatted_cover(e3, CoverKind::Compact, S(e3, {"x", "t"}), S(e3, {"y"})));
  CHECK(hatted_cover(e2, CoverKind::Compact, S(e2, {"a", "b"}), S(e2, {"c"})));
  for (const auto &r : {fx::e1(), e2, e3, fx::e4()}) {
    CHECK(hatted_cover(r, CoverKind::Compact, r.empty_set(), r.full_set()) ==
          compact_cover(r, r.full_set(), r.full_set()));
  }
}

TEST_CASE("roundness and pseudobasis validation") {
  const auto e4 = fx::e4();
  CHECK(is_round(e4, S(e4, {"u", "v"})));
  CHECK_FALSE(is_round(e4, S(e4, {"v"})));
  CHECK(is_round(e4, e4.empty_set()));

  for (const auto &r : {fx::e1(), fx::e2(), fx::e3(), e4}) {
    CHECK(validate_pseudobasis(r).ok());
  }

  const auto chain = fx::rel({"u", "v"}, {{"u", "v"}});
  const auto rc = validate_pseudobasis(chain);
  REQUIRE_FALSE(rc.passed("round"));
  CHECK(rc.find("round")->witness->element(0) == 0);

  const auto cyc = fx::rel({"p", "q"}, {{"p", "q"}, {"q", "p"}});
  const auto rt = validate_pseudobasis(cyc);
  REQUIRE_FALSE(rt.passed("transitive"));
  const Witness &w = *rt.find("transitive")->witness;
  CHECK(w.element(0) == w.element(2));
  CHECK(cyc.prec(w.element(0), w.element(1)));
  CHECK(cyc.prec(w.element(1), w.element(2)));
  CHECK_FALSE(cyc.prec(w.element(0), w.element(2)));
  CHECK_THROWS_AS(require_pseudobasis(cyc, "test"), PreconditionViolation);
}

TEST_CASE("separativity") {
  CHECK(is_separative(fx::e3()).ok());
  CHECK(is_separative(fx::e1()).ok());
  const auto e2 = fx::e2();
  const auto r = is_separative(e2);
  REQUIRE_FALSE(r.ok());
  const Witness &w = *r.find("separative")->witness;
  CHECK(w.element(0) == 0);
  CHECK(w.element(1) == 1);
  CHECK_THROWS_AS(is_separative(fx::rel({"u", "v"}, {{"u", "v"}})), PreconditionViolation);
}

TEST_CASE("reductions agree with the brute-force definitions on the fixtures") {
  for (const auto &r : {fx::e1(), fx::e2(), fx::e3(), fx::e4()}) {
    oracle::Brute b(r);
    for (const auto &q : all_subsets(r.size())) {
      CHECK(centred(r, q) == b.centred(oracle::Brute::mask(q)));
      for (const auto &s : all_subsets(r.size())) {
        const auto mq = oracle::Brute::mask(q), ms = oracle::Brute::mask(s);
        CHECK(compact_cover(r, q, s) == b.compact(mq, ms));
        CHECK(hatted_cover(r, CoverKind::Compact, q, s) ==
              b.hatted(CoverKind::Compact, mq, ms));
      }
    }
  }
}
