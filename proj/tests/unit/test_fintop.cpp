#include <doctest.h>

#include <algorithm>

#include "tgpd/fintop.hpp"
#include "tgpd/tight.hpp"

using namespace tgpd;

namespace {

Subset pts(std::size_t n, std::initializer_list<std::size_t> idx) { return Subset::of(n, idx); }

FiniteSpace sierpinski() {
  return FiniteSpace(Carrier::indexed(2), {Subset(2), pts(2, {1}), Subset::full(2)});
}

} // namespace

TEST_CASE("space construction") {
  CHECK_THROWS_AS(FiniteSpace(Carrier::indexed(2), {pts(2, {0}), Subset::full(2)}),
                  InvalidStructure);
  CHECK_THROWS_AS(FiniteSpace(Carrier::indexed(3),
                              {Subset(3), pts(3, {0}), pts(3, {1}), Subset::full(3)}),
                  InvalidStructure);
  CHECK(FiniteSpace::discrete(Carrier::indexed(3)).opens().size() == 8);
  CHECK(FiniteSpace::indiscrete(Carrier::indexed(3)).opens().size() == 2);
}

TEST_CASE("saturation and specialization") {
  const auto d2 = FiniteSpace::discrete(Carrier::indexed(2));
  CHECK(saturation(d2, pts(2, {0})) == pts(2, {0}));
  const auto s = sierpinski();
  CHECK(saturation(s, pts(2, {0})).is_full());
  CHECK(saturation(s, Subset(2)).empty());
  const RelStructure spec = specialization_order(s);
  CHECK(spec.prec(0, 1));
  CHECK_FALSE(spec.prec(1, 0));
  // Opens are exactly the up-sets of the specialization order.
  for (const auto &a : all_subsets(2)) {
    CHECK(s.is_open(a) == (up_image(spec, a) == a));
  }
}

TEST_CASE("compact containment") {
  const auto d2 = FiniteSpace::discrete(Carrier::indexed(2));
  for (const auto &n : d2.opens()) {
    CHECK(way_below(d2, Subset(2), n));
  }
  CHECK(way_below(d2, pts(2, {0}), Subset::full(2)));
  CHECK_FALSE(way_below(d2, Subset::full(2), pts(2, {0})));
  const auto s = sierpinski();
  for (const auto &o : s.opens()) {
    for (const auto &n : s.opens()) {
      CHECK(way_below(s, o, n) == o.subset_of(n));
    }
  }
  CHECK_THROWS(way_below(s, pts(2, {0}), Subset::full(2)));
}

TEST_CASE("patch topology") {
  const auto d2 = FiniteSpace::discrete(Carrier::indexed(2));
  CHECK(patch(sierpinski()) == d2);
  CHECK(patch(d2) == d2);
  const auto ind = FiniteSpace::indiscrete(Carrier::indexed(2));
  CHECK(patch(ind) == ind);
}

TEST_CASE("classification") {
  CHECK(classify(FiniteSpace::discrete(Carrier::indexed(3))).ok());
  const auto s = classify(sierpinski());
  CHECK(s.passed("T0"));
  CHECK_FALSE(s.passed("T1"));
  CHECK(s.passed("stably_locally_compact"));
  CHECK_FALSE(classify(FiniteSpace::indiscrete(Carrier::indexed(2))).passed("T0"));
}

TEST_CASE("pseudobases") {
  const auto d2 = FiniteSpace::discrete(Carrier::indexed(2));
  CHECK(is_pseudobasis(d2, {pts(2, {0}), pts(2, {1})}).ok());

  const auto d3 = FiniteSpace::discrete(Carrier::indexed(3));
  const std::vector<Subset> m = {pts(3, {0}), pts(3, {1}), Subset::full(3)};
  CHECK(is_pseudosubbasis(d3, m).ok());
  const auto r = is_pseudobasis(d3, m);
  REQUIRE_FALSE(r.passed("dense"));
  CHECK(r.find("dense")->witness->subset(0) == pts(3, {2}));

  const auto d1 = FiniteSpace::discrete(Carrier::indexed(1));
  CHECK_FALSE(is_pseudobasis(d1, {}).passed("cover"));
}

TEST_CASE("generated topology and patch round trip") {
  const auto d2 = FiniteSpace::discrete(Carrier::indexed(2));
  CHECK(patch_roundtrip(d2, {pts(2, {0}), pts(2, {1})}));
  const auto xp = generate_XP(d2, {pts(2, {0}), Subset::full(2)});
  CHECK(xp.opens().size() == 3);
  CHECK(classify(xp).passed("T0"));
  CHECK_FALSE(classify(xp).passed("T1"));
  CHECK(patch_roundtrip(d2, {pts(2, {0}), Subset::full(2)}));
  const auto d3 = FiniteSpace::discrete(Carrier::indexed(3));
  CHECK(patch_roundtrip(d3, {pts(3, {0}), pts(3, {1}), pts(3, {2})}));

  const std::vector<Subset> fam = {pts(3, {0, 1}), pts(3, {1, 2})};
  auto naive = close_family_naive(3, fam);
  std::sort(naive.begin(), naive.end());
  auto opens = FiniteSpace::generated(Carrier::indexed(3), fam).opens();
  std::sort(opens.begin(), opens.end());
  CHECK(opens == naive);
}

TEST_CASE("abstract pseudobasis of a concrete one") {
  const auto d2 = FiniteSpace::discrete(Carrier::indexed(2));
  const RelStructure e1 = abstract_of_concrete(d2, {pts(2, {0}), pts(2, {1})});
  CHECK(e1.size() == 2);
  CHECK(e1.prec(0, 0));
  CHECK_FALSE(e1.prec(0, 1));
  CHECK(enumerate_tight(e1).size() == 2);

  const RelStructure e3 = abstract_of_concrete(d2, {pts(2, {0}), pts(2, {1}), Subset::full(2)});
  CHECK(e3.size() == 3);
  CHECK(validate_pseudobasis(e3).ok());
  CHECK(enumerate_tight(e3).size() == 2);
  CHECK(cover_representation(d2, {pts(2, {0}), pts(2, {1}), Subset::full(2)}).ok());

  const auto d1 = FiniteSpace::discrete(Carrier::indexed(1));
  const RelStructure one = abstract_of_concrete(d1, {Subset::full(1)});
  CHECK(one.size() == 1);
  CHECK(one.prec(0, 0));
  CHECK_THROWS_AS(abstract_of_concrete(d2, {Subset(2), Subset::full(2)}), PreconditionViolation);
}
