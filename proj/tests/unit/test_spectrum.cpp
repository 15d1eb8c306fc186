#include <doctest.h>

#include "fixtures.hpp"
#include "tgpd/spectrum.hpp"

using namespace tgpd;
using fx::S;

TEST_CASE("spectrum of the fixtures") {
  const auto s1 = build_spectrum(fx::e1());
  CHECK(s1.points.size() == 2);
  CHECK(classify(s1.space).passed("hausdorff"));
  CHECK(s1.space.opens().size() == 4);

  const auto e3 = fx::e3();
  const auto s3 = build_spectrum(e3);
  REQUIRE(s3.points.size() == 2);
  CHECK(s3.O_p[e3.carrier().index_of("t")].is_full());
  CHECK(s3.O_p[e3.carrier().index_of("x")].count() == 1);

  CHECK(build_spectrum(fx::e2()).points.size() == 1);
}

TEST_CASE("basic opens") {
  const auto e1 = fx::e1(), e3 = fx::e3();
  const auto s1 = build_spectrum(e1);
  const auto s3 = build_spectrum(e3);
  CHECK(basic_open(s1, e1.empty_set(), e1.empty_set()).is_full());
  const Subset oa = basic_open(s1, S(e1, {"a"}), e1.empty_set());
  REQUIRE(oa.count() == 1);
  CHECK(s1.points[oa.first()] == S(e1, {"a"}));
  CHECK(basic_open(s3, S(e3, {"x"}), S(e3, {"x"})).empty());
  for (const auto &sp : {s1, s3}) {
    const std::size_t n = sp.base.size();
    for (const auto &f : all_subsets(n)) {
      for (const auto &g : all_subsets(n)) {
        CHECK(basic_open(sp, f, g) == basic_open_factored(sp, f, g));
      }
    }
  }
}

TEST_CASE("emptiness characterization") {
  const auto e1 = fx::e1(), e3 = fx::e3();
  const auto s1 = build_spectrum(e1);
  const auto s3 = build_spectrum(e3);
  CHECK(check_empty_characterization(s3, S(e3, {"x"}), S(e3, {"x"})));
  CHECK(check_empty_characterization(s1, S(e1, {"a"}), S(e1, {"b"})));
  CHECK(check_empty_characterization(s1, e1.empty_set(), e1.empty_set()));
}

TEST_CASE("representation suite and induced pseudobasis") {
  for (const auto &r : {fx::e1(), fx::e2(), fx::e3(), fx::e4()}) {
    const auto sp = build_spectrum(r);
    CHECK(representation_suite(sp).ok());
    const auto cp = concrete_pseudobasis_of_spectrum(sp);
    CHECK(is_pseudobasis(cp.space, cp.members).ok());
  }
  const auto e2 = fx::e2();
  const auto s2 = build_spectrum(e2);
  CHECK(s2.O_p[0] == s2.O_p[1]);
  CHECK(s2.O_p[1] == s2.O_p[2]);
}

TEST_CASE("abstract round trip") {
  for (const auto &r : {fx::e1(), fx::e2(), fx::e3(), fx::e4()}) {
    CHECK(abstract_roundtrip(r).ok());
  }
}
