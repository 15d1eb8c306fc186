#include <doctest.h>

#include "fixtures.hpp"
#include "tgpd/oracles.hpp"
#include "tgpd/tight.hpp"

using namespace tgpd;
using fx::S;

namespace {

std::vector<std::string> formatted(const RelStructure &r, const std::vector<Subset> &sets) {
  std::vector<std::string> out;
  for (const auto &s : sets) {
    out.push_back(r.carrier().format(s));
  }
  return out;
}

std::vector<std::string> formatted(const RelStructure &r, const std::vector<TightSet> &sets) {
  std::vector<Subset> raw;
  for (const auto &t : sets) {
    raw.push_back(t.members());
  }
  return formatted(r, raw);
}

using Names = std::vector<std::string>;

} // namespace

TEST_CASE("frink filters") {
  const auto e3 = fx::e3(), e4 = fx::e4();
  CHECK(is_frink_filter(e3, S(e3, {"t"})));
  CHECK(is_frink_filter(e3, S(e3, {"x", "t"})));
  CHECK_FALSE(is_frink_filter(e4, S(e4, {"v"})));
}

TEST_CASE("tight subsets") {
  const auto e1 = fx::e1(), e2 = fx::e2(), e3 = fx::e3();
  CHECK(is_tight(e1, S(e1, {"a"})));
  CHECK_FALSE(is_tight(e3, S(e3, {"t"})));
  for (const auto &s : all_subsets(3)) {
    CHECK(is_tight(e2, s) == s.is_full());
  }
  CHECK_THROWS_AS(TightSet(e3, S(e3, {"t"})), InvalidStructure);
}

TEST_CASE("enumerate_tight on the fixtures") {
  CHECK(formatted(fx::e1(), enumerate_tight(fx::e1())) == Names{"{a}", "{b}"});
  CHECK(formatted(fx::e2(), enumerate_tight(fx::e2())) == Names{"{a,b,c}"});
  CHECK(formatted(fx::e3(), enumerate_tight(fx::e3())) == Names{"{x,t}", "{y,t}"});
  CHECK(formatted(fx::e4(), enumerate_tight(fx::e4())) == Names{"{u,v}"});
  CHECK_THROWS_AS(enumerate_tight(fx::rel({"u", "v"}, {{"u", "v"}})), PreconditionViolation);
}

TEST_CASE("maximal round centred subsets") {
  CHECK(formatted(fx::e3(), maximal_round_centred(fx::e3())) == Names{"{x,t}", "{y,t}"});
  CHECK(formatted(fx::e2(), maximal_round_centred(fx::e2())) == Names{"{a,b,c}"});
  CHECK(formatted(fx::e1(), maximal_round_centred(fx::e1())) == Names{"{a}", "{b}"});
}

TEST_CASE("tight search agrees with the direct definition") {
  for (const auto &r : {fx::e1(), fx::e2(), fx::e3(), fx::e4()}) {
    oracle::Brute b(r);
    std::vector<Subset> expect;
    for (auto m : b.tight_sets()) {
      expect.push_back(b.subset(m));
    }
    std::vector<Subset> got;
    for (const auto &t : enumerate_tight(r)) {
      got.push_back(t.members());
    }
    CHECK(got == expect);
    std::vector<Subset> mrc;
    for (auto m : b.maximal_round_centred()) {
      mrc.push_back(b.subset(m));
    }
    CHECK(maximal_round_centred(r) == mrc);
    for (const auto &s : all_subsets(r.size())) {
      const auto m = oracle::Brute::mask(s);
      CHECK(is_frink_filter(r, s) == b.frink(m));
      CHECK(satisfies_tight_elementwise(r, s) == b.tight_elementwise(m));
      CHECK(satisfies_tight_setwise(r, s) == b.tight_setwise(m));
      if (!s.is_full()) {
        CHECK(is_tight(r, s) == satisfies_tight_elementwise(r, s));
      }
    }
  }
}

TEST_CASE("selection principle") {
  const auto e3 = fx::e3();
  SelectionProblem p;
  p.delta_pred = [&](const Subset &d) { return centred(e3, d); };
  p.gamma = {S(e3, {"x", "t"}), S(e3, {"t"})};
  const auto res = selection_solve(e3, p);
  CHECK(res.hypotheses.ok());
  REQUIRE(res.selector);
  const Subset &sel = *res.selector;
  CHECK(is_round(e3, sel));
  for (const auto &g : p.gamma) {
    CHECK(sel.intersects(g));
  }
  for (const auto &d : all_subsets_of(sel)) {
    CHECK(centred(e3, d));
  }

  SelectionProblem vacuous;
  vacuous.delta_pred = [](const Subset &) { return true; };
  const auto none = selection_solve(e3, vacuous);
  REQUIRE(none.selector);
  CHECK(is_round(e3, *none.selector));

  const auto e1 = fx::e1();
  SelectionProblem q;
  q.delta_pred = [&](const Subset &d) { return centred(e1, d); };
  q.gamma = {e1.full_set()};
  const auto r1 = selection_solve(e1, q);
  REQUIRE(r1.selector);
  CHECK((*r1.selector == S(e1, {"a"}) || *r1.selector == S(e1, {"b"})));
}

TEST_CASE("tight stretching") {
  const auto e1 = fx::e1(), e2 = fx::e2(), e3 = fx::e3();
  auto t = tight_stretch(e3, e3.empty_set(), S(e3, {"t"}), S(e3, {"y"}));
  REQUIRE(t);
  CHECK(t->members() == S(e3, {"x", "t"}));
  t = tight_stretch(e1, e1.empty_set(), e1.empty_set(), S(e1, {"b"}));
  REQUIRE(t);
  CHECK(t->members() == S(e1, {"a"}));
  t = tight_stretch(e2, e2.empty_set(), S(e2, {"a"}), e2.empty_set());
  REQUIRE(t);
  CHECK(t->members().is_full());
  // {v} is not round in E4.
  const auto e4 = fx::e4();
  CHECK_THROWS_AS(tight_stretch(e4, e4.empty_set(), S(e4, {"v"}), e4.empty_set()),
                  PreconditionViolation);
}
