#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "tgpd/gpd.hpp"

using namespace tgpd;

namespace {

Subset arrows(const FiniteGroupoid &g, std::vector<std::string> labels) {
  return g.elements().subset(labels);
}

std::vector<Subset> singletons(const FiniteGroupoid &g) {
  std::vector<Subset> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    out.push_back(Subset::singleton(g.size(), i));
  }
  return out;
}

std::vector<Subset> nonempty_bisections(const FiniteGroupoid &g) {
  std::vector<Subset> out;
  for (const auto &b : all_bisections(g)) {
    if (b.any()) {
      out.push_back(b);
    }
  }
  return out;
}

// Brute force over all bijections.
bool semigroups_isomorphic(const InvSemigroup &a, const InvSemigroup &b) {
  if (a.size() != b.size()) {
    return false;
  }
  std::vector<std::size_t> p(a.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; ok && i < a.size(); ++i) {
      for (std::size_t j = 0; ok && j < a.size(); ++j) {
        ok = p[a.mul(i, j)] == b.mul(p[i], p[j]);
      }
    }
    if (ok) {
      return true;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

} // namespace

TEST_CASE("groupoids and bisections") {
  const FiniteGroupoid pg = pair_groupoid(2);
  CHECK(pg.size() == 4);
  CHECK(validate_groupoid(pg).ok());
  CHECK(pg.units().count() == 2);
  for (const auto &s : singletons(pg)) {
    CHECK(bisection_check(pg, s));
  }
  CHECK_FALSE(bisection_check(pg, arrows(pg, {"(1,1)", "(1,2)"})));
  CHECK(bisection_check(pg, Subset(pg.size())));
  CHECK(nonempty_bisections(pg).size() == 6);
  CHECK(validate_etale_family(pg, singletons(pg)).ok());
  CHECK(validate_groupoid(unit_groupoid(3)).ok());
}

TEST_CASE("tight groupoids") {
  const TightGroupoid e5 = tight_groupoid(OrderedInvSemigroup(semilattice_e5()));
  CHECK(e5.report.ok());
  CHECK(e5.groupoid.size() == 2);
  CHECK(e5.groupoid.units().count() == 2);
  CHECK(find_isomorphism(e5.groupoid, unit_groupoid(2)));

  const TightGroupoid i2 = tight_groupoid(OrderedInvSemigroup(symmetric_inverse_monoid(2)));
  CHECK(i2.report.ok());
  CHECK(i2.groupoid.size() == 4);
  const auto iso = find_isomorphism(i2.groupoid, pair_groupoid(2));
  REQUIRE(iso);
  CHECK(iso_check(i2.groupoid, pair_groupoid(2), *iso));

  const TightGroupoid one = tight_groupoid(OrderedInvSemigroup(boolean_semilattice(1)));
  CHECK(one.report.ok());
  CHECK(find_isomorphism(one.groupoid, unit_groupoid(1)));
}

TEST_CASE("bisection semigroups") {
  const FiniteGroupoid pg = pair_groupoid(2);
  const OrderedInvSemigroup five = bisection_semigroup(pg, singletons(pg));
  CHECK(five.base().size() == 5);
  CHECK(validate_pseudobasic(five).ok());

  const FiniteGroupoid u1 = unit_groupoid(1);
  const OrderedInvSemigroup two = bisection_semigroup(u1, singletons(u1));
  CHECK(two.base().size() == 2);

  const OrderedInvSemigroup all = bisection_semigroup(pg, nonempty_bisections(pg));
  CHECK(all.base().size() == 7);
  CHECK(semigroups_isomorphic(all.base(), symmetric_inverse_monoid(2)));
  CHECK_THROWS(bisection_semigroup(pg, {arrows(pg, {"(1,1)", "(1,2)"})}));
}

TEST_CASE("groupoid recovery") {
  const FiniteGroupoid pg = pair_groupoid(2);
  CHECK(recover_groupoid(pg, singletons(pg)).ok());
  const FiniteGroupoid u3 = unit_groupoid(3);
  CHECK(recover_groupoid(u3, singletons(u3)).ok());
  CHECK(recover_groupoid(pg, nonempty_bisections(pg)).ok());
}

TEST_CASE("isomorphism checks") {
  const FiniteGroupoid pg = pair_groupoid(2);
  std::vector<std::size_t> id(pg.size());
  std::iota(id.begin(), id.end(), 0);
  CHECK(iso_check(pg, pg, id));

  const auto &c = pg.elements();
  std::vector<std::size_t> swap(pg.size());
  auto relabel = [&](const std::string &from, const std::string &to) {
    swap[c.index_of(from)] = c.index_of(to);
  };
  relabel("(1,1)", "(2,2)");
  relabel("(2,2)", "(1,1)");
  relabel("(1,2)", "(2,1)");
  relabel("(2,1)", "(1,2)");
  CHECK(iso_check(pg, pg, swap));

  const FiniteGroupoid u2 = unit_groupoid(2);
  CHECK_FALSE(iso_check(u2, u2, {0, 0}));
  CHECK_FALSE(find_isomorphism(u2, pg));
}
