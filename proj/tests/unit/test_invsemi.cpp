#include <doctest.h>

#include "tgpd/invsemi.hpp"

using namespace tgpd;

namespace {

Subset of(const InvSemigroup &s, std::vector<std::string> labels) {
  return s.elements().subset(labels);
}

std::size_t at(const InvSemigroup &s, const std::string &label) {
  return s.elements().index_of(label);
}

} // namespace

TEST_CASE("inverse semigroup validation") {
  const InvSemigroup e5 = semilattice_e5();
  CHECK(validate_inverse_semigroup(e5.elements(), e5.table()).ok());
  for (std::size_t i = 0; i < e5.size(); ++i) {
    CHECK(e5.inverse(i) == i);
  }
  const InvSemigroup i2 = symmetric_inverse_monoid(2);
  CHECK(i2.size() == 7);
  CHECK(validate_inverse_semigroup(i2.elements(), i2.table()).ok());
  CHECK(i2.idempotents().count() == 4);

  const Carrier lz({"e", "f"});
  const auto r = validate_inverse_semigroup(lz, {{0, 0}, {1, 1}});
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.passed("idempotents_commute"));
  CHECK_THROWS_AS(InvSemigroup(lz, {{0, 0}, {1, 1}}), InvalidStructure);
}

TEST_CASE("canonical order") {
  const InvSemigroup e5 = semilattice_e5();
  CHECK(e5.leq(at(e5, "x"), at(e5, "t")));
  CHECK(e5.leq(at(e5, "y"), at(e5, "t")));
  CHECK_FALSE(e5.leq(at(e5, "t"), at(e5, "x")));
  for (std::size_t i = 0; i < e5.size(); ++i) {
    CHECK(e5.leq(at(e5, "0"), i));
  }
  const InvSemigroup i2 = symmetric_inverse_monoid(2);
  CHECK(i2.leq(at(i2, "1-"), at(i2, "12")));
  CHECK(i2.leq(at(i2, "2-"), at(i2, "21")));
  CHECK_FALSE(i2.leq(at(i2, "2-"), at(i2, "12")));
  for (const auto *s : {&e5, &i2}) {
    for (std::size_t i = 0; i < s->size(); ++i) {
      CHECK(s->leq(i, i));
    }
    CHECK(canonical_order_agreement(*s).ok());
    const RelStructure le = canonical_order(*s);
    CHECK(is_transitive(le));
    CHECK(is_reflexive(le));
  }
}

TEST_CASE("ordered and pseudobasic structure") {
  const InvSemigroup e5 = semilattice_e5();
  const OrderedInvSemigroup o5(e5);
  CHECK(validate_pseudobasic(o5).ok());
  CHECK(o5.P().size() == 3);
  CHECK(validate_pseudobasic(OrderedInvSemigroup(symmetric_inverse_monoid(2))).ok());

  const RelStructure thin(e5.elements(), {{at(e5, "x"), at(e5, "t")}});
  const auto r = validate_pseudobasic(OrderedInvSemigroup(e5, thin));
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.passed("P.round"));
}

TEST_CASE("cosets") {
  const InvSemigroup i2 = symmetric_inverse_monoid(2);
  CHECK(is_coset(i2, of(i2, {"21"})));
  CHECK_FALSE(is_coset(i2, of(i2, {"1-"})));
  CHECK(coset_closure(i2, of(i2, {"1-"})).members == of(i2, {"1-", "12"}));
  const Coset swap{of(i2, {"21"})};
  const auto sq = coset_product(i2, swap, swap);
  REQUIRE(sq);
  CHECK(sq->members == of(i2, {"12"}));
  // {1-} has unit {1-}^≤ on both sides; {-2,12} does not match it.
  const Coset c1 = coset_closure(i2, of(i2, {"1-"}));
  const Coset c2 = coset_closure(i2, of(i2, {"-2"}));
  CHECK_FALSE(coset_product(i2, c1, c2));

  const InvSemigroup e5 = semilattice_e5();
  CHECK(is_coset(e5, e5.elements().full_set()) == (up_closure(e5, e5.elements().full_set()).is_full()));
  const Coset t{of(e5, {"t"})};
  CHECK(is_coset(e5, t.members));
  const auto tt = coset_product(e5, t, t);
  REQUIRE(tt);
  CHECK(tt->members == t.members);
}

TEST_CASE("generators") {
  CHECK(boolean_semilattice(3).size() == 8);
  CHECK(symmetric_inverse_monoid(1).size() == 2);
  CHECK(symmetric_inverse_monoid(3).size() == 34);
  Rng rng(7);
  for (int i = 0; i < 10; ++i) {
    const InvSemigroup s = random_inverse_subsemigroup(rng, 3);
    CHECK(validate_inverse_semigroup(s.elements(), s.table()).ok());
    CHECK(s.zero().has_value());
  }
}

TEST_CASE("ordered semigroup laws") {
  for (const auto &s : {semilattice_e5(), symmetric_inverse_monoid(2), boolean_semilattice(2)}) {
    const OrderedInvSemigroup o(s);
    REQUIRE(validate_pseudobasic(o).ok());
    CHECK(semigroup_laws(o).ok());
  }
}
