#include <doctest.h>

#include "tgpd/battery.hpp"
#include "tgpd/oracles.hpp"

using namespace tgpd;

TEST_CASE("instance generation is deterministic") {
  for (auto kind : {InstanceKind::Poset, InstanceKind::RoundTransitive,
                    InstanceKind::MeetSemilattice, InstanceKind::InverseSemigroup,
                    InstanceKind::DiscretePseudobasis}) {
    const InstanceGenSpec spec{17, 5, kind};
    CHECK(gen_instance(spec).to_json() == gen_instance(spec).to_json());
    CHECK(parse_instance_kind(instance_kind_name(kind)) == kind);
  }
  CHECK_THROWS_AS(parse_instance_kind("lattice"), PreconditionViolation);
  CHECK_THROWS_AS(gen_instance({1, 1000, InstanceKind::Poset}), CapExceeded);
}

TEST_CASE("generated relations are pseudobases") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    for (auto kind : {InstanceKind::Poset, InstanceKind::RoundTransitive}) {
      const Instance inst = gen_instance({seed, 5, kind});
      REQUIRE(inst.rel);
      CHECK(inst.rel->size() <= 5);
      CHECK(validate_pseudobasis(*inst.rel).ok());
      if (kind == InstanceKind::Poset) {
        CHECK(is_reflexive(*inst.rel));
      }
    }
  }
}

TEST_CASE("fixtures pass every check") {
  const auto rep = run_battery(fixture_instances());
  CHECK(rep.instances == fixture_instances().size());
  CHECK(rep.ok());
}

TEST_CASE("small corpus passes and tallies add up") {
  const auto specs = battery_corpus(1, 25, 5,
                                    {InstanceKind::Poset, InstanceKind::RoundTransitive,
                                     InstanceKind::MeetSemilattice,
                                     InstanceKind::InverseSemigroup,
                                     InstanceKind::DiscretePseudobasis});
  const auto rep = run_battery(specs);
  CHECK(rep.instances == 25);
  CHECK(rep.ok());
  for (const auto &t : rep.tallies) {
    CHECK(t.runs == t.passes + t.failures);
  }
  REQUIRE(rep.tally("oracle_tight"));
  CHECK(rep.tally("oracle_tight")->runs > 0);
  CHECK(run_battery(specs).to_json() == rep.to_json());
}

TEST_CASE("empty corpus") {
  const auto rep = run_battery(std::vector<InstanceGenSpec>{});
  CHECK(rep.instances == 0);
  CHECK(rep.ok());
}

TEST_CASE("a broken relation is caught and dumped") {
  // Not transitive, so the pseudobasis group fails.
  Carrier c({"p", "q", "r"});
  const RelStructure bad(c, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}});
  const auto rep = run_battery(std::vector<Instance>{relation_instance("bad", bad)},
                               {"pseudobasis"});
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.failures.front().instance == "bad");
  CHECK(rep.failures.front().dump.contains("rel"));
}
