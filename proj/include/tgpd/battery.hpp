#pragma once

// Seeded instance generation and the property battery: every reduced
// quantifier against its brute-force oracle, and every law the library
// claims, evaluated over generated corpora.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tgpd/fintop.hpp"
#include "tgpd/invsemi.hpp"
#include "tgpd/io.hpp"
#include "tgpd/relcore.hpp"

namespace tgpd {

enum class InstanceKind {
  Poset,
  RoundTransitive,
  MeetSemilattice,
  InverseSemigroup,
  DiscretePseudobasis
};

const char *instance_kind_name(InstanceKind kind);
InstanceKind parse_instance_kind(const std::string &name);

struct InstanceGenSpec {
  std::uint64_t seed = 0;
  std::size_t max_size = 6;
  InstanceKind kind = InstanceKind::RoundTransitive;
};

/// Exactly one of rel / semigroup / (space, members) is set.
struct Instance {
  std::string name;
  InstanceKind kind = InstanceKind::RoundTransitive;
  std::uint64_t seed = 0;
  std::optional<RelStructure> rel;
  std::optional<OrderedInvSemigroup> semigroup;
  std::optional<FiniteSpace> space;
  std::vector<Subset> members;

  /// The instance in the module's input format, for replay.
  io::Json to_json() const;
};

/// Deterministic in the spec. Sizes are drawn from [1, max_size].
///  poset: random DAG on index order, reflexive-transitive closure;
///  round-transitive: random relation, transitive closure, loops added at
///    elements with no predecessor;
///  meet-semilattice: random ∩-closed family of subsets of a 3- or 4-set
///    containing ∅, ordered by ⊆;
///  inverse semigroup: random sub-semigroup of I_2 or I_3 containing the
///    empty map (at most max(max_size, 4) elements when possible);
///  discrete + pseudobasis: a discrete space on at most 4 points with the
///    singletons plus random extra members, filtered by is_pseudobasis.
/// Throws CapExceeded when max_size exceeds the carrier cap.
Instance gen_instance(const InstanceGenSpec &spec);

Instance relation_instance(std::string name, RelStructure rel);
Instance semigroup_instance(std::string name, OrderedInvSemigroup s);
Instance topology_instance(std::string name, FiniteSpace space,
                           std::vector<Subset> members);

/// Check groups applicable to an instance kind, in registry order.
std::vector<std::string> battery_checks(InstanceKind kind);
/// Every registered group.
std::vector<std::string> all_battery_checks();

/// Runs the selected groups (all applicable ones when `only` is empty) on
/// one instance. Sub-checks are named "group.sub". An exception escaping a
/// check is recorded as a failure of that group.
ValidationReport run_checks(const Instance &inst,
                            const std::vector<std::string> &only = {});

struct BatteryFailure {
  std::string instance;
  std::uint64_t seed = 0;
  std::string kind;
  std::string check;
  std::string witness;
  io::Json dump;
};

struct CheckTally {
  std::string name;
  std::size_t runs = 0;
  std::size_t passes = 0;
  std::size_t failures = 0;
};

struct BatteryReport {
  std::size_t instances = 0;
  /// One entry per check group, in registry order.
  std::vector<CheckTally> tallies;
  /// In instance order, then check order.
  std::vector<BatteryFailure> failures;
  double seconds = 0;

  bool ok() const { return failures.empty(); }
  const CheckTally *tally(const std::string &name) const;
  /// Machine-readable; no timing.
  io::Json to_json() const;
  /// Plain-text table with wall-clock.
  std::string to_text() const;
};

/// Evaluates instances concurrently (threads = 0: hardware concurrency)
/// and reduces in input order, so the report does not depend on
/// scheduling.
BatteryReport run_battery(const std::vector<InstanceGenSpec> &specs,
                          const std::vector<std::string> &checks = {},
                          unsigned threads = 0);
BatteryReport run_battery(const std::vector<Instance> &instances,
                          const std::vector<std::string> &checks = {},
                          unsigned threads = 0);

/// Specs seed, seed+1, ..., cycling through `kinds`.
std::vector<InstanceGenSpec> battery_corpus(std::uint64_t seed, std::size_t count,
                                            std::size_t max_size,
                                            const std::vector<InstanceKind> &kinds);

/// E1–E4 as relations, E5 and I_2 as semigroups.
std::vector<Instance> fixture_instances();

} // namespace tgpd
