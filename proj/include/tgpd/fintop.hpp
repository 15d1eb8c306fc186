#pragma once

// Finite topological spaces given by their lattice of opens.

#include <cstddef>
#include <unordered_set>
#include <vector>

#include "tgpd/carrier.hpp"
#include "tgpd/relcore.hpp"
#include "tgpd/report.hpp"

namespace tgpd {

/// Upper bound on the number of opens any generated topology may have.
inline constexpr std::size_t kMaxOpens = std::size_t{1} << 20;

class FiniteSpace {
public:
  FiniteSpace() = default;
  /// Checks that ∅ and the full set are present and that the family is
  /// closed under pairwise ∪ and ∩. Duplicates are dropped; opens are kept
  /// in subset-index order.
  FiniteSpace(Carrier points, std::vector<Subset> opens);

  /// The topology generated by `family` (as a subbasis).
  static FiniteSpace generated(Carrier points, const std::vector<Subset> &family);
  static FiniteSpace discrete(Carrier points);
  static FiniteSpace indiscrete(Carrier points);

  const Carrier &points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<Subset> &opens() const { return opens_; }
  bool is_open(const Subset &s) const { return index_.count(s) != 0; }

  /// Smallest open containing x.
  const Subset &neighbourhood(std::size_t x) const { return nbhd_[x]; }

  bool operator==(const FiniteSpace &o) const {
    return points_ == o.points_ && opens_ == o.opens_;
  }

private:
  void index();

  Carrier points_;
  std::vector<Subset> opens_;
  std::unordered_set<Subset> index_;
  std::vector<Subset> nbhd_;
};

/// All unions of the given point neighbourhoods, i.e. the sets U with
/// nbhd[x] ⊆ U for every x ∈ U. Throws CapExceeded beyond kMaxOpens.
std::vector<Subset> unions_of_neighbourhoods(const std::vector<Subset> &nbhd);

/// The same family by naive fixed-point closure under ∩ then ∪; used as an
/// oracle for small families.
std::vector<Subset> close_family_naive(std::size_t width,
                                       const std::vector<Subset> &family);

/// x ⊑ y iff every open containing x contains y.
RelStructure specialization_order(const FiniteSpace &space);
/// Intersection of all opens containing A.
Subset saturation(const FiniteSpace &space, const Subset &a);
/// Every subset of a finite space is compact, so this is the family of
/// saturated subsets, in subset-index order.
std::vector<Subset> compact_saturated(const FiniteSpace &space);
Subset closure(const FiniteSpace &space, const Subset &a);
Subset interior(const FiniteSpace &space, const Subset &a);

/// O ⋐ N: some compact C has O ⊆ C ⊆ N. Both arguments must be open.
bool way_below(const FiniteSpace &space, const Subset &o, const Subset &n);

/// Topology generated by the opens and the complements of compact
/// saturated sets.
FiniteSpace patch(const FiniteSpace &space);

/// Checks "T0", "T1", "hausdorff", "locally_compact", "coherent",
/// "well_filtered", "stably_locally_compact".
ValidationReport classify(const FiniteSpace &space);

/// Checks "open", "separating", "cap_point_round".
ValidationReport is_pseudosubbasis(const FiniteSpace &space,
                                   const std::vector<Subset> &members);
/// Checks "open", "cover", "separating", "point_round", "dense",
/// "lower_order".
ValidationReport is_pseudobasis(const FiniteSpace &space,
                                const std::vector<Subset> &members);
/// The alternative axiom set: "cover_point_round" (every O in P ∪ {X} is
/// the union of the members it compactly contains), "dense_closure"
/// (cl O = cl ⋃{N ∈ P : N ⋐ O} for every open O) and "separating_meet".
ValidationReport is_pseudobasis_reformulated(const FiniteSpace &space,
                                             const std::vector<Subset> &members);

/// A pseudobasis together with its space; construction validates.
struct ConcretePseudobasis {
  FiniteSpace space;
  std::vector<Subset> members;
};
ConcretePseudobasis make_concrete_pseudobasis(FiniteSpace space,
                                              std::vector<Subset> members);

/// The space's points with the topology generated by `members`. Requires a
/// pseudosubbasis of a Hausdorff space.
FiniteSpace generate_XP(const FiniteSpace &space,
                        const std::vector<Subset> &members);
/// patch(generate_XP(space, members)) == space.
bool patch_roundtrip(const FiniteSpace &space,
                     const std::vector<Subset> &members);

/// Distinct members in subset-index order.
std::vector<Subset> dedupe_members(const std::vector<Subset> &members);

/// The relation ⋐ on the distinct members, labelled by their point sets.
/// Requires ∅ ∉ members and a pseudobasis of a Hausdorff space.
RelStructure abstract_of_concrete(const FiniteSpace &space,
                                  const std::vector<Subset> &members);

/// Compares ⊥, D and C of abstract_of_concrete with their set-level
/// readings ("QperpR", "QDR", "QCR"). All subset pairs when there are at
/// most 6 distinct members, pairs of subsets of size ≤ 2 otherwise.
ValidationReport cover_representation(const FiniteSpace &space,
                                      const std::vector<Subset> &members);

} // namespace tgpd
