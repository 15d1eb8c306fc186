#pragma once

// Frink filters, tight subsets and the two existence results (selection of
// a round selector, stretching to a tight set) as finite searches.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "tgpd/relcore.hpp"

namespace tgpd {

/// u ∈ U ⇔ ∃w ≺ u with Û ≺ {w}. The finite witness F ⊆ U is reduced to
/// F = U because ≺ on subsets is antitone in its first argument.
bool is_frink_filter(const RelStructure &rel, const Subset &u);

/// Round and not Ĉ(T, P∖T).
bool is_tight(const RelStructure &rel, const Subset &t);

/// The right-hand side set {p : (T̂ ∩ G^⊥) C {p}} with the best finite
/// witnesses F = T and G = (P∖T)^≻ (the meet and G^⊥ are both antitone).
/// T satisfies the element-wise characterization iff this equals T.
Subset tight_generated(const RelStructure &rel, const Subset &t);
bool satisfies_tight_elementwise(const RelStructure &rel, const Subset &t);
/// H ∩ T ≠ ∅ ⇔ (T̂ ∩ G^⊥) C H for every H ⊆ P. Exhaustive in H, so the
/// carrier must have at most 24 elements.
bool satisfies_tight_setwise(const RelStructure &rel, const Subset &t);

/// A tight subset. Construction checks tightness.
class TightSet {
public:
  TightSet(const RelStructure &rel, Subset members);
  const Subset &members() const { return members_; }
  bool empty() const { return members_.empty(); }
  bool operator==(const TightSet &o) const { return members_ == o.members_; }

private:
  Subset members_;
};

/// Every tight subset (∅ included when tight), in subset-index order.
/// Depth-first search over up-closed candidates: including p forces p^≺,
/// excluding p forces p^≻ out, and a branch dies as soon as the included
/// part Ĉ-covers the excluded part (Ĉ is monotone in both arguments).
/// Requires an abstract pseudobasis.
std::vector<TightSet> enumerate_tight(const RelStructure &rel);

/// As enumerate_tight but restricted to T ⊇ must_in with T ∩ must_out = ∅.
std::vector<Subset> enumerate_tight_between(const RelStructure &rel,
                                            const Subset &must_in,
                                            const Subset &must_out);

/// The ⊆-maximal round centred subsets, in subset-index order. Since
/// U ∪ U^≺ stays round and centred on a transitive relation, maximal sets
/// are up-closed and the search runs over up-closed centred candidates.
std::vector<Subset> maximal_round_centred(const RelStructure &rel);

/// Inputs to the selector search: Δ is a family of finite subsets (given
/// either as a list or as a membership predicate), Γ a finite list of
/// subsets, θ an optional index map with Γ[θ(λ)] ≺ Γ[λ].
struct SelectionProblem {
  std::optional<std::vector<Subset>> delta_list;
  std::function<bool(const Subset &)> delta_pred;
  std::vector<Subset> gamma;
  std::optional<std::vector<std::size_t>> theta;

  bool in_delta(const Subset &d) const;
};

struct SelectionResult {
  /// Round R with every D ⊆ R in Δ and R ∩ F ≠ ∅ for every F in Γ.
  std::optional<Subset> selector;
  /// Checks "succ_closed", "prec_round", "delta_centred" and, when θ is
  /// given, "theta".
  ValidationReport hypotheses;
};

/// Hypothesis checks only.
ValidationReport selection_hypotheses(const RelStructure &rel,
                                      const SelectionProblem &problem);

/// Backtracking over one choice per Γ member (all solutions, lowest subset
/// index kept), then an exhaustive scan of all subsets for carriers of at
/// most 20 elements. Returns no selector only when a hypothesis fails;
/// throws Defect when the hypotheses hold but nothing was found, and
/// InvalidStructure when Δ is not ≻-closed.
SelectionResult selection_solve(const RelStructure &rel,
                                const SelectionProblem &problem);

/// The lowest-index tight T ⊇ R with T ∩ S = ∅ and Q ∪ T not Ĉ P∖T.
/// Throws PreconditionViolation unless rel is an abstract pseudobasis, R is
/// round and Q ∪ R is not Ĉ S. An empty result under valid preconditions
/// is a defect.
std::optional<TightSet> tight_stretch(const RelStructure &rel, const Subset &q,
                                      const Subset &r, const Subset &s);

} // namespace tgpd
