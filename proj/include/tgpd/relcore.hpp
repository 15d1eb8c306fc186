#pragma once

// Relational calculus on a finite carrier with a binary relation ≺:
// images, the subset extension of ≺, dense and compact covers, disjointness,
// formal meets, centred and round subsets, and pseudobasis validation.
//
// Throughout, "q ≺ Q" for an element q and subset Q means q lies below some
// member of Q, i.e. q ∈ Q^≻.

#include <cstddef>
#include <utility>
#include <vector>

#include "tgpd/carrier.hpp"
#include "tgpd/report.hpp"
#include "tgpd/subset.hpp"

namespace tgpd {

/// A finite carrier with a binary relation. No reflexivity or transitivity
/// is assumed; validators report on those.
class RelStructure {
public:
  RelStructure() = default;
  RelStructure(Carrier carrier,
               const std::vector<std::pair<std::size_t, std::size_t>> &pairs);
  /// matrix[i][j] == true iff i ≺ j.
  static RelStructure from_matrix(Carrier carrier,
                                  const std::vector<std::vector<bool>> &matrix);

  const Carrier &carrier() const { return carrier_; }
  std::size_t size() const { return carrier_.size(); }

  bool prec(std::size_t i, std::size_t j) const { return above_[i].test(j); }
  /// {j : i ≺ j}
  const Subset &above(std::size_t i) const { return above_[i]; }
  /// {j : j ≺ i}
  const Subset &below(std::size_t i) const { return below_[i]; }

  Subset empty_set() const { return Subset(size()); }
  Subset full_set() const { return Subset::full(size()); }

  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  /// The same carrier with every pair reversed.
  RelStructure transposed() const;
  /// Restriction of the relation to `keep`, relabelled in index order.
  RelStructure restricted(const Subset &keep) const;

  bool operator==(const RelStructure &o) const {
    return carrier_ == o.carrier_ && above_ == o.above_;
  }

private:
  Carrier carrier_;
  std::vector<Subset> above_;
  std::vector<Subset> below_;
};

/// Q^≺ = {p : ∃q∈Q, q ≺ p}
Subset up_image(const RelStructure &rel, const Subset &q);
/// Q^≻ = {p : ∃q∈Q, p ≺ q}
Subset down_image(const RelStructure &rel, const Subset &q);

/// Q ≺ R, i.e. Q ⊆ R^≻.
bool subset_prec(const RelStructure &rel, const Subset &q, const Subset &r);

/// Q D R: every p ≺ Q has some r ≺ R with r ≺ p.
bool dense_cover(const RelStructure &rel, const Subset &q, const Subset &r);

/// Q C R: Q D F ≺ R for some F. Since D is monotone in its second argument
/// and every F ≺ R is contained in R^≻, the witness F = R^≻ is optimal.
bool compact_cover(const RelStructure &rel, const Subset &q, const Subset &r);

/// Q ⊥ R: Q^≻ ∩ R^≻ = ∅.
bool disjoint(const RelStructure &rel, const Subset &q, const Subset &r);
/// Q^⊥ = {p : Q ⊥ {p}}
Subset perp_set(const RelStructure &rel, const Subset &q);

/// ⋂_{f∈F} f^≻, and the full carrier for F = ∅.
Subset formal_meet(const RelStructure &rel, const Subset &f);

/// Every finite subset has non-empty formal meet. By antitonicity of the
/// meet it suffices to test Q itself.
bool centred(const RelStructure &rel, const Subset &q);

enum class CoverKind { Dense, Compact, Prec, Perp };

/// Centred version of a relation: Q ⊏̂ R iff F̂ ⊏ R for some finite F ⊆ Q.
/// All four relations are antitone in their first argument and F̂ ⊇ Q̂, so
/// F = Q is the optimal witness.
bool hatted_cover(const RelStructure &rel, CoverKind kind, const Subset &q,
                  const Subset &r);

/// Every member has a ≺-predecessor inside R.
bool is_round(const RelStructure &rel, const Subset &r);

bool is_transitive(const RelStructure &rel);
bool is_reflexive(const RelStructure &rel);

/// Checks "round" (the full carrier is round), "transitive" and "shrinking"
/// (p ≺ q ⇒ {p} C q^≻). Witnesses: round → (p); transitive → (p, q, r) with
/// p≺q≺r but not p≺r; shrinking → (p, q).
ValidationReport validate_pseudobasis(const RelStructure &rel);

/// Single check "separative": ≺ coincides with C on singletons. Witness
/// (p, q) with p ⊀ q but {p} C {q}. Throws PreconditionViolation unless rel
/// is an abstract pseudobasis.
ValidationReport is_separative(const RelStructure &rel);

/// Throws PreconditionViolation naming the first failed check.
void require_pseudobasis(const RelStructure &rel, const char *what);

} // namespace tgpd
