#pragma once

// Finite inverse semigroups given by Cayley tables, their canonical order,
// cosets, and ordered (≺ ⊆ ≤) structure.

#include <cstddef>
#include <optional>
#include <vector>

#include "tgpd/carrier.hpp"
#include "tgpd/relcore.hpp"
#include "tgpd/report.hpp"
#include "tgpd/rng.hpp"

namespace tgpd {

using Table = std::vector<std::vector<std::size_t>>;

/// Checks "table_shape", "associative", "inverses" (existence and
/// uniqueness of generalised inverses, or agreement with a supplied map),
/// "idempotents_commute" and, as an advisory line, "zero".
ValidationReport validate_inverse_semigroup(
    const Carrier &elements, const Table &table,
    const std::optional<std::vector<std::size_t>> &inv = std::nullopt);

class InvSemigroup {
public:
  InvSemigroup() = default;
  /// Throws InvalidStructure with the first failing check. The inverse map
  /// is computed when not supplied; the zero is detected.
  InvSemigroup(Carrier elements, Table table,
               std::optional<std::vector<std::size_t>> inv = std::nullopt);

  const Carrier &elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inv_[a]; }
  const Table &table() const { return table_; }
  const std::optional<std::size_t> &zero() const { return zero_; }
  bool is_idempotent(std::size_t a) const { return table_[a][a] == a; }
  Subset idempotents() const;

  bool leq(std::size_t s, std::size_t t) const { return leq_[s].test(t); }
  /// {t : s ≤ t}
  const Subset &above(std::size_t s) const { return leq_[s]; }

  /// Sub-semigroup on a product- and inverse-closed subset, relabelled in
  /// index order.
  InvSemigroup restricted(const Subset &keep) const;

private:
  Carrier elements_;
  Table table_;
  std::vector<std::size_t> inv_;
  std::optional<std::size_t> zero_;
  std::vector<Subset> leq_;
};

/// s ≤ t iff s⁻¹s = s⁻¹t.
RelStructure canonical_order(const InvSemigroup &s);
/// The defining identity against ss⁻¹ = ts⁻¹ ("ss-1_form") and against
/// s ∈ Et ∩ tE ("Et_form").
ValidationReport canonical_order_agreement(const InvSemigroup &s);

Subset set_product(const InvSemigroup &s, const Subset &a, const Subset &b);
Subset set_inverse(const InvSemigroup &s, const Subset &a);
/// A^≤ = {t : a ≤ t for some a ∈ A}.
Subset up_closure(const InvSemigroup &s, const Subset &a);
/// A^≥ = {t : t ≤ a for some a ∈ A}.
Subset down_closure(const InvSemigroup &s, const Subset &a);
/// {s · t : t ∈ A} and {t · s : t ∈ A}.
Subset left_translate(const InvSemigroup &s, std::size_t x, const Subset &a);
Subset right_translate(const InvSemigroup &s, const Subset &a, std::size_t x);

struct Coset {
  Subset members;
  bool operator==(const Coset &o) const { return members == o.members; }
};

/// CC⁻¹C = C^≤ = C.
bool is_coset(const InvSemigroup &s, const Subset &c);
/// C^≤; requires CC⁻¹C ⊆ C^≤.
Coset coset_closure(const InvSemigroup &s, const Subset &c);
/// (CD)^≤ when (C⁻¹C)^≤ = (DD⁻¹)^≤, otherwise nullopt.
std::optional<Coset> coset_product(const InvSemigroup &s, const Coset &c,
                                   const Coset &d);

class OrderedInvSemigroup {
public:
  OrderedInvSemigroup() = default;
  /// ≺ defaults to the canonical order.
  explicit OrderedInvSemigroup(InvSemigroup base);
  OrderedInvSemigroup(InvSemigroup base, RelStructure prec);

  const InvSemigroup &base() const { return base_; }
  const RelStructure &prec() const { return prec_; }

  /// P = S∖{0} with ≺ restricted (all of S when there is no zero).
  const RelStructure &P() const { return p_; }
  /// Element indices of P inside S.
  const std::vector<std::size_t> &p_elements() const { return p_elems_; }
  /// Drops 0 and re-indexes into P.
  Subset to_P(const Subset &a) const;
  /// Re-indexes a subset of P into S.
  Subset from_P(const Subset &a) const;

private:
  InvSemigroup base_;
  RelStructure prec_;
  RelStructure p_;
  std::vector<std::size_t> p_elems_;
};

/// "prec_in_order", "left_auxiliary", "transitive", "multiplicative",
/// "invertive", "ac<bc" (s ∈ S^≻) and advisory "ac<bc_arbitrary".
ValidationReport validate_ordered(const OrderedInvSemigroup &s);
/// validate_ordered plus "has_zero" and the pseudobasis checks on P
/// (prefixed "P.").
ValidationReport validate_pseudobasic(const OrderedInvSemigroup &s);

/// Covers and disjointness on subsets of S, ignoring 0.
bool semigroup_dense(const OrderedInvSemigroup &s, const Subset &q, const Subset &r);
bool semigroup_compact(const OrderedInvSemigroup &s, const Subset &q, const Subset &r);
bool semigroup_disjoint(const OrderedInvSemigroup &s, const Subset &q, const Subset &r);

/// Laws of ordered inverse semigroups that the battery evaluates on
/// pseudobasic instances: "T-1U" (|S| ≤ 7), "frink_coset", "QperpR0",
/// "QDR0", "QRDQ'R'", "QRCQ'R'", "TsTight", "idempotent_cosets".
ValidationReport semigroup_laws(const OrderedInvSemigroup &s);

// Generators.

/// The Cayley table of (x, y) ↦ meet under a partial order given as ≤
/// pairs (reflexivity is added). Throws InvalidStructure if some pair has
/// no meet.
InvSemigroup meet_semilattice(Carrier elements,
                              const std::vector<std::pair<std::size_t, std::size_t>> &leq);
/// Subsets of an n-set under ∩; labels list the atoms ("0" for ∅).
InvSemigroup boolean_semilattice(std::size_t n);
/// {0, x, y, t} with x ∧ y = 0.
InvSemigroup semilattice_e5();
/// Partial bijections of {1..n}, n ≤ 3, composed as (st)(x) = s(t(x)).
/// Labels list images ("-" where undefined); idempotents come first.
InvSemigroup symmetric_inverse_monoid(std::size_t n);
/// Closure of {0} ∪ gens under products and inverses, restricted.
InvSemigroup generated_subsemigroup(const InvSemigroup &s, const Subset &gens);
/// A random sub-semigroup of I_n containing the empty map.
InvSemigroup random_inverse_subsemigroup(Rng &rng, std::size_t n);

} // namespace tgpd
