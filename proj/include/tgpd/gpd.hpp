#pragma once

// Finite (discrete) groupoids, bisections, étale families, the tight
// groupoid of a pseudobasic inverse semigroup, and recovery of a groupoid
// from an étale pseudobasis.

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "tgpd/carrier.hpp"
#include "tgpd/invsemi.hpp"
#include "tgpd/report.hpp"

namespace tgpd {

inline constexpr std::size_t kUndefined = std::numeric_limits<std::size_t>::max();

class FiniteGroupoid {
public:
  FiniteGroupoid() = default;
  /// `product[g][h]` is the index of gh or kUndefined. Stored as given;
  /// validate_groupoid reports on the axioms.
  FiniteGroupoid(Carrier elements, std::vector<std::size_t> inv,
                 std::vector<std::vector<std::size_t>> product);

  const Carrier &elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::size_t inverse(std::size_t g) const { return inv_[g]; }
  bool composable(std::size_t g, std::size_t h) const {
    return product_[g][h] != kUndefined;
  }
  std::size_t mul(std::size_t g, std::size_t h) const { return product_[g][h]; }
  const std::vector<std::vector<std::size_t>> &product() const { return product_; }
  /// g⁻¹g and gg⁻¹.
  std::size_t source(std::size_t g) const { return product_[inv_[g]][g]; }
  std::size_t range(std::size_t g) const { return product_[g][inv_[g]]; }
  Subset units() const;

private:
  Carrier elements_;
  std::vector<std::size_t> inv_;
  std::vector<std::vector<std::size_t>> product_;
};

/// "shape", "involution", "inverse_products", "composability",
/// "associative", "ginvg", "units_neutral".
ValidationReport validate_groupoid(const FiniteGroupoid &g);

/// {ab : a ∈ A, b ∈ B, (a,b) composable}
Subset pointwise_product(const FiniteGroupoid &g, const Subset &a, const Subset &b);
Subset pointwise_inverse(const FiniteGroupoid &g, const Subset &a);
/// B⁻¹B ⊆ G⁽⁰⁾ and BB⁻¹ ⊆ G⁽⁰⁾.
bool bisection_check(const FiniteGroupoid &g, const Subset &b);
/// Every bisection, in subset-index order (at most 20 elements).
std::vector<Subset> all_bisections(const FiniteGroupoid &g);

/// "bisections", "cover", "product_closed", "inverse_closed". Products
/// and inverses must land in the family or be ∅.
ValidationReport validate_etale_family(const FiniteGroupoid &g,
                                       const std::vector<Subset> &members);

/// With T_g the distinct members containing g and ≤ = ⊆: T_{g⁻¹} = T_g⁻¹
/// ("functor_inverse") and T_{gh} = (T_g T_h)^≤ ("functor_product") for every
/// composable pair.
ValidationReport functor_check(const FiniteGroupoid &g,
                               const std::vector<Subset> &members);

/// (⋂A)(⋂B) = ⋂{ab} for non-empty subfamilies A, B of the members (all
/// of them for up to 6 members, otherwise those of size ≤ 2).
ValidationReport intersection_preserving(const FiniteGroupoid &g,
                                         const std::vector<Subset> &members);

/// On the discrete space of g: the topology generated by the members and
/// its patch both have open bisections forming an étale family, and the
/// patch is discrete again. Requires a pseudosubbasis.
ValidationReport coherent_etale(const FiniteGroupoid &g,
                                const std::vector<Subset> &members);

struct TightGroupoid {
  OrderedInvSemigroup semigroup;
  /// Non-empty tight subsets of P, as subsets of S; element i of the
  /// groupoid is points[i].
  std::vector<Subset> points;
  FiniteGroupoid groupoid;
  /// s ∈ S^≻ and O_s = {T : s ∈ T}.
  std::vector<std::size_t> family_index;
  std::vector<Subset> family;
  /// Groupoid axioms, étale family, "ss-1", "product" (O_sO_t = O_st for
  /// s ∈ S^≻), "inverse" (O_s⁻¹ = O_s⁻¹) and the functor law.
  ValidationReport report;
};

/// Requires validate_pseudobasic.
TightGroupoid tight_groupoid(const OrderedInvSemigroup &s);

/// Members ∪ {∅} under pointwise operations, ≺ = ⋐ on the discrete space
/// of g. ∅ is labelled "0", other elements by their point sets. Requires
/// an étale family that is a pseudobasis of the discrete space, ∅ ∉ members.
OrderedInvSemigroup bisection_semigroup(const FiniteGroupoid &g,
                                        const std::vector<Subset> &members);

/// Builds bisection_semigroup and its tight groupoid and checks that
/// g ↦ T_g = {O ∈ members : g ∈ O} is an isomorphism onto it.
ValidationReport recover_groupoid(const FiniteGroupoid &g,
                                  const std::vector<Subset> &members);

/// "bijective", "inverse", "composable", "product" for a map g1 → g2.
ValidationReport iso_report(const FiniteGroupoid &g1, const FiniteGroupoid &g2,
                            const std::vector<std::size_t> &map);
bool iso_check(const FiniteGroupoid &g1, const FiniteGroupoid &g2,
               const std::vector<std::size_t> &map);
/// Backtracking search, units assigned first.
std::optional<std::vector<std::size_t>> find_isomorphism(const FiniteGroupoid &g1,
                                                         const FiniteGroupoid &g2);

/// All pairs (i,j) of {1..k}, labelled "(i,j)", with (i,j)(j,l) = (i,l).
FiniteGroupoid pair_groupoid(std::size_t k);
/// k units "u1".."uk".
FiniteGroupoid unit_groupoid(std::size_t k);

/// Units as boxes; every non-unit g as an edge source(g) → range(g).
std::string groupoid_dot(const FiniteGroupoid &g);

} // namespace tgpd
