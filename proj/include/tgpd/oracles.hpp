#pragma once

// Direct-definition brute force for every relation the library computes
// through a finite reduction. Nothing here calls into relcore/tight beyond
// reading the matrix; quantifiers range over all subsets literally.
//
// Subsets are plain bit masks, so carriers are limited to 16 elements.
// Dense and compact covers are memoised per (Q, R) on carriers of at most
// 8 elements; a Brute is therefore not safe to share between threads.

#include <cstdint>
#include <vector>

#include "tgpd/relcore.hpp"

namespace tgpd::oracle {

using Mask = std::uint32_t;

class Brute {
public:
  static constexpr std::size_t kMaxSize = 16;

  explicit Brute(const RelStructure &rel);

  std::size_t size() const { return n_; }
  Mask full() const { return full_; }
  bool prec(std::size_t i, std::size_t j) const { return m_[i][j]; }

  static Mask mask(const Subset &s) { return static_cast<Mask>(s.to_bits()); }
  Subset subset(Mask m) const { return Subset::from_bits(n_, m); }

  Mask up(Mask q) const;
  Mask down(Mask q) const;
  bool prec_sets(Mask q, Mask r) const;
  /// ∀a (a ≺ some q ⇒ ∃b ≺ a with b ≺ some r)
  bool dense(Mask q, Mask r);
  /// ∃F ⊆ P with F ≺ R and Q D F
  bool compact(Mask q, Mask r);
  /// {p : p ≺ f for every f ∈ F}
  Mask meet(Mask f) const;
  bool disjoint(Mask q, Mask r) const;
  /// {p : Q ⊥ {p}}
  Mask perp(Mask q) const;
  /// Every F ⊆ Q has a non-empty meet.
  bool centred(Mask q) const;
  bool round(Mask r) const;
  /// ∃F ⊆ Q with meet(F) related to R.
  bool hatted(CoverKind kind, Mask q, Mask r);

  bool tight(Mask t);
  /// u ∈ U ⇔ ∃w ≺ u ∃F ⊆ U with meet(F) ≺ {w}
  bool frink(Mask u) const;
  /// ∀p: p ∈ T ⇔ ∃F ⊆ T ∃G ≺ P∖T with (meet(F) ∩ G^⊥) C {p}
  bool tight_elementwise(Mask t);
  /// ∀H: H ∩ T ≠ ∅ ⇔ ∃F ⊆ T ∃G ≺ P∖T with (meet(F) ∩ G^⊥) C H
  bool tight_setwise(Mask t);

  /// Every subset passing tight(), ascending.
  std::vector<Mask> tight_sets();
  /// Round centred subsets with no round centred proper superset, ascending.
  std::vector<Mask> maximal_round_centred() const;

private:
  bool witness_covers(Mask t, Mask h);

  std::size_t n_ = 0;
  Mask full_ = 0;
  std::vector<std::vector<bool>> m_;
  // 0 unknown, 1 false, 2 true
  std::vector<std::uint8_t> dense_memo_, compact_memo_;
  std::vector<Mask> meet_tab_, perp_tab_;

  Mask meet_direct(Mask f) const;
  Mask perp_direct(Mask q) const;
};

} // namespace tgpd::oracle
