#pragma once

// The tight spectrum of a finite abstract pseudobasis as a finite space,
// and checkers for how covers of the base are represented by its opens.

#include <string>
#include <vector>

#include "tgpd/fintop.hpp"
#include "tgpd/relcore.hpp"
#include "tgpd/tight.hpp"

namespace tgpd {

struct SpectrumSpace {
  RelStructure base;
  /// Non-empty tight sets in enumeration order; point i is points[i].
  std::vector<Subset> points;
  /// Points are labelled by the formatted tight set.
  FiniteSpace space;
  /// O_p = {T : p ∈ T}, indexed by element.
  std::vector<Subset> O_p;
  /// O^g = {T : {g} C P∖T}, indexed by element.
  std::vector<Subset> O_up;
};

/// Requires a pseudobasis. The topology is generated by the O_p and O^g.
SpectrumSpace build_spectrum(const RelStructure &rel);

/// O_F^G = {T : F ⊆ T and G C P∖T}, computed from the definition.
Subset basic_open(const SpectrumSpace &sp, const Subset &f, const Subset &g);
/// ⋂_{f∈F} O_f ∩ ⋂_{g∈G} O^g.
Subset basic_open_factored(const SpectrumSpace &sp, const Subset &f,
                           const Subset &g);
/// {T : Q C P∖T} for arbitrary Q.
Subset upper_open(const SpectrumSpace &sp, const Subset &q);
/// ⋃{O_q : q ∈ Q}.
Subset union_of_point_opens(const SpectrumSpace &sp, const Subset &q);

/// [O_F^G = ∅] ⇔ [∀H (G C H ⇒ F̂ C H)], H ranging over every subset.
bool check_empty_characterization(const SpectrumSpace &sp, const Subset &f,
                                  const Subset &g);

/// Every representation statement, quantified over all subsets when the
/// base has at most 6 elements and over subsets of size ≤ 2 otherwise.
ValidationReport representation_suite(const SpectrumSpace &sp);

/// The family (O_p) over the spectrum; validated by is_pseudobasis.
ConcretePseudobasis concrete_pseudobasis_of_spectrum(const SpectrumSpace &sp);

/// Round trip base → spectrum → (O_p, ⋐) → abstract. p ↦ O_p must carry C
/// on singletons to the recovered relation and be onto; it identifies p, q
/// exactly when p C q C p. For separative bases this recovers (P, ≺).
ValidationReport abstract_roundtrip(const RelStructure &rel);

/// x ↦ T_x = {O ∈ P : x ∈ O} from a pseudobasis P (∅ ∉ P) of a Hausdorff
/// finite space onto the spectrum of (P, ⋐): checks that every T_x is a
/// point, that the map is a bijection and a homeomorphism, plus the cover
/// representation checks.
ValidationReport verify_topology_recovery(const FiniteSpace &space,
                                          const std::vector<Subset> &members);

/// Graphviz: one ellipse per point, one box per element p with edges to
/// the points of O_p.
std::string spectrum_dot(const SpectrumSpace &sp);

} // namespace tgpd
