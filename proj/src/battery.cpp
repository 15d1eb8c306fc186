#include "tgpd/battery.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>

#include "tgpd/gpd.hpp"
#include "tgpd/oracles.hpp"
#include "tgpd/rng.hpp"
#include "tgpd/spectrum.hpp"
#include "tgpd/tight.hpp"

namespace tgpd {

namespace {

using oracle::Brute;
using oracle::Mask;

// Quantifier budgets: tuples of subsets are enumerated when there are at
// most this many, otherwise sampled with a seeded stream.
constexpr std::size_t kTupleBudget = 4096;
constexpr std::size_t kCentredDenseExhaustive = 5;
constexpr std::size_t kSetwiseBruteMax = 5;
// Relation groups quantify over pairs of subsets; larger relations (e.g.
// (members, ⋐) of a rich pseudobasis) are skipped with an advisory line.
constexpr std::size_t kRelationGroupMax = 8;

// First failure per check; counts are not needed, the battery tallies by
// group.
struct Outcome {
  bool ok = true;
  Witness w;
  void fail(Witness x) {
    if (ok) {
      ok = false;
      w = std::move(x);
    }
  }
};

Witness wit(std::initializer_list<WitnessItem> items, std::string note = {}) {
  return Witness{std::vector<WitnessItem>(items), std::move(note)};
}

Subset sub(std::size_t n, Mask m) { return Subset::from_bits(n, m); }

// Calls f on k-tuples of subsets of an n-set: every tuple when there are at
// most `budget`, otherwise `budget` random ones.
void for_tuples(std::size_t n, std::size_t k, std::size_t budget, Rng &rng,
                const std::function<void(const std::vector<Mask> &)> &f) {
  const std::size_t bits = n * k;
  std::vector<Mask> t(k);
  const Mask full = (Mask{1} << n) - 1;
  if (bits < 32 && (std::size_t{1} << bits) <= budget) {
    const std::size_t total = std::size_t{1} << bits;
    for (std::size_t code = 0; code < total; ++code) {
      for (std::size_t i = 0; i < k; ++i) {
        t[i] = static_cast<Mask>((code >> (i * n)) & full);
      }
      f(t);
    }
    return;
  }
  for (std::size_t s = 0; s < budget; ++s) {
    for (std::size_t i = 0; i < k; ++i) {
      t[i] = static_cast<Mask>(rng.next() & full);
    }
    f(t);
  }
}

using CheckFn = std::function<void(const Instance &, ValidationReport &)>;

struct Group {
  std::string name;
  std::vector<InstanceKind> kinds;
  CheckFn run;
};

const std::vector<InstanceKind> kRelKinds = {
    InstanceKind::Poset, InstanceKind::RoundTransitive, InstanceKind::MeetSemilattice,
    InstanceKind::InverseSemigroup, InstanceKind::DiscretePseudobasis};
const std::vector<InstanceKind> kSemigroupKinds = {InstanceKind::MeetSemilattice,
                                                   InstanceKind::InverseSemigroup};
const std::vector<InstanceKind> kTopologyKinds = {InstanceKind::DiscretePseudobasis};

// The relation the relational groups operate on: the instance itself, P of
// a semigroup, or (members, ⋐) of a concrete pseudobasis.
std::optional<RelStructure> relation_of(const Instance &inst) {
  if (inst.rel) {
    return inst.rel;
  }
  if (inst.semigroup) {
    if (inst.semigroup->p_elements().empty()) {
      return std::nullopt;
    }
    return inst.semigroup->P();
  }
  if (inst.space) {
    return abstract_of_concrete(*inst.space, inst.members);
  }
  return std::nullopt;
}

Rng check_rng(const Instance &inst, const std::string &group) {
  return Rng(inst.seed ^ std::hash<std::string>{}(group) ^
             std::hash<std::string>{}(inst.name));
}

// Largest round subset of x.
Subset round_core(const RelStructure &rel, Subset x) {
  while (true) {
    Subset keep = x & up_image(rel, x);
    if (keep == x) {
      return x;
    }
    x = keep;
  }
}

// ---------------------------------------------------------------- relation

void g_pseudobasis(const RelStructure &rel, ValidationReport &r) {
  const auto v = validate_pseudobasis(rel);
  r.merge(v, "pseudobasis.");
  // Finite auto-shrinking: round and transitive force shrinking.
  const bool rt = v.passed("round") && v.passed("transitive");
  r.record("pseudobasis.auto_shrinking", !rt || v.passed("shrinking"),
           v.find("shrinking") && v.find("shrinking")->witness
               ? *v.find("shrinking")->witness
               : Witness{});
}

void g_oracle_cover(const RelStructure &rel, ValidationReport &r) {
  Brute b(rel);
  const std::size_t n = rel.size();
  const Mask full = b.full();
  Outcome compact, hat[4];
  const CoverKind kinds[4] = {CoverKind::Dense, CoverKind::Compact, CoverKind::Prec,
                              CoverKind::Perp};
  for (Mask q = 0;; ++q) {
    for (Mask rr = 0;; ++rr) {
      const Subset Q = sub(n, q), R = sub(n, rr);
      if (compact_cover(rel, Q, R) != b.compact(q, rr)) {
        compact.fail(wit({Q, R}));
      }
      for (int k = 0; k < 4; ++k) {
        if (hatted_cover(rel, kinds[k], Q, R) != b.hatted(kinds[k], q, rr)) {
          hat[k].fail(wit({Q, R}));
        }
      }
      if (rr == full) {
        break;
      }
    }
    if (q == full) {
      break;
    }
  }
  r.record("oracle.compact", compact.ok, compact.w);
  r.record("oracle.hatted_D", hat[0].ok, hat[0].w);
  r.record("oracle.hatted_C", hat[1].ok, hat[1].w);
  r.record("oracle.hatted_prec", hat[2].ok, hat[2].w);
  r.record("oracle.hatted_perp", hat[3].ok, hat[3].w);
}

void g_oracle_relcore(const RelStructure &rel, ValidationReport &r) {
  Brute b(rel);
  const std::size_t n = rel.size();
  const Mask full = b.full();
  Outcome images, prec, dense, disj, meet, cent, round, perp;
  for (Mask q = 0;; ++q) {
    const Subset Q = sub(n, q);
    if (Brute::mask(up_image(rel, Q)) != b.up(q) ||
        Brute::mask(down_image(rel, Q)) != b.down(q)) {
      images.fail(wit({Q}));
    }
    if (Brute::mask(formal_meet(rel, Q)) != b.meet(q)) {
      meet.fail(wit({Q}));
    }
    if (centred(rel, Q) != b.centred(q)) {
      cent.fail(wit({Q}));
    }
    if (is_round(rel, Q) != b.round(q)) {
      round.fail(wit({Q}));
    }
    if (Brute::mask(perp_set(rel, Q)) != b.perp(q)) {
      perp.fail(wit({Q}));
    }
    for (Mask rr = 0;; ++rr) {
      const Subset R = sub(n, rr);
      if (subset_prec(rel, Q, R) != b.prec_sets(q, rr)) {
        prec.fail(wit({Q, R}));
      }
      if (dense_cover(rel, Q, R) != b.dense(q, rr)) {
        dense.fail(wit({Q, R}));
      }
      if (disjoint(rel, Q, R) != b.disjoint(q, rr)) {
        disj.fail(wit({Q, R}));
      }
      if (rr == full) {
        break;
      }
    }
    if (q == full) {
      break;
    }
  }
  r.record("oracle.images", images.ok, images.w);
  r.record("oracle.subset_prec", prec.ok, prec.w);
  r.record("oracle.dense", dense.ok, dense.w);
  r.record("oracle.disjoint", disj.ok, disj.w);
  r.record("oracle.perp_set", perp.ok, perp.w);
  r.record("oracle.formal_meet", meet.ok, meet.w);
  r.record("oracle.centred", cent.ok, cent.w);
  r.record("oracle.round", round.ok, round.w);
}

void g_oracle_tight(const RelStructure &rel, ValidationReport &r) {
  Brute b(rel);
  const std::size_t n = rel.size();
  const Mask full = b.full();
  Outcome tight, frink;
  for (Mask t = 0;; ++t) {
    const Subset T = sub(n, t);
    if (is_tight(rel, T) != b.tight(t)) {
      tight.fail(wit({T}));
    }
    if (is_frink_filter(rel, T) != b.frink(t)) {
      frink.fail(wit({T}));
    }
    if (t == full) {
      break;
    }
  }
  r.record("oracle.is_tight", tight.ok, tight.w);
  r.record("oracle.frink", frink.ok, frink.w);

  std::vector<Mask> got;
  for (const auto &t : enumerate_tight(rel)) {
    got.push_back(Brute::mask(t.members()));
  }
  const auto want = b.tight_sets();
  Outcome en;
  if (got != want) {
    std::size_t k = 0;
    while (k < got.size() && k < want.size() && got[k] == want[k]) {
      ++k;
    }
    en.fail(wit({sub(n, k < want.size() ? want[k] : got[k])},
                "first disagreement with the brute-force filter"));
  }
  r.record("oracle.enumerate_tight", en.ok, en.w);

  std::vector<Mask> mrc;
  for (const auto &u : maximal_round_centred(rel)) {
    mrc.push_back(Brute::mask(u));
  }
  Outcome m;
  if (mrc != b.maximal_round_centred()) {
    m.fail(wit({}, "maximal round centred sets differ from the brute-force list"));
  }
  r.record("oracle.maximal_round_centred", m.ok, m.w);
}

void g_dc_properties(const Instance &inst, const RelStructure &rel,
                     ValidationReport &r) {
  const std::size_t n = rel.size();
  Rng rng = check_rng(inst, "DCproperties");
  Outcome dtrans, ctrans, dcc, cd, dimage;
  for_tuples(n, 3, kTupleBudget, rng, [&](const std::vector<Mask> &t) {
    const Subset Q = sub(n, t[0]), S = sub(n, t[1]), R = sub(n, t[2]);
    const bool qs = dense_cover(rel, Q, S);
    if (qs && dense_cover(rel, S, R) && !dense_cover(rel, Q, R)) {
      dtrans.fail(wit({Q, S, R}));
    }
    const bool qsc = compact_cover(rel, Q, S);
    if (qsc && compact_cover(rel, S, R) && !compact_cover(rel, Q, R)) {
      ctrans.fail(wit({Q, S, R}));
    }
    const bool qr_c = compact_cover(rel, Q, R);
    if (qs && compact_cover(rel, S, R) && !qr_c) {
      dcc.fail(wit({Q, S, R}));
    }
    const bool qr_d = dense_cover(rel, Q, R);
    if (qr_c && !qr_d) {
      cd.fail(wit({Q, R}));
    }
    if (qr_d != dense_cover(rel, Q, down_image(rel, R))) {
      dimage.fail(wit({Q, R}));
    }
  });
  r.record("DCproperties.D_transitive", dtrans.ok, dtrans.w);
  r.record("DCproperties.C_transitive", ctrans.ok, ctrans.w);
  r.record("DCproperties.DC_implies_C", dcc.ok, dcc.w);
  r.record("DCproperties.C_implies_D", cd.ok, cd.w);
  r.record("DCproperties.D_down_image", dimage.ok, dimage.w);

  Outcome dcap, dcup, ccup;
  for_tuples(n, 4, kTupleBudget, rng, [&](const std::vector<Mask> &t) {
    const Subset Q = sub(n, t[0]), Q2 = sub(n, t[1]), R = sub(n, t[2]),
                 R2 = sub(n, t[3]);
    if (dense_cover(rel, Q, Q2) && dense_cover(rel, R, R2)) {
      if (!dense_cover(rel, down_image(rel, Q) & down_image(rel, R),
                       down_image(rel, Q2) & down_image(rel, R2))) {
        dcap.fail(wit({Q, Q2, R, R2}));
      }
      if (!dense_cover(rel, Q | R, Q2 | R2)) {
        dcup.fail(wit({Q, Q2, R, R2}));
      }
    }
    if (compact_cover(rel, Q, Q2) && compact_cover(rel, R, R2) &&
        !compact_cover(rel, Q | R, Q2 | R2)) {
      ccup.fail(wit({Q, Q2, R, R2}));
    }
  });
  r.record("DCproperties.Dcap", dcap.ok, dcap.w);
  r.record("DCproperties.Dcup", dcup.ok, dcup.w);
  r.record("DCproperties.Ccup", ccup.ok, ccup.w);
}

void g_round_laws(const RelStructure &rel, ValidationReport &r) {
  const std::size_t n = rel.size();
  const Subset none(n);
  Outcome pmin, dmin, cmin, qsubr, fprec;
  for (const auto &Q : all_subsets(n)) {
    if (subset_prec(rel, Q, none) != Q.empty()) {
      pmin.fail(wit({Q}));
    }
    if (dense_cover(rel, Q, none) != Q.empty()) {
      dmin.fail(wit({Q}));
    }
    if (compact_cover(rel, Q, none) != Q.empty()) {
      cmin.fail(wit({Q}));
    }
    for (const auto &R : all_subsets(n)) {
      if (Q.subset_of(R) && !dense_cover(rel, Q, R)) {
        qsubr.fail(wit({Q, R}));
      }
      if (subset_prec(rel, Q, R) && !compact_cover(rel, Q, R)) {
        fprec.fail(wit({Q, R}));
      }
    }
  }
  r.record("round_laws.precMin", pmin.ok, pmin.w);
  r.record("round_laws.DMin", dmin.ok, dmin.w);
  r.record("round_laws.CMin", cmin.ok, cmin.w);
  r.record("round_laws.QsubR", qsubr.ok, qsubr.w);
  r.record("round_laws.FprecQ", fprec.ok, fprec.w);
}

void g_auxiliarity(const Instance &inst, const RelStructure &rel, ValidationReport &r) {
  const std::size_t n = rel.size();
  Rng rng = check_rng(inst, "auxiliarity");
  Outcome daux, caux, perp;
  for_tuples(n, 4, kTupleBudget, rng, [&](const std::vector<Mask> &t) {
    // Q ⊆ Q', R' ⊆ R built from the four masks.
    const Subset Q2 = sub(n, t[0] | t[1]), Q = sub(n, t[0]);
    const Subset R2 = sub(n, t[2]), R = sub(n, t[2] | t[3]);
    if (dense_cover(rel, Q2, R2) && !dense_cover(rel, Q, R)) {
      daux.fail(wit({Q, Q2, R2, R}));
    }
    if (compact_cover(rel, Q2, R2) && !compact_cover(rel, Q, R)) {
      caux.fail(wit({Q, Q2, R2, R}));
    }
    // ⊥-auxiliarity on independent draws.
    const Subset A = sub(n, t[0]), B = sub(n, t[1]), C = sub(n, t[2]);
    if (dense_cover(rel, A, B) && disjoint(rel, B, C) && !disjoint(rel, A, C)) {
      perp.fail(wit({A, B, C}));
    }
  });
  r.record("auxiliarity.Daux", daux.ok, daux.w);
  r.record("auxiliarity.Caux", caux.ok, caux.w);
  r.record("auxiliarity.perp", perp.ok, perp.w);
}

void g_centred_dense(const Instance &inst, const RelStructure &rel,
                     ValidationReport &r) {
  const std::size_t n = rel.size();
  Rng rng = check_rng(inst, "CentredDense");
  const std::size_t budget =
      n <= kCentredDenseExhaustive ? (std::size_t{1} << (3 * n)) : 8192;
  Outcome lemma, cor;
  for_tuples(n, 3, budget, rng, [&](const std::vector<Mask> &t) {
    const Subset Q = sub(n, t[0]), F = sub(n, t[1]), R = sub(n, t[2]);
    const bool qdf = hatted_cover(rel, CoverKind::Dense, Q, F);
    if (!qdf) {
      return;
    }
    if (!hatted_cover(rel, CoverKind::Compact, Q, R)) {
      bool found = false;
      F.for_each([&](std::size_t f) {
        Subset qf = Q;
        qf.set(f);
        found = found || !hatted_cover(rel, CoverKind::Compact, qf, R);
      });
      if (!found) {
        lemma.fail(wit({Q, F, R}));
      }
    }
    if (F.any() && centred(rel, Q)) {
      bool found = false;
      F.for_each([&](std::size_t f) {
        Subset qf = Q;
        qf.set(f);
        found = found || centred(rel, qf);
      });
      if (!found) {
        cor.fail(wit({Q, F}));
      }
    }
  });
  r.record("CentredDense.lemma", lemma.ok, lemma.w);
  r.record("CentredDense.corollary", cor.ok, cor.w);
}

void g_tight_chars(const RelStructure &rel, ValidationReport &r) {
  Brute b(rel);
  const std::size_t n = rel.size();
  Outcome elem, setw, belem, bset, frink;
  for (const auto &T : all_subsets(n)) {
    const bool t = is_tight(rel, T);
    if (t && !is_frink_filter(rel, T)) {
      frink.fail(wit({T}));
    }
    if (T.is_full()) {
      continue;
    }
    if (satisfies_tight_elementwise(rel, T) != t) {
      elem.fail(wit({T}));
    }
    if (satisfies_tight_setwise(rel, T) != t) {
      setw.fail(wit({T}));
    }
    if (b.tight_elementwise(Brute::mask(T)) != t) {
      belem.fail(wit({T}));
    }
    if (n <= kSetwiseBruteMax && b.tight_setwise(Brute::mask(T)) != t) {
      bset.fail(wit({T}));
    }
  }
  r.record("tightChars.elementwise", elem.ok, elem.w);
  r.record("tightChars.setwise", setw.ok, setw.w);
  r.record("tightChars.elementwise_brute", belem.ok, belem.w);
  r.record("tightChars.setwise_brute", bset.ok, bset.w);
  r.record("tightChars.tight_is_frink", frink.ok, frink.w);

  const Subset P = rel.full_set();
  const bool ptight = is_tight(rel, P);
  r.record("S0tight.full", ptight == centred(rel, P), wit({P}));
  if (ptight) {
    const auto all = enumerate_tight(rel);
    r.record("S0tight.full_unique", all.size() == 1 && all[0].members() == P,
             wit({}, "full carrier tight but other tight sets exist"));
  }
  r.record("S0tight.empty", is_tight(rel, rel.empty_set()) == !compact_cover(rel, P, P));
}

void g_maximal(const RelStructure &rel, ValidationReport &r) {
  const std::size_t n = rel.size();
  const auto maxes = maximal_round_centred(rel);
  Outcome tight, exists, ultra_e, ultra_f, tight_f;
  for (const auto &U : maxes) {
    if (!is_tight(rel, U)) {
      tight.fail(wit({U}));
    }
  }
  for (const auto &U : all_subsets(n)) {
    if (!is_round(rel, U) || !centred(rel, U)) {
      continue;
    }
    const bool maximal = std::find(maxes.begin(), maxes.end(), U) != maxes.end();
    bool contained = false;
    for (const auto &M : maxes) {
      contained = contained || U.subset_of(M);
    }
    if (!contained) {
      exists.fail(wit({U}));
    }
    const Subset below_out = down_image(rel, ~U);
    bool every_a = true;
    below_out.for_each([&](std::size_t a) {
      every_a = every_a &&
                hatted_cover(rel, CoverKind::Perp, U, Subset::singleton(n, a));
    });
    bool every_g_perp = true, no_g_dense = true;
    for_each_subset_of(below_out, [&](const Subset &G) {
      every_g_perp = every_g_perp && hatted_cover(rel, CoverKind::Perp, U, G);
      no_g_dense = no_g_dense && !hatted_cover(rel, CoverKind::Dense, U, G);
      return true;
    });
    if (maximal != every_a) {
      ultra_e.fail(wit({U}));
    }
    if (maximal != every_g_perp) {
      ultra_f.fail(wit({U}));
    }
    if (is_tight(rel, U) != no_g_dense) {
      tight_f.fail(wit({U}));
    }
  }
  r.record("maximal.tight", tight.ok, tight.w);
  r.record("maximal.exists", exists.ok, exists.w);
  r.record("maximal.UltraExists", ultra_e.ok, ultra_e.w);
  r.record("maximal.UltraForall", ultra_f.ok, ultra_f.w);
  r.record("maximal.TightForall", tight_f.ok, tight_f.w);
}

void g_stretch(const Instance &inst, const RelStructure &rel, ValidationReport &r) {
  const std::size_t n = rel.size();
  Rng rng = check_rng(inst, "stretch");
  const Mask full = (Mask{1} << n) - 1;
  Brute b(rel);
  const auto tights = b.tight_sets();
  Outcome total, valid, lowest;
  std::size_t ran = 0;
  for (int attempt = 0; attempt < 24 && ran < 6; ++attempt) {
    const Subset Q = sub(n, static_cast<Mask>(rng.next() & full) & static_cast<Mask>(rng.next()));
    const Subset R = round_core(rel, sub(n, static_cast<Mask>(rng.next() & full)));
    const Subset S = sub(n, static_cast<Mask>(rng.next() & full) & static_cast<Mask>(rng.next()));
    if (hatted_cover(rel, CoverKind::Compact, Q | R, S)) {
      continue;
    }
    ++ran;
    const auto T = tight_stretch(rel, Q, R, S);
    if (!T) {
      total.fail(wit({Q, R, S}));
      continue;
    }
    const Subset &t = T->members();
    if (!R.subset_of(t) || t.intersects(S) || !is_tight(rel, t) ||
        hatted_cover(rel, CoverKind::Compact, Q | t, ~t)) {
      valid.fail(wit({Q, R, S, t}));
    }
    // Lowest-index tie break, against the brute-force tight list.
    for (Mask m : tights) {
      const Subset c = sub(n, m);
      if (R.subset_of(c) && !c.intersects(S) &&
          !b.hatted(CoverKind::Compact, Brute::mask(Q | c), Brute::mask(~c))) {
        if (c != t) {
          lowest.fail(wit({Q, R, S, c}, "lower-index tight extension exists"));
        }
        break;
      }
    }
  }
  r.record("stretch.total", total.ok, total.w);
  r.record("stretch.valid", valid.ok, valid.w);
  r.record("stretch.lowest", lowest.ok, lowest.w);
}

// Γ of random subsets meeting a tight T, closed under F ↦ T ∩ (F∩T)^≻ so
// that it is ≺-round; Δ = centred subsets. The hypotheses of the
// selection principle then hold and are re-checked by the solver.
std::optional<SelectionProblem> make_selection_problem(const RelStructure &rel,
                                                       const Subset &t, Rng &rng) {
  const std::size_t n = rel.size();
  const Mask full = (Mask{1} << n) - 1;
  std::vector<Subset> gamma;
  const std::size_t k = 1 + rng.below(3);
  for (std::size_t i = 0; i < k; ++i) {
    Subset f = sub(n, static_cast<Mask>(rng.next() & full));
    const auto idx = t.indices();
    f.set(idx[rng.below(idx.size())]);
    gamma.push_back(f);
  }
  std::vector<std::size_t> theta;
  for (std::size_t i = 0; i < gamma.size() && gamma.size() < 64; ++i) {
    const Subset g = t & down_image(rel, gamma[i] & t);
    auto it = std::find(gamma.begin(), gamma.end(), g);
    if (it == gamma.end()) {
      gamma.push_back(g);
      it = gamma.end() - 1;
    }
    theta.push_back(static_cast<std::size_t>(it - gamma.begin()));
  }
  if (theta.size() != gamma.size()) {
    return std::nullopt;
  }
  SelectionProblem pb;
  pb.delta_pred = [rel](const Subset &d) { return centred(rel, d); };
  pb.gamma = std::move(gamma);
  pb.theta = std::move(theta);
  return pb;
}

void g_selection(const Instance &inst, const RelStructure &rel, ValidationReport &r) {
  Rng rng = check_rng(inst, "selection");
  std::vector<Subset> points;
  for (const auto &t : enumerate_tight(rel)) {
    if (!t.empty()) {
      points.push_back(t.members());
    }
  }
  Outcome hyp, total, valid;
  for (int round = 0; round < 3 && !points.empty(); ++round) {
    const Subset &t = points[rng.below(points.size())];
    auto pb = make_selection_problem(rel, t, rng);
    if (!pb) {
      continue;
    }
    const auto res = selection_solve(rel, *pb);
    if (!res.hypotheses.ok()) {
      hyp.fail(wit({t}, res.hypotheses.first_failure()->name));
      continue;
    }
    if (!res.selector) {
      total.fail(wit({t}));
      continue;
    }
    const Subset &s = *res.selector;
    bool ok = is_round(rel, s) && centred(rel, s);
    for (const auto &f : pb->gamma) {
      ok = ok && s.intersects(f);
    }
    if (!ok) {
      valid.fail(wit({t, s}));
    }
  }
  r.record("selection.hypotheses", hyp.ok, hyp.w);
  r.record("selection.total", total.ok, total.w);
  r.record("selection.valid", valid.ok, valid.w);
}

void g_spectrum(const RelStructure &rel, ValidationReport &r) {
  const SpectrumSpace sp = build_spectrum(rel);
  r.merge(representation_suite(sp), "spectrum.");
  Brute b(rel);
  std::vector<Subset> want;
  for (Mask m : b.tight_sets()) {
    if (m) {
      want.push_back(sub(rel.size(), m));
    }
  }
  r.record("spectrum.points", sp.points == want);
  r.merge(is_pseudobasis(sp.space, sp.O_p), "spectrum.concrete.");
  r.merge(is_pseudobasis_reformulated(sp.space, sp.O_p), "spectrum.concrete_reformulated.");
}

void g_roundtrip(const RelStructure &rel, ValidationReport &r) {
  r.merge(abstract_roundtrip(rel), "roundtrip.");
  const SpectrumSpace sp = build_spectrum(rel);
  r.merge(verify_topology_recovery(sp.space, dedupe_members(sp.O_p)), "roundtrip.recovery.");
}

// --------------------------------------------------------------- semigroup

void g_semigroup(const OrderedInvSemigroup &s, ValidationReport &r) {
  const InvSemigroup &b = s.base();
  r.merge(validate_inverse_semigroup(b.elements(), b.table()), "semigroup.inverse.");
  r.merge(canonical_order_agreement(b), "semigroup.order.");
  r.merge(validate_pseudobasic(s), "semigroup.pseudobasic.");
}

void g_semigroup_laws(const OrderedInvSemigroup &s, ValidationReport &r) {
  r.merge(semigroup_laws(s), "semigroup_laws.");
}

std::vector<Subset> nonempty_family(const TightGroupoid &tg) {
  std::vector<Subset> out;
  for (const auto &f : dedupe_members(tg.family)) {
    if (f.any()) {
      out.push_back(f);
    }
  }
  return out;
}

void g_groupoid(const OrderedInvSemigroup &s, ValidationReport &r) {
  const TightGroupoid tg = tight_groupoid(s);
  r.merge(tg.report, "groupoid.");
}

void g_groupoid_etale(const OrderedInvSemigroup &s, ValidationReport &r) {
  const TightGroupoid tg = tight_groupoid(s);
  const auto fam = nonempty_family(tg);
  r.merge(intersection_preserving(tg.groupoid, fam), "etale.");
  r.merge(coherent_etale(tg.groupoid, fam), "etale.coherent.");
  r.merge(recover_groupoid(tg.groupoid, fam), "etale.recover.");
}

// ---------------------------------------------------------------- topology

void g_topology(const Instance &inst, ValidationReport &r) {
  const FiniteSpace &space = *inst.space;
  const auto &members = inst.members;
  r.merge(is_pseudobasis(space, members), "topology.pseudobasis.");
  r.merge(verify_topology_recovery(space, members), "topology.recovery.");
  r.merge(is_pseudosubbasis(space, members), "topology.pseudosubbasis.");
  const FiniteSpace xp = generate_XP(space, members);
  const auto cls = classify(xp);
  r.record("topology.XP_T0", cls.passed("T0"));
  r.record("topology.XP_stably_locally_compact", cls.passed("stably_locally_compact"));
  r.record("topology.patch_roundtrip", patch_roundtrip(space, members));

  // Generation against the naive closure.
  auto naive = close_family_naive(space.size(), members);
  std::sort(naive.begin(), naive.end());
  r.record("topology.generation", naive == xp.opens());

  // Alexandroff: opens are the up-sets of the specialization order, and
  // saturation is the up-closure.
  for (const FiniteSpace *sp : {&space, &xp}) {
    const RelStructure spec = specialization_order(*sp);
    Outcome alex, sat, wb;
    for (const auto &A : all_subsets(sp->size())) {
      const Subset upA = A | up_image(spec, A);
      if ((upA == A) != sp->is_open(A)) {
        alex.fail(wit({A}));
      }
      if (saturation(*sp, A) != upA) {
        sat.fail(wit({A}));
      }
    }
    for (const auto &O : sp->opens()) {
      for (const auto &N : sp->opens()) {
        if (way_below(*sp, O, N) != O.subset_of(N)) {
          wb.fail(wit({O, N}));
        }
      }
    }
    const std::string p = sp == &space ? "topology.space." : "topology.XP.";
    r.record(p + "alexandroff", alex.ok, alex.w);
    r.record(p + "saturation", sat.ok, sat.w);
    r.record(p + "way_below_is_inclusion", wb.ok, wb.w);
  }

  // The two axiom sets agree, on the members and on other families.
  Rng rng = check_rng(inst, "topology");
  const std::size_t n = space.size();
  const Mask full = (Mask{1} << n) - 1;
  Outcome reform;
  for (int k = 0; k < 24; ++k) {
    std::vector<Subset> fam = members;
    if (k > 0) {
      fam.clear();
      for (Mask m = 0; m <= full; ++m) {
        if (rng.chance(1, 3)) {
          fam.push_back(sub(n, m));
        }
      }
    }
    if (is_pseudobasis(space, fam).ok() != is_pseudobasis_reformulated(space, fam).ok()) {
      reform.fail(Witness{{}, "family of " + std::to_string(fam.size()) + " members"});
    }
  }
  r.record("topology.reformulation", reform.ok, reform.w);
}

// ---------------------------------------------------------------- registry

const std::vector<Group> &registry() {
  static const std::vector<Group> groups = [] {
    std::vector<Group> g;
    auto rel_group = [&](std::string name,
                         std::function<void(const Instance &, const RelStructure &,
                                            ValidationReport &)>
                             fn) {
      g.push_back({name, kRelKinds,
                   [fn, name](const Instance &inst, ValidationReport &r) {
                     if (auto rel = relation_of(inst)) {
                       if (rel->size() > kRelationGroupMax) {
                         r.fail(name + ".skipped",
                                Witness{{}, "relation has " + std::to_string(rel->size()) +
                                                " elements"},
                                true);
                         return;
                       }
                       fn(inst, *rel, r);
                     }
                   }});
    };
    auto plain = [](void (*f)(const RelStructure &, ValidationReport &)) {
      return [f](const Instance &, const RelStructure &rel, ValidationReport &r) {
        f(rel, r);
      };
    };
    rel_group("pseudobasis", plain(g_pseudobasis));
    rel_group("oracle_cover", plain(g_oracle_cover));
    rel_group("oracle_relcore", plain(g_oracle_relcore));
    rel_group("oracle_tight", plain(g_oracle_tight));
    rel_group("DCproperties", g_dc_properties);
    rel_group("round_laws", plain(g_round_laws));
    rel_group("auxiliarity", g_auxiliarity);
    rel_group("CentredDense", g_centred_dense);
    rel_group("tightChars", plain(g_tight_chars));
    rel_group("maximal", plain(g_maximal));
    rel_group("stretch", g_stretch);
    rel_group("selection", g_selection);
    rel_group("spectrum", plain(g_spectrum));
    rel_group("roundtrip", plain(g_roundtrip));
    auto sg_group = [&](std::string name,
                        void (*f)(const OrderedInvSemigroup &, ValidationReport &)) {
      g.push_back({std::move(name), kSemigroupKinds,
                   [f](const Instance &inst, ValidationReport &r) {
                     if (inst.semigroup) {
                       f(*inst.semigroup, r);
                     }
                   }});
    };
    sg_group("semigroup", g_semigroup);
    sg_group("semigroup_laws", g_semigroup_laws);
    sg_group("groupoid", g_groupoid);
    sg_group("etale", g_groupoid_etale);
    g.push_back({"topology", kTopologyKinds, [](const Instance &inst, ValidationReport &r) {
                   if (inst.space) {
                     g_topology(inst, r);
                   }
                 }});
    return g;
  }();
  return groups;
}

bool applies(const Group &g, InstanceKind k) {
  return std::find(g.kinds.begin(), g.kinds.end(), k) != g.kinds.end();
}

std::string group_of(const std::string &check) {
  return check.substr(0, check.find('.'));
}

// Warshall closure over a bit matrix.
void close_transitively(std::vector<std::vector<bool>> &m) {
  const std::size_t n = m.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!m[i][k]) {
        continue;
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (m[k][j]) {
          m[i][j] = true;
        }
      }
    }
  }
}

std::string instance_name(const InstanceGenSpec &spec) {
  return std::string(instance_kind_name(spec.kind)) + "#" + std::to_string(spec.seed);
}

Instance gen_poset(const InstanceGenSpec &spec, Rng &rng) {
  const std::size_t n = 1 + rng.below(spec.max_size);
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = true;
    for (std::size_t j = i + 1; j < n; ++j) {
      m[i][j] = rng.chance(1, 3);
    }
  }
  close_transitively(m);
  Instance inst = relation_instance(instance_name(spec),
                                    RelStructure::from_matrix(Carrier::indexed(n), m));
  return inst;
}

Instance gen_round_transitive(const InstanceGenSpec &spec, Rng &rng) {
  const std::size_t n = 1 + rng.below(spec.max_size);
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = rng.chance(3, 10);
    }
  }
  close_transitively(m);
  for (std::size_t j = 0; j < n; ++j) {
    bool has_pred = false;
    for (std::size_t i = 0; i < n; ++i) {
      has_pred = has_pred || m[i][j];
    }
    if (!has_pred) {
      m[j][j] = true;
    }
  }
  return relation_instance(instance_name(spec),
                           RelStructure::from_matrix(Carrier::indexed(n), m));
}

Instance gen_meet_semilattice(const InstanceGenSpec &spec, Rng &rng) {
  const std::size_t base = 3 + rng.below(2);
  const std::size_t want = std::min<std::size_t>(
      std::size_t{1} << base, std::max<std::size_t>(2, 1 + rng.below(spec.max_size)));
  std::vector<Mask> fam;
  for (int attempt = 0; attempt < 32; ++attempt) {
    fam = {0};
    while (fam.size() < want) {
      const Mask m = static_cast<Mask>(1 + rng.below((std::size_t{1} << base) - 1));
      if (std::find(fam.begin(), fam.end(), m) == fam.end()) {
        fam.push_back(m);
      }
      bool grew = true;
      while (grew) {
        grew = false;
        for (std::size_t i = 0; i < fam.size(); ++i) {
          for (std::size_t j = 0; j < fam.size(); ++j) {
            const Mask x = fam[i] & fam[j];
            if (std::find(fam.begin(), fam.end(), x) == fam.end()) {
              fam.push_back(x);
              grew = true;
            }
          }
        }
      }
    }
    if (fam.size() <= std::max<std::size_t>(spec.max_size, 2)) {
      break;
    }
  }
  std::sort(fam.begin(), fam.end());
  std::vector<std::string> labels;
  for (Mask m : fam) {
    std::string s;
    for (std::size_t i = 0; i < base; ++i) {
      if ((m >> i) & 1u) {
        s += std::to_string(i + 1);
      }
    }
    labels.push_back(s.empty() ? "0" : s);
  }
  std::vector<std::pair<std::size_t, std::size_t>> leq;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    for (std::size_t j = 0; j < fam.size(); ++j) {
      if ((fam[i] & fam[j]) == fam[i]) {
        leq.emplace_back(i, j);
      }
    }
  }
  return semigroup_instance(instance_name(spec),
                            OrderedInvSemigroup(meet_semilattice(Carrier(labels), leq)));
}

Instance gen_inverse_semigroup(const InstanceGenSpec &spec, Rng &rng) {
  const std::size_t cap = std::max<std::size_t>(spec.max_size, 4);
  std::optional<InvSemigroup> best;
  for (int attempt = 0; attempt < 32; ++attempt) {
    const std::size_t n = rng.chance(1, 2) ? 3 : 2;
    InvSemigroup s = random_inverse_subsemigroup(rng, n);
    if (!best || s.size() < best->size()) {
      best = s;
    }
    if (s.size() <= cap) {
      best = std::move(s);
      break;
    }
  }
  return semigroup_instance(instance_name(spec), OrderedInvSemigroup(std::move(*best)));
}

Instance gen_discrete(const InstanceGenSpec &spec, Rng &rng) {
  const std::size_t n = 1 + rng.below(std::min<std::size_t>(4, spec.max_size));
  const FiniteSpace space = FiniteSpace::discrete(Carrier::indexed(n));
  std::vector<Subset> members;
  for (std::size_t i = 0; i < n; ++i) {
    members.push_back(Subset::singleton(n, i));
  }
  for (Mask m = 1; m < (Mask{1} << n); ++m) {
    if (std::popcount(m) > 1 && rng.chance(1, 3)) {
      members.push_back(sub(n, m));
    }
  }
  if (!is_pseudobasis(space, members).ok()) {
    members.resize(n);
  }
  return topology_instance(instance_name(spec), space, members);
}

} // namespace

const char *instance_kind_name(InstanceKind kind) {
  switch (kind) {
  case InstanceKind::Poset:
    return "poset";
  case InstanceKind::RoundTransitive:
    return "round-transitive";
  case InstanceKind::MeetSemilattice:
    return "meet-semilattice";
  case InstanceKind::InverseSemigroup:
    return "inverse-semigroup";
  case InstanceKind::DiscretePseudobasis:
    return "discrete-pseudobasis";
  }
  return "?";
}

InstanceKind parse_instance_kind(const std::string &name) {
  for (auto k : {InstanceKind::Poset, InstanceKind::RoundTransitive,
                 InstanceKind::MeetSemilattice, InstanceKind::InverseSemigroup,
                 InstanceKind::DiscretePseudobasis}) {
    if (name == instance_kind_name(k)) {
      return k;
    }
  }
  throw PreconditionViolation("unknown instance kind \"" + name + "\"");
}

io::Json Instance::to_json() const {
  io::Json out;
  if (rel) {
    out = io::to_json(*rel);
  } else if (semigroup) {
    out = io::to_json(*semigroup);
  } else if (space) {
    out = io::to_json(*space);
    io::Json ms = io::Json::array();
    for (const auto &m : members) {
      ms.push_back(io::subset_json(m));
    }
    out["members"] = ms;
  }
  out["instance"] = name;
  return out;
}

Instance relation_instance(std::string name, RelStructure rel) {
  Instance inst;
  inst.name = std::move(name);
  inst.kind = InstanceKind::RoundTransitive;
  inst.rel = std::move(rel);
  return inst;
}

Instance semigroup_instance(std::string name, OrderedInvSemigroup s) {
  Instance inst;
  inst.name = std::move(name);
  inst.kind = InstanceKind::InverseSemigroup;
  inst.semigroup = std::move(s);
  return inst;
}

Instance topology_instance(std::string name, FiniteSpace space,
                           std::vector<Subset> members) {
  Instance inst;
  inst.name = std::move(name);
  inst.kind = InstanceKind::DiscretePseudobasis;
  inst.space = std::move(space);
  inst.members = std::move(members);
  return inst;
}

Instance gen_instance(const InstanceGenSpec &spec) {
  if (spec.max_size == 0) {
    throw PreconditionViolation("max_size must be positive");
  }
  if (spec.max_size > carrier_cap() || spec.max_size > Brute::kMaxSize) {
    throw CapExceeded("max_size " + std::to_string(spec.max_size) +
                      " exceeds the carrier cap");
  }
  Rng rng(spec.seed);
  Instance inst;
  switch (spec.kind) {
  case InstanceKind::Poset:
    inst = gen_poset(spec, rng);
    break;
  case InstanceKind::RoundTransitive:
    inst = gen_round_transitive(spec, rng);
    break;
  case InstanceKind::MeetSemilattice:
    inst = gen_meet_semilattice(spec, rng);
    break;
  case InstanceKind::InverseSemigroup:
    inst = gen_inverse_semigroup(spec, rng);
    break;
  case InstanceKind::DiscretePseudobasis:
    inst = gen_discrete(spec, rng);
    break;
  }
  inst.kind = spec.kind;
  inst.seed = spec.seed;
  return inst;
}

std::vector<std::string> battery_checks(InstanceKind kind) {
  std::vector<std::string> out;
  for (const auto &g : registry()) {
    if (applies(g, kind)) {
      out.push_back(g.name);
    }
  }
  return out;
}

std::vector<std::string> all_battery_checks() {
  std::vector<std::string> out;
  for (const auto &g : registry()) {
    out.push_back(g.name);
  }
  return out;
}

ValidationReport run_checks(const Instance &inst, const std::vector<std::string> &only) {
  ValidationReport r;
  for (const auto &g : registry()) {
    if (!applies(g, inst.kind)) {
      continue;
    }
    if (!only.empty() && std::find(only.begin(), only.end(), g.name) == only.end()) {
      continue;
    }
    try {
      g.run(inst, r);
    } catch (const std::exception &e) {
      r.fail(g.name + ".exception", Witness{{}, e.what()});
    }
  }
  return r;
}

const CheckTally *BatteryReport::tally(const std::string &name) const {
  for (const auto &t : tallies) {
    if (t.name == name) {
      return &t;
    }
  }
  return nullptr;
}

io::Json BatteryReport::to_json() const {
  io::Json out;
  out["ok"] = ok();
  out["instances"] = instances;
  io::Json ts = io::Json::array();
  for (const auto &t : tallies) {
    ts.push_back({{"check", t.name}, {"runs", t.runs}, {"passes", t.passes},
                  {"failures", t.failures}});
  }
  out["checks"] = ts;
  io::Json fs = io::Json::array();
  for (const auto &f : failures) {
    fs.push_back({{"instance", f.instance}, {"seed", f.seed}, {"kind", f.kind},
                  {"check", f.check}, {"witness", f.witness}, {"dump", f.dump}});
  }
  out["failures"] = fs;
  return out;
}

std::string BatteryReport::to_text() const {
  std::ostringstream out;
  out << std::left << std::setw(18) << "check" << std::right << std::setw(8) << "runs"
      << std::setw(8) << "pass" << std::setw(8) << "fail" << "\n";
  for (const auto &t : tallies) {
    out << std::left << std::setw(18) << t.name << std::right << std::setw(8) << t.runs
        << std::setw(8) << t.passes << std::setw(8) << t.failures << "\n";
  }
  for (const auto &f : failures) {
    out << "FAIL " << f.instance << " (seed " << f.seed << ", " << f.kind << ") "
        << f.check;
    if (!f.witness.empty()) {
      out << ": " << f.witness;
    }
    out << "\n  replay: " << f.dump.dump() << "\n";
  }
  out << instances << " instances, " << failures.size() << " failures, "
      << std::fixed << std::setprecision(2) << seconds << " s\n";
  return out.str();
}

BatteryReport run_battery(const std::vector<Instance> &instances,
                          const std::vector<std::string> &checks, unsigned threads) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<ValidationReport> reports(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      reports[i] = run_checks(instances[i], checks);
    }
  };
  if (threads == 0) {
    threads = std::max(1u, std::thread::hardware_concurrency());
  }
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, instances.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) {
    pool.emplace_back(worker);
  }
  worker();
  for (auto &t : pool) {
    t.join();
  }

  BatteryReport rep;
  rep.instances = instances.size();
  std::map<std::string, std::size_t> slot;
  for (const auto &g : registry()) {
    if (checks.empty() || std::find(checks.begin(), checks.end(), g.name) != checks.end()) {
      slot[g.name] = rep.tallies.size();
      rep.tallies.push_back({g.name, 0, 0, 0});
    }
  }
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const Instance &inst = instances[i];
    const auto rel = inst.rel ? inst.rel : std::optional<RelStructure>{};
    const Carrier *carrier = rel ? &rel->carrier() : nullptr;
    std::map<std::string, bool> group_ok;
    for (const auto &g : registry()) {
      if (applies(g, inst.kind) && slot.count(g.name)) {
        group_ok[g.name] = true;
      }
    }
    for (const auto &c : reports[i].checks()) {
      if (c.passed || c.advisory) {
        continue;
      }
      group_ok[group_of(c.name)] = false;
      rep.failures.push_back({inst.name, inst.seed, instance_kind_name(inst.kind), c.name,
                              c.witness ? format_witness(*c.witness, carrier) : "",
                              inst.to_json()});
    }
    for (const auto &[name, ok] : group_ok) {
      auto &t = rep.tallies[slot.at(name)];
      ++t.runs;
      ok ? ++t.passes : ++t.failures;
    }
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

BatteryReport run_battery(const std::vector<InstanceGenSpec> &specs,
                          const std::vector<std::string> &checks, unsigned threads) {
  std::vector<Instance> instances;
  instances.reserve(specs.size());
  for (const auto &s : specs) {
    instances.push_back(gen_instance(s));
  }
  return run_battery(instances, checks, threads);
}

std::vector<InstanceGenSpec> battery_corpus(std::uint64_t seed, std::size_t count,
                                            std::size_t max_size,
                                            const std::vector<InstanceKind> &kinds) {
  std::vector<InstanceGenSpec> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back({seed + i, max_size, kinds[i % kinds.size()]});
  }
  return out;
}

std::vector<Instance> fixture_instances() {
  auto rel = [](std::vector<std::string> names,
                std::vector<std::pair<std::size_t, std::size_t>> pairs) {
    return RelStructure(Carrier(std::move(names)), pairs);
  };
  std::vector<Instance> out;
  out.push_back(relation_instance("E1", rel({"a", "b"}, {{0, 0}, {1, 1}})));
  out.push_back(relation_instance(
      "E2", rel({"a", "b", "c"}, {{0, 0}, {1, 1}, {2, 2}, {2, 0}, {2, 1}})));
  out.push_back(relation_instance(
      "E3", rel({"x", "y", "t"}, {{0, 0}, {1, 1}, {2, 2}, {0, 2}, {1, 2}})));
  out.push_back(relation_instance("E4", rel({"u", "v"}, {{0, 0}, {0, 1}})));
  out.push_back(semigroup_instance("E5", OrderedInvSemigroup(semilattice_e5())));
  out.push_back(semigroup_instance("I_2", OrderedInvSemigroup(symmetric_inverse_monoid(2))));
  return out;
}

} // namespace tgpd
