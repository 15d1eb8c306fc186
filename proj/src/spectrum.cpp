#include "tgpd/spectrum.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tgpd {

namespace {

constexpr std::size_t kExhaustiveBase = 6;

void check_base_width(const SpectrumSpace &sp, const Subset &s) {
  if (s.width() != sp.base.size()) {
    throw CarrierMismatch("subset width does not match the base carrier");
  }
}

} // namespace

SpectrumSpace build_spectrum(const RelStructure &rel) {
  require_pseudobasis(rel, "build_spectrum");
  SpectrumSpace sp;
  sp.base = rel;
  for (const auto &t : enumerate_tight(rel)) {
    if (!t.empty()) {
      sp.points.push_back(t.members());
    }
  }
  if (sp.points.empty()) {
    throw Defect("pseudobasis with an empty tight spectrum");
  }
  std::vector<std::string> labels;
  for (const auto &t : sp.points) {
    labels.push_back(rel.carrier().format(t));
  }
  const std::size_t m = sp.points.size();
  const std::size_t n = rel.size();
  sp.O_p.assign(n, Subset(m));
  sp.O_up.assign(n, Subset(m));
  for (std::size_t i = 0; i < m; ++i) {
    const Subset outside = ~sp.points[i];
    for (std::size_t p = 0; p < n; ++p) {
      if (sp.points[i].test(p)) {
        sp.O_p[p].set(i);
      }
      if (compact_cover(rel, Subset::singleton(n, p), outside)) {
        sp.O_up[p].set(i);
      }
    }
  }
  std::vector<Subset> subbasis = sp.O_p;
  subbasis.insert(subbasis.end(), sp.O_up.begin(), sp.O_up.end());
  sp.space = FiniteSpace::generated(Carrier(std::move(labels)), subbasis);
  return sp;
}

Subset basic_open(const SpectrumSpace &sp, const Subset &f, const Subset &g) {
  check_base_width(sp, f);
  check_base_width(sp, g);
  Subset out(sp.points.size());
  for (std::size_t i = 0; i < sp.points.size(); ++i) {
    const Subset &t = sp.points[i];
    if (f.subset_of(t) && compact_cover(sp.base, g, ~t)) {
      out.set(i);
    }
  }
  return out;
}

Subset basic_open_factored(const SpectrumSpace &sp, const Subset &f,
                           const Subset &g) {
  check_base_width(sp, f);
  check_base_width(sp, g);
  Subset out = Subset::full(sp.points.size());
  f.for_each([&](std::size_t p) { out &= sp.O_p[p]; });
  g.for_each([&](std::size_t p) { out &= sp.O_up[p]; });
  return out;
}

Subset upper_open(const SpectrumSpace &sp, const Subset &q) {
  return basic_open(sp, sp.base.empty_set(), q);
}

Subset union_of_point_opens(const SpectrumSpace &sp, const Subset &q) {
  check_base_width(sp, q);
  Subset out(sp.points.size());
  q.for_each([&](std::size_t p) { out |= sp.O_p[p]; });
  return out;
}

bool check_empty_characterization(const SpectrumSpace &sp, const Subset &f,
                                  const Subset &g) {
  const bool lhs = basic_open(sp, f, g).empty();
  bool rhs = true;
  for_each_subset_of(sp.base.full_set(), [&](const Subset &h) {
    if (compact_cover(sp.base, g, h) &&
        !hatted_cover(sp.base, CoverKind::Compact, f, h)) {
      rhs = false;
    }
    return rhs;
  });
  return lhs == rhs;
}

ValidationReport representation_suite(const SpectrumSpace &sp) {
  const RelStructure &rel = sp.base;
  const std::size_t n = rel.size();
  const FiniteSpace &X = sp.space;
  const std::size_t m = sp.points.size();
  const auto dom = quantifier_domain(n, kExhaustiveBase);
  ValidationReport r;

  // Pair-level statements record the first counterexample only.
  struct Acc {
    bool ok = true;
    Witness w;
    void fail(Witness x) {
      if (ok) {
        ok = false;
        w = std::move(x);
      }
    }
  };

  {
    Acc perp, nonempty;
    for (std::size_t p = 0; p < n; ++p) {
      if (sp.O_p[p].empty()) {
        nonempty.fail(Witness{{p}, "O_p is empty"});
      }
      for (std::size_t q = 0; q < n; ++q) {
        const bool abstract = disjoint(rel, Subset::singleton(n, p),
                                       Subset::singleton(n, q));
        if (abstract != !sp.O_p[p].intersects(sp.O_p[q])) {
          perp.fail(Witness{{p, q}, "p ⊥ q differs from O_p ∩ O_q = ∅"});
        }
      }
    }
    r.record("pperpq", perp.ok, perp.w);
    r.record("Opnonempty", nonempty.ok, nonempty.w);
  }

  {
    Acc fdg, ofgempty, ofgdef, fdcq, rdq, fccq, crep, dc_abs, dc_rep;
    for (const auto &f : dom) {
      const Subset of = basic_open(sp, f, rel.empty_set());
      const Subset uf = union_of_point_opens(sp, f);
      for (const auto &g : dom) {
        const Subset ofg = basic_open(sp, f, g);
        if (hatted_cover(rel, CoverKind::Dense, f, g) && ofg.any()) {
          fdg.fail(Witness{{f, g}, "F̂ D G but O_F^G ≠ ∅"});
        }
        if (!check_empty_characterization(sp, f, g)) {
          ofgempty.fail(Witness{{f, g}, "emptiness characterization fails"});
        }
        if (ofg != basic_open_factored(sp, f, g)) {
          ofgdef.fail(Witness{{f, g}, "O_F^G differs from its factorization"});
        }
        // g plays the role of Q below.
        const Subset ug = union_of_point_opens(sp, g);
        const Subset cl_ug = closure(X, ug);
        if (hatted_cover(rel, CoverKind::Dense, f, g) != of.subset_of(cl_ug)) {
          fdcq.fail(Witness{{f, g}, "F̂ D Q differs from O_F ⊆ cl ⋃O_q"});
        }
        if (dense_cover(rel, f, g) != uf.subset_of(cl_ug)) {
          rdq.fail(Witness{{f, g}, "R D Q differs from ⋃O_r ⊆ cl ⋃O_q"});
        }
        if (hatted_cover(rel, CoverKind::Compact, f, g) != way_below(X, of, ug)) {
          fccq.fail(Witness{{f, g}, "F̂ C Q differs from O_F ⋐ ⋃O_q"});
        }
        if (compact_cover(rel, f, g) != way_below(X, uf, ug)) {
          crep.fail(Witness{{f, g}, "R C Q differs from ⋃O_r ⋐ ⋃O_q"});
        }
        if (dense_cover(rel, f, g) != compact_cover(rel, f, g)) {
          dc_abs.fail(Witness{{f, g}, "R D Q differs from R C Q"});
        }
        if (uf.subset_of(cl_ug) != way_below(X, uf, ug)) {
          dc_rep.fail(Witness{{f, g}, "closure and ⋐ readings differ"});
        }
      }
    }
    r.record("FDG", fdg.ok, fdg.w);
    r.record("OFGempty", ofgempty.ok, ofgempty.w);
    r.record("OFGdef", ofgdef.ok, ofgdef.w);
    r.record("FDCQ", fdcq.ok, fdcq.w);
    r.record("RDQ", rdq.ok, rdq.w);
    r.record("FCCQ", fccq.ok, fccq.w);
    r.record("Crep", crep.ok, crep.w);
    r.record("DequalsC", dc_abs.ok && dc_rep.ok, dc_abs.ok ? dc_rep.w : dc_abs.w);
  }

  r.record("O_empty_full",
           basic_open(sp, rel.empty_set(), rel.empty_set()).is_full(),
           Witness{{}, "O_∅^∅ is not every point"});

  {
    Acc oq;
    for (const auto &q : dom) {
      Subset u(m);
      for (const auto &g : dom) {
        if (dense_cover(rel, q, g)) {
          u |= upper_open(sp, g);
        }
      }
      if (u != upper_open(sp, q)) {
        oq.fail(Witness{{q}, "O^Q differs from ⋃{O^G : Q D G}"});
      }
    }
    r.record("OQunion", oq.ok, oq.w);
  }

  {
    Acc tin;
    for (std::size_t i = 0; i < m; ++i) {
      const Subset &t = sp.points[i];
      for (const auto &f : dom) {
        const bool in_cl = closure(X, basic_open(sp, f, rel.empty_set())).test(i);
        if (in_cl == hatted_cover(rel, CoverKind::Compact, t | f, ~t)) {
          tin.fail(Witness{{t, f}, "T ∈ cl O_F differs from T ∪ F ¬Ĉ P∖T"});
        }
      }
    }
    r.record("TinClosure", tin.ok, tin.w);
  }

  {
    Subset mrc(m);
    bool all_points = true;
    for (const auto &u : maximal_round_centred(rel)) {
      const auto it = std::find(sp.points.begin(), sp.points.end(), u);
      if (it == sp.points.end()) {
        all_points = false;
        r.fail("density", Witness{{u}, "maximal round centred set is not a point"});
        break;
      }
      mrc.set(static_cast<std::size_t>(it - sp.points.begin()));
    }
    if (all_points) {
      r.record("density", closure(X, mrc).is_full(),
               Witness{{mrc}, "closure of maximal round centred points"});
    }
  }

  {
    const ValidationReport cls = classify(X);
    r.record("hausdorff", cls.passed("hausdorff"),
             cls.find("hausdorff") && cls.find("hausdorff")->witness
                 ? *cls.find("hausdorff")->witness
                 : Witness{});
    r.record("discrete", X == FiniteSpace::discrete(X.points()),
             Witness{{}, "Hausdorff finite space is not discrete"});
    Acc sep;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (i == j) {
          continue;
        }
        bool found = false;
        for (std::size_t s = 0; s < n && !found; ++s) {
          found = sp.O_p[s].test(i) && sp.O_up[s].test(j);
        }
        if (!found) {
          sep.fail(Witness{{sp.points[i], sp.points[j]}, "no O_s, O^s separation"});
        }
      }
    }
    r.record("hausdorff_separation", sep.ok, sep.w);
  }

  {
    Acc lc;
    for (std::size_t i = 0; i < m; ++i) {
      const Subset &t = sp.points[i];
      bool found = false;
      t.for_each([&](std::size_t s) {
        (rel.above(s) & t).for_each([&](std::size_t u) {
          found = found || (sp.O_p[s].test(i) && way_below(X, sp.O_p[s], sp.O_p[u]));
        });
      });
      if (!found) {
        lc.fail(Witness{{t}, "no s ≺ t in T with T ∈ O_s ⋐ O_t"});
      }
    }
    r.record("locally_compact", lc.ok, lc.w);
  }

  {
    const FiniteSpace xp = FiniteSpace::generated(X.points(), sp.O_p);
    const ValidationReport cls = classify(xp);
    r.record("XP_T0", cls.passed("T0"), Witness{{}, "O_p topology is not T0"});
    r.record("XP_stably_locally_compact", cls.passed("stably_locally_compact"),
             Witness{{}, "O_p topology is not stably locally compact"});
    r.record("XP_T1", cls.passed("T1"), Witness{{}, "O_p topology is not T1"},
             true);
  }
  return r;
}

ConcretePseudobasis concrete_pseudobasis_of_spectrum(const SpectrumSpace &sp) {
  return make_concrete_pseudobasis(sp.space, sp.O_p);
}

ValidationReport abstract_roundtrip(const RelStructure &rel) {
  const SpectrumSpace sp = build_spectrum(rel);
  const RelStructure back = abstract_of_concrete(sp.space, sp.O_p);
  const auto distinct = dedupe_members(sp.O_p);
  const std::size_t n = rel.size();
  std::vector<std::size_t> phi(n);
  Subset hit(distinct.size());
  for (std::size_t p = 0; p < n; ++p) {
    phi[p] = static_cast<std::size_t>(
        std::lower_bound(distinct.begin(), distinct.end(), sp.O_p[p]) -
        distinct.begin());
    hit.set(phi[p]);
  }
  ValidationReport r;
  r.record("onto", hit.is_full(), Witness{{~hit}, "recovered elements not hit"});
  bool transport = true, ident = true;
  Witness tw, iw;
  for (std::size_t p = 0; p < n && (transport || ident); ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      const bool pcq = compact_cover(rel, Subset::singleton(n, p),
                                     Subset::singleton(n, q));
      const bool qcp = compact_cover(rel, Subset::singleton(n, q),
                                     Subset::singleton(n, p));
      if (transport && pcq != back.prec(phi[p], phi[q])) {
        transport = false;
        tw = Witness{{p, q}, "p C q differs from O_p ⋐ O_q"};
      }
      if (ident && (phi[p] == phi[q]) != (pcq && qcp)) {
        ident = false;
        iw = Witness{{p, q}, "O_p = O_q differs from p C q C p"};
      }
    }
  }
  r.record("C_transport", transport, tw);
  r.record("identifies_mutual_C", ident, iw);
  if (is_separative(rel).ok()) {
    bool prec_ok = true;
    for (std::size_t p = 0; p < n && prec_ok; ++p) {
      for (std::size_t q = 0; q < n && prec_ok; ++q) {
        if (rel.prec(p, q) != back.prec(phi[p], phi[q])) {
          prec_ok = false;
          r.fail("recovers_prec", Witness{{p, q}, "≺ not recovered"});
        }
      }
    }
    if (prec_ok) {
      r.pass("recovers_prec");
    }
  }
  return r;
}

ValidationReport verify_topology_recovery(const FiniteSpace &space,
                                          const std::vector<Subset> &members) {
  ValidationReport r = cover_representation(space, members);
  const RelStructure rel = abstract_of_concrete(space, members);
  const auto distinct = dedupe_members(members);
  const SpectrumSpace sp = build_spectrum(rel);
  const std::size_t k = distinct.size();

  std::vector<std::size_t> image(space.size(), sp.points.size());
  bool all_points = true;
  for (std::size_t x = 0; x < space.size(); ++x) {
    Subset tx(k);
    for (std::size_t i = 0; i < k; ++i) {
      if (distinct[i].test(x)) {
        tx.set(i);
      }
    }
    const auto it = std::find(sp.points.begin(), sp.points.end(), tx);
    if (it == sp.points.end()) {
      if (all_points) {
        r.fail("Tx_tight", Witness{{x}, "T_x is not a point of the spectrum"});
      }
      all_points = false;
    } else {
      image[x] = static_cast<std::size_t>(it - sp.points.begin());
    }
  }
  if (!all_points) {
    return r;
  }
  r.pass("Tx_tight");

  Subset hit(sp.points.size());
  bool injective = true;
  for (std::size_t x = 0; x < space.size(); ++x) {
    injective = injective && !hit.test(image[x]);
    hit.set(image[x]);
  }
  r.record("bijective", injective && hit.is_full(),
           Witness{{~hit}, "x ↦ T_x is not a bijection"});
  if (!(injective && hit.is_full())) {
    return r;
  }

  auto forward = [&](const Subset &u) {
    Subset out(sp.points.size());
    u.for_each([&](std::size_t x) { out.set(image[x]); });
    return out;
  };
  std::vector<Subset> pushed;
  for (const auto &u : space.opens()) {
    pushed.push_back(forward(u));
  }
  std::sort(pushed.begin(), pushed.end());
  r.record("homeomorphism", pushed == sp.space.opens(),
           Witness{{}, "open sets do not correspond"});
  return r;
}

std::string spectrum_dot(const SpectrumSpace &sp) {
  std::ostringstream out;
  out << "digraph spectrum {\n";
  for (std::size_t i = 0; i < sp.points.size(); ++i) {
    out << "  t" << i << " [shape=ellipse, label=\""
        << sp.base.carrier().format(sp.points[i]) << "\"];\n";
  }
  for (std::size_t p = 0; p < sp.base.size(); ++p) {
    out << "  e" << p << " [shape=box, label=\"O_" << sp.base.carrier().name(p)
        << "\"];\n";
    sp.O_p[p].for_each([&](std::size_t i) {
      out << "  e" << p << " -> t" << i << ";\n";
    });
  }
  out << "}\n";
  return out.str();
}

} // namespace tgpd
