// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "tgpd/battery.hpp"
#include "tgpd/gpd.hpp"
#include "tgpd/oracles.hpp"
#include "tgpd/rng.hpp"
#include "tgpd/spectrum.hpp"
#include "tgpd/tight.hpp"

using namespace tgpd;
using oracle::Brute;
using oracle::Mask;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string &why) {
    if (ok) {
      detail = why;
    }
    ok = false;
  }
};

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

RelStructure rel(std::vector<std::string> names,
                 const std::vector<std::pair<std::string, std::string>> &pairs) {
  Carrier c(std::move(names));
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  for (const auto &[a, b] : pairs) {
    idx.emplace_back(c.index_of(a), c.index_of(b));
  }
  return RelStructure(std::move(c), idx);
}

std::string tight_list(const RelStructure &r) {
  std::string out = "[";
  for (const auto &t : enumerate_tight(r)) {
    out += (out.size() > 1 ? "," : "") + r.carrier().format(t.members());
  }
  return out + "]";
}

std::string brute_tight_list(const RelStructure &r) {
  Brute b(r);
  std::string out = "[";
  for (Mask m : b.tight_sets()) {
    out += (out.size() > 1 ? "," : "") + r.carrier().format(b.subset(m));
  }
  return out + "]";
}

std::vector<Instance> relations(std::uint64_t seed, std::size_t count, std::size_t max_size,
                                const std::vector<InstanceKind> &kinds) {
  std::vector<Instance> out;
  for (const auto &spec : battery_corpus(seed, count, max_size, kinds)) {
    out.push_back(gen_instance(spec));
  }
  return out;
}

// ------------------------------------------------------------------ 1

Outcome fixtures() {
  Outcome o;
  const std::vector<std::pair<RelStructure, std::string>> cases = {
      {rel({"a", "b"}, {{"a", "a"}, {"b", "b"}}), "[{a},{b}]"},
      {rel({"a", "b", "c"}, {{"a", "a"}, {"b", "b"}, {"c", "c"}, {"c", "a"}, {"c", "b"}}),
       "[{a,b,c}]"},
      {rel({"x", "y", "t"}, {{"x", "x"}, {"y", "y"}, {"t", "t"}, {"x", "t"}, {"y", "t"}}),
       "[{x,t},{y,t}]"},
      {rel({"u", "v"}, {{"u", "u"}, {"u", "v"}}), "[{u,v}]"},
  };
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto &[r, golden] = cases[i];
    const std::string got = tight_list(r), brute = brute_tight_list(r);
    if (got != golden || brute != golden) {
      o.fail("E" + std::to_string(i + 1) + ": got " + got + ", oracle " + brute +
             ", expected " + golden);
    }
  }
  o.detail = o.ok ? "E1-E4 match golden lists and the brute-force oracle" : o.detail;
  return o;
}

// ------------------------------------------------------------------ 2

Outcome boolean_algebras() {
  Outcome o;
  for (std::size_t n = 2; n <= 4; ++n) {
    const OrderedInvSemigroup s(boolean_semilattice(n));
    const RelStructure &p = s.P();
    const SpectrumSpace sp = build_spectrum(p);
    const std::string tag = "n=" + std::to_string(n) + ": ";
    if (sp.points.size() != n) {
      o.fail(tag + std::to_string(sp.points.size()) + " points");
      continue;
    }
    if (sp.space.opens().size() != (std::size_t{1} << n) || !classify(sp.space).ok()) {
      o.fail(tag + "spectrum not discrete");
    }
    // Each point is the principal filter of an atom.
    for (const auto &t : sp.points) {
      bool principal = false;
      for (std::size_t a = 0; a < p.size(); ++a) {
        principal = principal || (p.below(a).count() == 1 &&
                                  up_image(p, Subset::singleton(p.size(), a)) == t);
      }
      if (!principal) {
        o.fail(tag + "point " + p.carrier().format(t) + " is not an atom's filter");
      }
    }
  }
  o.detail = o.ok ? "n=2,3,4: n points, discrete, principal atom filters" : o.detail;
  return o;
}

// ------------------------------------------------------------------ 3

Outcome reduction_oracles() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t pairs = 0;
  for (const auto &inst : relations(1000, 200, 5, {InstanceKind::RoundTransitive})) {
    const RelStructure &r = *inst.rel;
    Brute b(r);
    const auto all = all_subsets(r.size());
    for (const auto &q : all) {
      for (const auto &s : all) {
        const Mask mq = Brute::mask(q), ms = Brute::mask(s);
        ++pairs;
        bool agree = compact_cover(r, q, s) == b.compact(mq, ms) &&
                     dense_cover(r, q, s) == b.dense(mq, ms);
        for (auto k : {CoverKind::Dense, CoverKind::Compact, CoverKind::Prec, CoverKind::Perp}) {
          agree = agree && hatted_cover(r, k, q, s) == b.hatted(k, mq, ms);
        }
        if (!agree) {
          o.fail(inst.name + ": Q=" + r.carrier().format(q) + " R=" + r.carrier().format(s));
        }
      }
    }
  }
  const double secs = since(t0);
  if (secs >= 60) {
    o.fail("took " + std::to_string(secs) + " s");
  }
  if (o.ok) {
    o.detail = "200 instances, " + std::to_string(pairs) + " subset pairs, " +
               std::to_string(secs) + " s";
  }
  return o;
}

// ------------------------------------------------------------------ 4

Outcome proposition_battery() {
  Outcome o;
  const auto specs = battery_corpus(
      1, 500, 6,
      {InstanceKind::Poset, InstanceKind::RoundTransitive, InstanceKind::MeetSemilattice,
       InstanceKind::InverseSemigroup});
  const BatteryReport rep = run_battery(specs);
  if (!rep.ok()) {
    const auto &f = rep.failures.front();
    o.fail(std::to_string(rep.failures.size()) + " failures, first " + f.instance + " " +
           f.check + " " + f.witness);
  }
  for (const char *g : {"pseudobasis", "DCproperties", "round_laws", "auxiliarity",
                        "CentredDense", "tightChars", "maximal", "spectrum", "roundtrip",
                        "oracle_cover", "oracle_relcore", "oracle_tight"}) {
    const CheckTally *t = rep.tally(g);
    if (!t || t->runs < 500) {
      o.fail(std::string("group ") + g + " ran on fewer than 500 relations");
    }
  }
  if (rep.seconds >= 300) {
    o.fail("took " + std::to_string(rep.seconds) + " s");
  }
  if (o.ok) {
    std::size_t runs = 0;
    for (const auto &t : rep.tallies) {
      runs += t.runs;
    }
    o.detail = "500 instances, " + std::to_string(rep.tallies.size()) + " groups, " +
               std::to_string(runs) + " group runs, 0 failures, " +
               std::to_string(rep.seconds) + " s";
  }
  return o;
}

// ------------------------------------------------------------------ 5

Outcome duality() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t families = 0;
  for (std::size_t k = 1; k <= 4; ++k) {
    const FiniteSpace d = FiniteSpace::discrete(Carrier::indexed(k));
    std::vector<Subset> nonempty;
    for (const auto &s : all_subsets(k)) {
      if (s.any()) {
        nonempty.push_back(s);
      }
    }
    const std::uint64_t total = std::uint64_t{1} << nonempty.size();
    for (std::uint64_t pick = 1; pick < total; ++pick) {
      std::vector<Subset> members;
      for (std::size_t i = 0; i < nonempty.size(); ++i) {
        if ((pick >> i) & 1u) {
          members.push_back(nonempty[i]);
        }
      }
      if (!is_pseudobasis(d, members).ok()) {
        continue;
      }
      ++families;
      const auto rep = verify_topology_recovery(d, members);
      if (!rep.ok()) {
        o.fail("k=" + std::to_string(k) + " family #" + std::to_string(pick) + ": " +
               rep.first_failure()->name);
      }
    }
  }
  std::size_t separative = 0;
  std::vector<Instance> corpus = relations(
      5000, 200, 6, {InstanceKind::Poset, InstanceKind::RoundTransitive});
  for (auto &inst : fixture_instances()) {
    if (inst.rel) {
      corpus.push_back(inst);
    }
  }
  for (const auto &inst : corpus) {
    if (!is_separative(*inst.rel).ok()) {
      continue;
    }
    ++separative;
    const auto rep = abstract_roundtrip(*inst.rel);
    if (!rep.ok()) {
      o.fail(inst.name + ": " + rep.first_failure()->name);
    }
  }
  const double secs = since(t0);
  if (secs >= 120) {
    o.fail("took " + std::to_string(secs) + " s");
  }
  if (o.ok) {
    o.detail = std::to_string(families) + " pseudobases on <= 4 points, " +
               std::to_string(separative) + " separative round trips, " +
               std::to_string(secs) + " s";
  }
  return o;
}

// ------------------------------------------------------------------ 6

Outcome groupoids() {
  Outcome o;
  const FiniteGroupoid pair2 = pair_groupoid(2);
  const TightGroupoid i2 = tight_groupoid(OrderedInvSemigroup(symmetric_inverse_monoid(2)));
  const auto m1 = find_isomorphism(i2.groupoid, pair2);
  if (!i2.report.ok() || !m1 || !iso_check(i2.groupoid, pair2, *m1)) {
    o.fail("tight groupoid of I_2 is not the pair groupoid");
  }
  const TightGroupoid e5 = tight_groupoid(OrderedInvSemigroup(semilattice_e5()));
  const FiniteGroupoid unit2 = unit_groupoid(2);
  const auto m2 = find_isomorphism(e5.groupoid, unit2);
  if (!e5.report.ok() || !m2 || !iso_check(e5.groupoid, unit2, *m2)) {
    o.fail("tight groupoid of E5 is not the 2-point unit groupoid");
  }
  std::vector<Subset> singles, bisections;
  for (std::size_t i = 0; i < pair2.size(); ++i) {
    singles.push_back(Subset::singleton(pair2.size(), i));
  }
  for (const auto &b : all_bisections(pair2)) {
    if (b.any()) {
      bisections.push_back(b);
    }
  }
  if (!recover_groupoid(pair2, singles).ok()) {
    o.fail("recovery from singleton bisections");
  }
  if (bisections.size() != 6 || !recover_groupoid(pair2, bisections).ok()) {
    o.fail("recovery from all nonempty bisections");
  }
  o.detail = o.ok ? "I_2 -> pair(2), E5 -> unit(2), recovery from 4 singletons and 6 bisections"
                  : o.detail;
  return o;
}

// ------------------------------------------------------------------ 7

Outcome etale_laws() {
  Outcome o;
  std::vector<std::pair<std::string, InvSemigroup>> corpus = {
      {"E5", semilattice_e5()},
  };
  for (std::size_t n = 2; n <= 4; ++n) {
    corpus.emplace_back("B" + std::to_string(n), boolean_semilattice(n));
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    corpus.emplace_back("I" + std::to_string(n), symmetric_inverse_monoid(n));
  }
  for (const auto &spec : battery_corpus(7000, 60, 6, {InstanceKind::InverseSemigroup,
                                                       InstanceKind::MeetSemilattice})) {
    corpus.emplace_back(gen_instance(spec).name, gen_instance(spec).semigroup->base());
  }
  std::size_t pairs = 0;
  for (const auto &[name, s] : corpus) {
    const OrderedInvSemigroup os(s);
    if (!validate_pseudobasic(os).ok()) {
      o.fail(name + ": not pseudobasic");
      continue;
    }
    const TightGroupoid tg = tight_groupoid(os);
    for (const char *law : {"ss-1", "product", "inverse", "functor_product", "functor_inverse",
                            "family.product_closed", "family.inverse_closed"}) {
      bool seen = false;
      for (const auto &c : tg.report.checks()) {
        seen = seen || c.name.find(law) != std::string::npos;
      }
      if (!seen) {
        o.fail(name + ": law " + law + " not evaluated");
      }
    }
    if (!tg.report.ok()) {
      o.fail(name + ": " + tg.report.first_failure()->name);
    }
    const auto &g = tg.groupoid;
    for (std::size_t a = 0; a < g.size(); ++a) {
      for (std::size_t b = 0; b < g.size(); ++b) {
        pairs += g.composable(a, b);
      }
    }
  }
  if (o.ok) {
    o.detail = std::to_string(corpus.size()) + " semigroups, " + std::to_string(pairs) +
               " composable pairs";
  }
  return o;
}

// ------------------------------------------------------------------ 8

Subset largest_round(const RelStructure &r, Subset x) {
  for (Subset keep = x & up_image(r, x); keep != x; keep = x & up_image(r, x)) {
    x = keep;
  }
  return x;
}

Subset random_subset(Rng &rng, std::size_t n) {
  return Subset::from_bits(n, rng.next() & ((std::uint64_t{1} << n) - 1));
}

// Γ of random subsets meeting a tight T, closed under F ↦ T ∩ (F∩T)^≻ with
// θ pointing at the image; Δ is the centred subsets.
SelectionProblem selection_problem(const RelStructure &r, const Subset &t, Rng &rng) {
  SelectionProblem pb;
  const auto idx = t.indices();
  for (std::size_t i = 0, k = 1 + rng.below(3); i < k; ++i) {
    pb.gamma.push_back(random_subset(rng, r.size()).set(idx[rng.below(idx.size())]));
  }
  std::vector<std::size_t> theta;
  for (std::size_t i = 0; i < pb.gamma.size(); ++i) {
    const Subset g = t & down_image(r, pb.gamma[i] & t);
    std::size_t j = 0;
    while (j < pb.gamma.size() && pb.gamma[j] != g) {
      ++j;
    }
    if (j == pb.gamma.size()) {
      pb.gamma.push_back(g);
    }
    theta.push_back(j);
  }
  pb.theta = theta;
  pb.delta_pred = [r](const Subset &d) { return centred(r, d); };
  return pb;
}

Outcome totality() {
  Outcome o;
  std::size_t stretched = 0, selected = 0, seed = 9000;
  while ((stretched < 200 || selected < 200) && seed < 9000 + 2000) {
    const Instance inst = gen_instance(
        {seed, 6, seed % 2 ? InstanceKind::Poset : InstanceKind::RoundTransitive});
    ++seed;
    const RelStructure &r = *inst.rel;
    const std::size_t n = r.size();
    Rng rng(inst.seed * 31 + 5);

    if (stretched < 200) {
      for (int attempt = 0; attempt < 32; ++attempt) {
        const Subset q = random_subset(rng, n) & random_subset(rng, n);
        const Subset rr = largest_round(r, random_subset(rng, n));
        const Subset s = random_subset(rng, n) & random_subset(rng, n);
        if (!is_round(r, rr) || hatted_cover(r, CoverKind::Compact, q | rr, s)) {
          continue;
        }
        const auto t = tight_stretch(r, q, rr, s);
        ++stretched;
        if (!t) {
          o.fail(inst.name + ": stretch returned nothing");
        } else if (!rr.subset_of(t->members()) || t->members().intersects(s) ||
                   !is_tight(r, t->members()) ||
                   hatted_cover(r, CoverKind::Compact, q | t->members(), ~t->members())) {
          o.fail(inst.name + ": stretch result violates its postcondition");
        }
        break;
      }
    }

    if (selected < 200) {
      std::vector<Subset> points;
      for (const auto &t : enumerate_tight(r)) {
        if (!t.empty()) {
          points.push_back(t.members());
        }
      }
      if (points.empty()) {
        continue;
      }
      const SelectionProblem pb = selection_problem(r, points[rng.below(points.size())], rng);
      if (!selection_hypotheses(r, pb).ok()) {
        continue;
      }
      ++selected;
      const auto res = selection_solve(r, pb);
      if (!res.selector) {
        o.fail(inst.name + ": selection returned nothing");
        continue;
      }
      bool ok = is_round(r, *res.selector);
      for (const auto &d : all_subsets_of(*res.selector)) {
        ok = ok && pb.in_delta(d);
      }
      for (const auto &f : pb.gamma) {
        ok = ok && res.selector->intersects(f);
      }
      if (!ok) {
        o.fail(inst.name + ": selector violates its postcondition");
      }
    }
  }
  if (stretched < 200 || selected < 200) {
    o.fail("only " + std::to_string(stretched) + " stretch and " + std::to_string(selected) +
           " selection instances had verified preconditions");
  }
  if (o.ok) {
    o.detail = std::to_string(stretched) + " stretch and " + std::to_string(selected) +
               " selection instances, all witnessed";
  }
  return o;
}

} // namespace

int main() {
  const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria = {
      {"fixture exactness", fixtures},
      {"Boolean-algebra spectra", boolean_algebras},
      {"reduction-oracle agreement", reduction_oracles},
      {"proposition battery", proposition_battery},
      {"duality round trips", duality},
      {"groupoid construction", groupoids},
      {"etale laws", etale_laws},
      {"theorem-checker totality", totality},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception &e) {
      o.fail(std::string("exception: ") + e.what());
    }
    all = all && o.ok;
    std::printf("%s %zu %s: %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
