#include "tgpd/fintop.hpp"

#include <algorithm>

namespace tgpd {

namespace {

void check_width(const FiniteSpace &space, const Subset &s) {
  if (s.width() != space.size()) {
    throw CarrierMismatch("subset of width " + std::to_string(s.width()) +
                          " used with a space of " +
                          std::to_string(space.size()) + " points");
  }
}

void require_open(const FiniteSpace &space, const Subset &s, const char *what) {
  check_width(space, s);
  if (!space.is_open(s)) {
    throw InvalidStructure(std::string(what) + ": " +
                           space.points().format(s) + " is not open");
  }
}

std::vector<Subset> neighbourhoods_of(std::size_t n,
                                      const std::vector<Subset> &family) {
  std::vector<Subset> nbhd(n, Subset::full(n));
  for (const auto &b : family) {
    b.for_each([&](std::size_t x) { nbhd[x] &= b; });
  }
  return nbhd;
}

Subset union_of(std::size_t width, const std::vector<Subset> &members,
                const Subset &pick) {
  Subset out(width);
  pick.for_each([&](std::size_t i) { out |= members[i]; });
  return out;
}

Subset meet_of(std::size_t width, const std::vector<Subset> &members,
               const Subset &pick) {
  Subset out = Subset::full(width);
  pick.for_each([&](std::size_t i) { out &= members[i]; });
  return out;
}

// Subsets of the member index set that a quantifier ranges over: all of
// them for small families, those of size at most two otherwise.
std::vector<Subset> index_families(std::size_t m, std::size_t exhaustive_up_to) {
  const std::size_t width = std::max<std::size_t>(m, 1);
  if (m <= exhaustive_up_to) {
    std::vector<Subset> out;
    for_each_subset_of(m ? Subset::full(m) : Subset(width),
                       [&](const Subset &s) {
                         out.push_back(s);
                         return true;
                       });
    return out;
  }
  std::vector<Subset> out{Subset(width)};
  for (std::size_t i = 0; i < m; ++i) {
    out.push_back(Subset::singleton(width, i));
    for (std::size_t j = i + 1; j < m; ++j) {
      out.push_back(Subset::of(width, {i, j}));
    }
  }
  return out;
}

} // namespace

FiniteSpace::FiniteSpace(Carrier points, std::vector<Subset> opens)
    : points_(std::move(points)), opens_(std::move(opens)) {
  const std::size_t n = points_.size();
  for (const auto &o : opens_) {
    if (o.width() != n) {
      throw CarrierMismatch("open set width does not match point count");
    }
  }
  std::sort(opens_.begin(), opens_.end());
  opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
  index();
  if (!is_open(Subset(n))) {
    throw InvalidStructure("the empty set must be open");
  }
  if (!is_open(Subset::full(n))) {
    throw InvalidStructure("the full point set must be open");
  }
  for (std::size_t i = 0; i < opens_.size(); ++i) {
    for (std::size_t j = i + 1; j < opens_.size(); ++j) {
      if (!is_open(opens_[i] | opens_[j])) {
        throw InvalidStructure("opens not closed under union: " +
                               points_.format(opens_[i]) + " ∪ " +
                               points_.format(opens_[j]));
      }
      if (!is_open(opens_[i] & opens_[j])) {
        throw InvalidStructure("opens not closed under intersection: " +
                               points_.format(opens_[i]) + " ∩ " +
                               points_.format(opens_[j]));
      }
    }
  }
}

void FiniteSpace::index() {
  index_ = std::unordered_set<Subset>(opens_.begin(), opens_.end());
  nbhd_ = neighbourhoods_of(points_.size(), opens_);
}

FiniteSpace FiniteSpace::generated(Carrier points,
                                   const std::vector<Subset> &family) {
  const std::size_t n = points.size();
  for (const auto &b : family) {
    if (b.width() != n) {
      throw CarrierMismatch("generating set width does not match point count");
    }
  }
  FiniteSpace s;
  s.points_ = std::move(points);
  s.opens_ = unions_of_neighbourhoods(neighbourhoods_of(n, family));
  s.index();
  return s;
}

FiniteSpace FiniteSpace::discrete(Carrier points) {
  std::vector<Subset> family;
  for (std::size_t i = 0; i < points.size(); ++i) {
    family.push_back(Subset::singleton(points.size(), i));
  }
  return generated(std::move(points), family);
}

FiniteSpace FiniteSpace::indiscrete(Carrier points) {
  return generated(std::move(points), {});
}

std::vector<Subset> unions_of_neighbourhoods(const std::vector<Subset> &nbhd) {
  const std::size_t n = nbhd.size();
  // rev[y] = {x : y ∈ nbhd[x]}; excluding y from U forces these out.
  std::vector<Subset> rev(n, Subset(n));
  for (std::size_t x = 0; x < n; ++x) {
    nbhd[x].for_each([&](std::size_t y) { rev[y].set(x); });
  }
  std::vector<Subset> out;
  auto go = [&](auto &&self, Subset inc, Subset exc) -> void {
    if (inc.intersects(exc)) {
      return;
    }
    const Subset undecided = ~(inc | exc);
    if (undecided.empty()) {
      if (out.size() >= kMaxOpens) {
        throw CapExceeded("topology has more than " +
                          std::to_string(kMaxOpens) + " opens");
      }
      out.push_back(inc);
      return;
    }
    const std::size_t x = undecided.first();
    self(self, inc | nbhd[x], exc);
    self(self, inc, exc | rev[x]);
  };
  go(go, Subset(n), Subset(n));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subset> close_family_naive(std::size_t width,
                                       const std::vector<Subset> &family) {
  std::unordered_set<Subset> seen(family.begin(), family.end());
  seen.insert(Subset::full(width));
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Subset> cur(seen.begin(), seen.end());
    for (const auto &a : cur) {
      for (const auto &b : cur) {
        grew = seen.insert(a & b).second || grew;
      }
    }
  }
  seen.insert(Subset(width));
  grew = true;
  while (grew) {
    grew = false;
    const std::vector<Subset> cur(seen.begin(), seen.end());
    for (const auto &a : cur) {
      for (const auto &b : cur) {
        grew = seen.insert(a | b).second || grew;
      }
    }
  }
  std::vector<Subset> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

RelStructure specialization_order(const FiniteSpace &space) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 0; x < space.size(); ++x) {
    space.neighbourhood(x).for_each([&](std::size_t y) { pairs.emplace_back(x, y); });
  }
  return RelStructure(space.points(), pairs);
}

Subset saturation(const FiniteSpace &space, const Subset &a) {
  check_width(space, a);
  Subset out(space.size());
  a.for_each([&](std::size_t x) { out |= space.neighbourhood(x); });
  return out;
}

std::vector<Subset> compact_saturated(const FiniteSpace &space) {
  std::vector<Subset> sat;
  for (std::size_t x = 0; x < space.size(); ++x) {
    sat.push_back(saturation(space, Subset::singleton(space.size(), x)));
  }
  return unions_of_neighbourhoods(sat);
}

Subset closure(const FiniteSpace &space, const Subset &a) {
  check_width(space, a);
  Subset out(space.size());
  for (std::size_t x = 0; x < space.size(); ++x) {
    if (space.neighbourhood(x).intersects(a)) {
      out.set(x);
    }
  }
  return out;
}

Subset interior(const FiniteSpace &space, const Subset &a) {
  check_width(space, a);
  Subset out(space.size());
  for (std::size_t x = 0; x < space.size(); ++x) {
    if (space.neighbourhood(x).subset_of(a)) {
      out.set(x);
    }
  }
  return out;
}

bool way_below(const FiniteSpace &space, const Subset &o, const Subset &n) {
  require_open(space, o, "way_below");
  require_open(space, n, "way_below");
  // Every finite set is compact, and the saturation of a compact set is
  // compact; it is the smallest saturated candidate for C.
  return saturation(space, o).subset_of(n);
}

FiniteSpace patch(const FiniteSpace &space) {
  std::vector<Subset> family = space.opens();
  for (const auto &c : compact_saturated(space)) {
    family.push_back(~c);
  }
  return FiniteSpace::generated(space.points(), family);
}

ValidationReport classify(const FiniteSpace &space) {
  const std::size_t n = space.size();
  ValidationReport r;
  auto pair_check = [&](const char *name, auto &&ok_pair, const char *note) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (x != y && !ok_pair(x, y)) {
          r.fail(name, Witness{{x, y}, note});
          return false;
        }
      }
    }
    r.pass(name);
    return true;
  };
  pair_check("T0", [&](std::size_t x, std::size_t y) {
    return !space.neighbourhood(x).test(y) || !space.neighbourhood(y).test(x);
  }, "points are topologically indistinguishable");
  pair_check("T1", [&](std::size_t x, std::size_t y) {
    return !space.neighbourhood(x).test(y);
  }, "every open containing x contains y");
  pair_check("hausdorff", [&](std::size_t x, std::size_t y) {
    return !space.neighbourhood(x).intersects(space.neighbourhood(y));
  }, "no disjoint open neighbourhoods");

  bool lc = true;
  for (std::size_t x = 0; x < n && lc; ++x) {
    for (const auto &u : space.opens()) {
      if (!u.test(x)) {
        continue;
      }
      const Subset &v = space.neighbourhood(x);
      const Subset k = saturation(space, v);
      if (!(v.subset_of(k) && k.subset_of(u))) {
        r.fail("locally_compact", Witness{{x, u}, "no compact neighbourhood inside"});
        lc = false;
        break;
      }
    }
  }
  if (lc) {
    r.pass("locally_compact");
  }

  const auto cs = compact_saturated(space);
  const std::unordered_set<Subset> cs_set(cs.begin(), cs.end());
  bool cap_closed = true;
  Witness cw;
  for (std::size_t i = 0; i < cs.size() && cap_closed; ++i) {
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      if (!cs_set.count(cs[i] & cs[j])) {
        cap_closed = false;
        cw = Witness{{cs[i], cs[j]}, "intersection not compact saturated"};
        break;
      }
    }
  }
  const bool coherent = lc && cap_closed;
  r.record("coherent", coherent, cw);
  // Every family of compact saturated sets is finite here, so the family
  // itself is the required finite subfamily.
  r.pass("well_filtered");
  r.record("stably_locally_compact", coherent,
           Witness{{}, "not coherent"});
  return r;
}

namespace {

void require_open_members(const FiniteSpace &space,
                          const std::vector<Subset> &members) {
  for (const auto &m : members) {
    require_open(space, m, "pseudo(sub)basis member");
  }
}

void check_separating(const FiniteSpace &space,
                      const std::vector<Subset> &members, ValidationReport &r) {
  for (std::size_t x = 0; x < space.size(); ++x) {
    for (std::size_t y = x + 1; y < space.size(); ++y) {
      const bool ok = std::any_of(members.begin(), members.end(), [&](auto &o) {
        return o.test(x) != o.test(y);
      });
      if (!ok) {
        r.fail("separating", Witness{{x, y}, "no member distinguishes"});
        return;
      }
    }
  }
  r.pass("separating");
}

} // namespace

ValidationReport is_pseudosubbasis(const FiniteSpace &space,
                                   const std::vector<Subset> &members) {
  require_open_members(space, members);
  const std::size_t n = space.size();
  const std::size_t m = members.size();
  ValidationReport r;
  r.pass("open");
  check_separating(space, members, r);

  bool ok = true;
  for (const auto &f : index_families(m, 16)) {
    const Subset meet_f = meet_of(n, members, f);
    meet_f.for_each([&](std::size_t x) {
      if (!ok) {
        return;
      }
      // The members containing x give the smallest finite meet around x.
      Subset g(std::max<std::size_t>(m, 1));
      for (std::size_t i = 0; i < m; ++i) {
        if (members[i].test(x)) {
          g.set(i);
        }
      }
      if (!way_below(space, meet_of(n, members, g), meet_f)) {
        ok = false;
        r.fail("cap_point_round", Witness{{f, x}, "no finite meet around x ⋐ ⋂F"});
      }
    });
    if (!ok) {
      break;
    }
  }
  if (ok) {
    r.pass("cap_point_round");
  }
  return r;
}

ValidationReport is_pseudobasis(const FiniteSpace &space,
                                const std::vector<Subset> &members) {
  require_open_members(space, members);
  const std::size_t n = space.size();
  ValidationReport r;
  r.pass("open");

  {
    Subset covered(n);
    for (const auto &o : members) {
      covered |= o;
    }
    const Subset missing = ~covered;
    if (missing.any()) {
      r.fail("cover", Witness{{missing.first()}, "point in no member"});
    } else {
      r.pass("cover");
    }
  }

  check_separating(space, members, r);

  {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      for (std::size_t i = 0; i < members.size() && ok; ++i) {
        if (!members[i].test(x)) {
          continue;
        }
        const bool found = std::any_of(members.begin(), members.end(), [&](auto &nb) {
          return nb.test(x) && way_below(space, nb, members[i]);
        });
        if (!found) {
          ok = false;
          r.fail("point_round", Witness{{x, members[i]}, "no member around x ⋐ O"});
        }
      }
    }
    if (ok) {
      r.pass("point_round");
    }
  }

  {
    bool ok = true;
    for (const auto &o : space.opens()) {
      if (o.empty()) {
        continue;
      }
      const bool found = std::any_of(members.begin(), members.end(), [&](auto &nb) {
        return nb.any() && nb.subset_of(o);
      });
      if (!found) {
        ok = false;
        r.fail("dense", Witness{{o}, "non-empty open contains no non-empty member"});
        break;
      }
    }
    if (ok) {
      r.pass("dense");
    }
  }

  {
    bool ok = true;
    for (const auto &o : members) {
      for (const auto &nb : members) {
        const bool lower = std::all_of(members.begin(), members.end(), [&](auto &mm) {
          return !way_below(space, mm, o) || way_below(space, mm, nb);
        });
        if (o.subset_of(nb) != lower && ok) {
          ok = false;
          r.fail("lower_order", Witness{{o, nb}, "⊆ differs from the lower ⋐ order"});
        }
      }
    }
    if (ok) {
      r.pass("lower_order");
    }
  }
  return r;
}

ValidationReport is_pseudobasis_reformulated(const FiniteSpace &space,
                                             const std::vector<Subset> &members) {
  require_open_members(space, members);
  const std::size_t n = space.size();
  ValidationReport r;
  auto below_union = [&](const Subset &o) {
    Subset u(n);
    for (const auto &nb : members) {
      if (way_below(space, nb, o)) {
        u |= nb;
      }
    }
    return u;
  };

  {
    std::vector<Subset> targets = members;
    targets.push_back(Subset::full(n));
    bool ok = true;
    for (const auto &o : targets) {
      if (below_union(o) != o) {
        ok = false;
        r.fail("cover_point_round", Witness{{o}, "not the union of members ⋐ it"});
        break;
      }
    }
    if (ok) {
      r.pass("cover_point_round");
    }
  }

  {
    bool ok = true;
    for (const auto &o : space.opens()) {
      if (closure(space, o) != closure(space, below_union(o))) {
        ok = false;
        r.fail("dense_closure", Witness{{o}, "closures differ"});
        break;
      }
    }
    if (ok) {
      r.pass("dense_closure");
    }
  }

  {
    bool ok = true;
    for (std::size_t x = 0; x < n; ++x) {
      Subset cell = Subset::full(n);
      for (const auto &o : members) {
        cell &= o.test(x) ? o : ~o;
      }
      if (cell != Subset::singleton(n, x)) {
        ok = false;
        r.fail("separating_meet", Witness{{x, cell}, "cell of x is not {x}"});
        break;
      }
    }
    if (ok) {
      r.pass("separating_meet");
    }
  }
  return r;
}

ConcretePseudobasis make_concrete_pseudobasis(FiniteSpace space,
                                              std::vector<Subset> members) {
  const ValidationReport r = is_pseudobasis(space, members);
  if (const Check *c = r.first_failure()) {
    throw InvalidStructure("not a pseudobasis: check '" + c->name +
                           "' failed " +
                           format_witness(*c->witness, &space.points()));
  }
  return ConcretePseudobasis{std::move(space), std::move(members)};
}

FiniteSpace generate_XP(const FiniteSpace &space,
                        const std::vector<Subset> &members) {
  const ValidationReport sub = is_pseudosubbasis(space, members);
  if (const Check *c = sub.first_failure()) {
    throw PreconditionViolation("generate_XP: members are not a pseudosubbasis (" +
                                c->name + ")");
  }
  if (!classify(space).passed("hausdorff")) {
    throw PreconditionViolation("generate_XP: space is not Hausdorff");
  }
  return FiniteSpace::generated(space.points(), members);
}

bool patch_roundtrip(const FiniteSpace &space,
                     const std::vector<Subset> &members) {
  return patch(generate_XP(space, members)) == space;
}

std::vector<Subset> dedupe_members(const std::vector<Subset> &members) {
  std::vector<Subset> out = members;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RelStructure abstract_of_concrete(const FiniteSpace &space,
                                  const std::vector<Subset> &members) {
  for (const auto &m : members) {
    check_width(space, m);
    if (m.empty()) {
      throw PreconditionViolation("abstract_of_concrete: ∅ is a member");
    }
  }
  const ValidationReport pb = is_pseudobasis(space, members);
  if (const Check *c = pb.first_failure()) {
    throw PreconditionViolation("abstract_of_concrete: not a pseudobasis (" +
                                c->name + ")");
  }
  if (!classify(space).passed("hausdorff")) {
    throw PreconditionViolation("abstract_of_concrete: space is not Hausdorff");
  }
  const auto distinct = dedupe_members(members);
  std::vector<std::string> names;
  for (const auto &m : distinct) {
    names.push_back(space.points().format(m));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    for (std::size_t j = 0; j < distinct.size(); ++j) {
      if (way_below(space, distinct[i], distinct[j])) {
        pairs.emplace_back(i, j);
      }
    }
  }
  return RelStructure(Carrier(std::move(names)), pairs);
}

ValidationReport cover_representation(const FiniteSpace &space,
                                      const std::vector<Subset> &members) {
  const RelStructure rel = abstract_of_concrete(space, members);
  const auto distinct = dedupe_members(members);
  const std::size_t n = space.size();
  const auto fams = index_families(distinct.size(), 6);
  bool perp_ok = true, d_ok = true, c_ok = true;
  Witness pw, dw, cw;
  for (const auto &q : fams) {
    const Subset uq = union_of(n, distinct, q);
    for (const auto &r : fams) {
      const Subset ur = union_of(n, distinct, r);
      if (perp_ok && disjoint(rel, q, r) != !uq.intersects(ur)) {
        perp_ok = false;
        pw = Witness{{q, r}, "⊥ differs from disjoint unions"};
      }
      if (d_ok && dense_cover(rel, q, r) != uq.subset_of(closure(space, ur))) {
        d_ok = false;
        dw = Witness{{q, r}, "D differs from ⋃Q ⊆ cl ⋃R"};
      }
      if (c_ok && compact_cover(rel, q, r) != way_below(space, uq, ur)) {
        c_ok = false;
        cw = Witness{{q, r}, "C differs from ⋃Q ⋐ ⋃R"};
      }
    }
  }
  ValidationReport rep;
  rep.record("QperpR", perp_ok, pw);
  rep.record("QDR", d_ok, dw);
  rep.record("QCR", c_ok, cw);
  return rep;
}

} // namespace tgpd
