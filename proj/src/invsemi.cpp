#include "tgpd/invsemi.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <tuple>

#include "tgpd/tight.hpp"

namespace tgpd {

namespace {

void require_width(const InvSemigroup &s, const Subset &a) {
  if (a.width() != s.size()) {
    throw CarrierMismatch("subset width does not match the semigroup");
  }
}

std::vector<std::size_t> generalised_inverses(const Table &t, std::size_t s) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < t.size(); ++x) {
    if (t[t[s][x]][s] == s && t[t[x][s]][x] == x) {
      out.push_back(x);
    }
  }
  return out;
}

std::optional<std::size_t> find_zero(const Table &t) {
  for (std::size_t z = 0; z < t.size(); ++z) {
    bool ok = true;
    for (std::size_t s = 0; s < t.size() && ok; ++s) {
      ok = t[z][s] == z && t[s][z] == z;
    }
    if (ok) {
      return z;
    }
  }
  return std::nullopt;
}

} // namespace

ValidationReport validate_inverse_semigroup(
    const Carrier &elements, const Table &table,
    const std::optional<std::vector<std::size_t>> &inv) {
  const std::size_t n = elements.size();
  ValidationReport r;
  bool shape = table.size() == n;
  for (std::size_t a = 0; a < table.size() && shape; ++a) {
    shape = table[a].size() == n &&
            std::all_of(table[a].begin(), table[a].end(),
                        [&](std::size_t x) { return x < n; });
    if (!shape) {
      r.fail("table_shape", Witness{{a}, "row has the wrong length or entries"});
    }
  }
  if (!shape) {
    if (table.size() != n) {
      r.fail("table_shape", Witness{{}, "row count differs from element count"});
    }
    return r;
  }
  r.pass("table_shape");

  {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      for (std::size_t b = 0; b < n && ok; ++b) {
        for (std::size_t c = 0; c < n && ok; ++c) {
          if (table[table[a][b]][c] != table[a][table[b][c]]) {
            ok = false;
            r.fail("associative", Witness{{a, b, c}, "(ab)c ≠ a(bc)"});
          }
        }
      }
    }
    if (ok) {
      r.pass("associative");
    }
  }

  {
    bool ok = true;
    if (inv && inv->size() != n) {
      ok = false;
      r.fail("inverses", Witness{{}, "inverse map has the wrong length"});
    }
    for (std::size_t s = 0; s < n && ok; ++s) {
      const auto gi = generalised_inverses(table, s);
      if (gi.size() != 1) {
        ok = false;
        r.fail("inverses", Witness{{s}, gi.empty() ? "no generalised inverse"
                                                   : "generalised inverse not unique"});
      } else if (inv && ((*inv)[s] >= n || (*inv)[s] != gi.front())) {
        ok = false;
        r.fail("inverses", Witness{{s}, "supplied inverse is not the generalised inverse"});
      }
    }
    if (ok) {
      r.pass("inverses");
    }
  }

  {
    bool ok = true;
    for (std::size_t e = 0; e < n && ok; ++e) {
      for (std::size_t f = 0; f < n && ok; ++f) {
        if (table[e][e] == e && table[f][f] == f && table[e][f] != table[f][e]) {
          ok = false;
          r.fail("idempotents_commute", Witness{{e, f}, "ef ≠ fe"});
        }
      }
    }
    if (ok) {
      r.pass("idempotents_commute");
    }
  }

  r.record("zero", find_zero(table).has_value(), Witness{{}, "no zero element"},
           true);
  return r;
}

InvSemigroup::InvSemigroup(Carrier elements, Table table,
                           std::optional<std::vector<std::size_t>> inv)
    : elements_(std::move(elements)), table_(std::move(table)) {
  const ValidationReport r = validate_inverse_semigroup(elements_, table_, inv);
  if (const Check *c = r.first_failure()) {
    throw InvalidStructure("not an inverse semigroup: check '" + c->name +
                           "' failed " + format_witness(*c->witness, &elements_));
  }
  const std::size_t n = elements_.size();
  inv_.resize(n);
  for (std::size_t s = 0; s < n; ++s) {
    inv_[s] = generalised_inverses(table_, s).front();
  }
  zero_ = find_zero(table_);
  leq_.assign(n, Subset(n));
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      if (mul(inv_[s], s) == mul(inv_[s], t)) {
        leq_[s].set(t);
      }
    }
  }
}

Subset InvSemigroup::idempotents() const {
  Subset e(size());
  for (std::size_t a = 0; a < size(); ++a) {
    if (is_idempotent(a)) {
      e.set(a);
    }
  }
  return e;
}

InvSemigroup InvSemigroup::restricted(const Subset &keep) const {
  require_width(*this, keep);
  const auto idx = keep.indices();
  std::vector<std::size_t> pos(size(), size());
  std::vector<std::string> names;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    pos[idx[k]] = k;
    names.push_back(elements_.name(idx[k]));
  }
  Table t(idx.size(), std::vector<std::size_t>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = 0; j < idx.size(); ++j) {
      const std::size_t p = mul(idx[i], idx[j]);
      if (!keep.test(p)) {
        throw InvalidStructure("subset is not closed under products");
      }
      t[i][j] = pos[p];
    }
    if (!keep.test(inverse(idx[i]))) {
      throw InvalidStructure("subset is not closed under inverses");
    }
  }
  return InvSemigroup(Carrier(std::move(names)), std::move(t));
}

RelStructure canonical_order(const InvSemigroup &s) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < s.size(); ++a) {
    s.above(a).for_each([&](std::size_t b) { pairs.emplace_back(a, b); });
  }
  return RelStructure(s.elements(), pairs);
}

ValidationReport canonical_order_agreement(const InvSemigroup &s) {
  const std::size_t n = s.size();
  const Subset e = s.idempotents();
  ValidationReport r;
  bool f1 = true, f2 = true;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const bool leq = s.leq(a, b);
      const bool alt = s.mul(a, s.inverse(a)) == s.mul(b, s.inverse(a));
      bool left = false, right = false;
      e.for_each([&](std::size_t x) {
        left = left || s.mul(x, b) == a;
        right = right || s.mul(b, x) == a;
      });
      if (f1 && leq != alt) {
        f1 = false;
        r.fail("ss-1_form", Witness{{a, b}, "s⁻¹s = s⁻¹t differs from ss⁻¹ = ts⁻¹"});
      }
      if (f2 && leq != (left && right)) {
        f2 = false;
        r.fail("Et_form", Witness{{a, b}, "s⁻¹s = s⁻¹t differs from s ∈ Et ∩ tE"});
      }
    }
  }
  if (f1) {
    r.pass("ss-1_form");
  }
  if (f2) {
    r.pass("Et_form");
  }
  return r;
}

Subset set_product(const InvSemigroup &s, const Subset &a, const Subset &b) {
  require_width(s, a);
  require_width(s, b);
  Subset out(s.size());
  a.for_each([&](std::size_t x) {
    b.for_each([&](std::size_t y) { out.set(s.mul(x, y)); });
  });
  return out;
}

Subset set_inverse(const InvSemigroup &s, const Subset &a) {
  require_width(s, a);
  Subset out(s.size());
  a.for_each([&](std::size_t x) { out.set(s.inverse(x)); });
  return out;
}

Subset up_closure(const InvSemigroup &s, const Subset &a) {
  require_width(s, a);
  Subset out(s.size());
  a.for_each([&](std::size_t x) { out |= s.above(x); });
  return out;
}

Subset down_closure(const InvSemigroup &s, const Subset &a) {
  require_width(s, a);
  Subset out(s.size());
  for (std::size_t x = 0; x < s.size(); ++x) {
    if (s.above(x).intersects(a)) {
      out.set(x);
    }
  }
  return out;
}

Subset left_translate(const InvSemigroup &s, std::size_t x, const Subset &a) {
  return set_product(s, Subset::singleton(s.size(), x), a);
}

Subset right_translate(const InvSemigroup &s, const Subset &a, std::size_t x) {
  return set_product(s, a, Subset::singleton(s.size(), x));
}

bool is_coset(const InvSemigroup &s, const Subset &c) {
  const Subset ccc = set_product(s, set_product(s, c, set_inverse(s, c)), c);
  return ccc == c && up_closure(s, c) == c;
}

Coset coset_closure(const InvSemigroup &s, const Subset &c) {
  const Subset up = up_closure(s, c);
  const Subset ccc = set_product(s, set_product(s, c, set_inverse(s, c)), c);
  if (!ccc.subset_of(up)) {
    throw PreconditionViolation("coset_closure: CC⁻¹C ⊄ C^≤");
  }
  return Coset{up};
}

std::optional<Coset> coset_product(const InvSemigroup &s, const Coset &c,
                                   const Coset &d) {
  const Subset &cm = c.members;
  const Subset &dm = d.members;
  if (up_closure(s, set_product(s, set_inverse(s, cm), cm)) !=
      up_closure(s, set_product(s, dm, set_inverse(s, dm)))) {
    return std::nullopt;
  }
  Coset out{up_closure(s, set_product(s, cm, dm))};
  if (!is_coset(s, out.members)) {
    throw Defect("product of composable cosets is not a coset");
  }
  return out;
}

OrderedInvSemigroup::OrderedInvSemigroup(InvSemigroup base)
    : OrderedInvSemigroup(base, canonical_order(base)) {}

OrderedInvSemigroup::OrderedInvSemigroup(InvSemigroup base, RelStructure prec)
    : base_(std::move(base)), prec_(std::move(prec)) {
  if (!(prec_.carrier() == base_.elements())) {
    throw CarrierMismatch("≺ is not over the semigroup's elements");
  }
  Subset keep = Subset::full(base_.size());
  if (base_.zero()) {
    keep.reset(*base_.zero());
  }
  p_elems_ = keep.indices();
  if (keep.any()) {
    p_ = prec_.restricted(keep);
  }
}

Subset OrderedInvSemigroup::to_P(const Subset &a) const {
  require_width(base_, a);
  Subset out(p_elems_.size());
  for (std::size_t k = 0; k < p_elems_.size(); ++k) {
    if (a.test(p_elems_[k])) {
      out.set(k);
    }
  }
  return out;
}

Subset OrderedInvSemigroup::from_P(const Subset &a) const {
  if (a.width() != p_elems_.size()) {
    throw CarrierMismatch("subset width does not match P");
  }
  Subset out(base_.size());
  a.for_each([&](std::size_t k) { out.set(p_elems_[k]); });
  return out;
}

ValidationReport validate_ordered(const OrderedInvSemigroup &os) {
  const InvSemigroup &s = os.base();
  const RelStructure &p = os.prec();
  const std::size_t n = s.size();
  const auto pairs = p.pairs();
  ValidationReport r;

  auto scan = [&](const char *name, auto &&body) {
    std::optional<Witness> w;
    body(w);
    r.record(name, !w, w.value_or(Witness{}));
  };

  scan("prec_in_order", [&](std::optional<Witness> &w) {
    for (auto [a, b] : pairs) {
      if (!s.leq(a, b)) {
        w = Witness{{a, b}, "q ≺ r but not q ≤ r"};
        return;
      }
    }
  });
  scan("left_auxiliary", [&](std::optional<Witness> &w) {
    for (auto [q, q2] : pairs) {
      const Subset bad = s.above(q2) - p.above(q);
      if (bad.any()) {
        w = Witness{{q, q2, bad.first()}, "q ≺ q′ ≤ r but not q ≺ r"};
        return;
      }
    }
  });
  scan("transitive", [&](std::optional<Witness> &w) {
    for (auto [a, b] : pairs) {
      const Subset bad = p.above(b) - p.above(a);
      if (bad.any()) {
        w = Witness{{a, b, bad.first()}, "a ≺ b ≺ c but not a ≺ c"};
        return;
      }
    }
  });
  scan("multiplicative", [&](std::optional<Witness> &w) {
    for (auto [q, q2] : pairs) {
      for (auto [a, b] : pairs) {
        if (!p.prec(s.mul(q, a), s.mul(q2, b))) {
          w = Witness{{q, q2, a, b}, "q ≺ q′, r ≺ r′ but not qr ≺ q′r′"};
          return;
        }
      }
    }
  });
  scan("invertive", [&](std::optional<Witness> &w) {
    for (auto [a, b] : pairs) {
      if (!p.prec(s.inverse(a), s.inverse(b))) {
        w = Witness{{a, b}, "q ≺ r but not q⁻¹ ≺ r⁻¹"};
        return;
      }
    }
  });

  const Subset below_something = down_image(p, p.full_set());
  auto ac_bc = [&](bool arbitrary) {
    for (std::size_t x = 0; x < n; ++x) {
      if (!arbitrary && !below_something.test(x)) {
        continue;
      }
      const std::size_t xx = s.mul(x, s.inverse(x));
      for (auto [q, rr] : pairs) {
        if (s.leq(s.mul(s.inverse(rr), rr), xx) &&
            !p.prec(s.mul(q, x), s.mul(rr, x))) {
          return std::optional<Witness>(Witness{{q, rr, x}, "q ≺ r but not qs ≺ rs"});
        }
      }
    }
    return std::optional<Witness>{};
  };
  {
    const auto w = ac_bc(false);
    r.record("ac<bc", !w, w.value_or(Witness{}));
  }
  {
    const auto w = ac_bc(true);
    r.record("ac<bc_arbitrary", !w, w.value_or(Witness{}), true);
  }
  return r;
}

ValidationReport validate_pseudobasic(const OrderedInvSemigroup &os) {
  ValidationReport r = validate_ordered(os);
  if (!os.base().zero()) {
    r.fail("has_zero", Witness{{}, "no zero element"});
    return r;
  }
  r.pass("has_zero");
  if (os.p_elements().empty()) {
    r.fail("P_nonempty", Witness{{}, "S = {0}"});
    return r;
  }
  r.merge(validate_pseudobasis(os.P()), "P.");
  return r;
}

bool semigroup_dense(const OrderedInvSemigroup &s, const Subset &q,
                     const Subset &r) {
  return dense_cover(s.P(), s.to_P(q), s.to_P(r));
}

bool semigroup_compact(const OrderedInvSemigroup &s, const Subset &q,
                       const Subset &r) {
  return compact_cover(s.P(), s.to_P(q), s.to_P(r));
}

bool semigroup_disjoint(const OrderedInvSemigroup &s, const Subset &q,
                        const Subset &r) {
  return disjoint(s.P(), s.to_P(q), s.to_P(r));
}

ValidationReport semigroup_laws(const OrderedInvSemigroup &os) {
  const InvSemigroup &s = os.base();
  const std::size_t n = s.size();
  const Subset zero = os.base().zero() ? Subset::singleton(n, *s.zero()) : Subset(n);
  ValidationReport r;

  std::vector<Subset> cosets;
  if (n <= 12) {
    for_each_subset_of(Subset::full(n), [&](const Subset &c) {
      if (is_coset(s, c)) {
        cosets.push_back(c);
      }
      return true;
    });
  }

  if (n <= 7) {
    std::optional<Witness> w;
    const auto all = all_subsets(n);
    for (const auto &c : cosets) {
      if (c.empty() || w) {
        continue;
      }
      const Subset cc = up_closure(s, set_product(s, c, set_inverse(s, c)));
      for (const auto &t : all) {
        if (t.empty() || w) {
          continue;
        }
        const Subset ti = set_inverse(s, t);
        const Subset tc = up_closure(s, set_product(s, t, c));
        for (const auto &u : all) {
          if (u.empty()) {
            continue;
          }
          const Subset tu = set_product(s, ti, u);
          const bool lhs = tu.subset_of(cc);
          const bool mid = set_product(s, tu, c).subset_of(c);
          if (lhs != mid) {
            w = Witness{{t, u, c}, "T⁻¹U ⊆ (CC⁻¹)^≤ differs from T⁻¹UC ⊆ C"};
            break;
          }
          if (mid && tc != up_closure(s, set_product(s, u, c))) {
            w = Witness{{t, u, c}, "(TC)^≤ ≠ (UC)^≤"};
            break;
          }
        }
      }
    }
    r.record("T-1U", !w, w.value_or(Witness{}));
  }

  {
    std::optional<Witness> w;
    if (n <= 12) {
      for_each_subset_of(Subset::full(n), [&](const Subset &t) {
        if (is_frink_filter(os.prec(), t) && !is_coset(s, t)) {
          w = Witness{{t}, "Frink filter is not a coset"};
          return false;
        }
        return true;
      });
    }
    r.record("frink_coset", !w, w.value_or(Witness{}));
  }

  const auto dom = quantifier_domain(n, n <= 7 ? 6 : 0);
  {
    std::optional<Witness> wp, wd;
    for (const auto &q : dom) {
      const Subset dq = down_closure(s, q);
      const Subset dq0 = dq - zero;
      for (const auto &rr : dom) {
        const Subset dr = down_closure(s, rr);
        const Subset dr0 = dr - zero;
        const bool perp = semigroup_disjoint(os, q, rr);
        if (!wp && (dq & dr).subset_of(zero) != perp) {
          wp = Witness{{q, rr}, "Q^≥ ∩ R^≥ ⊆ {0} differs from Q ⊥ R"};
        }
        const bool dense = semigroup_dense(os, q, rr);
        bool order_form = true;
        dq0.for_each([&](std::size_t a) {
          order_form = order_form && (dr0 & down_closure(s, Subset::singleton(n, a))).any();
        });
        if (!wd && order_form != dense) {
          wd = Witness{{q, rr}, "Q^≥∖0 ≥ R^≥∖0 differs from Q D R"};
        }
        for (std::size_t x = 0; x < n; ++x) {
          const Subset qs = right_translate(s, q, x);
          const Subset rs = right_translate(s, rr, x);
          if (!wp && perp && !semigroup_disjoint(os, qs, rs)) {
            wp = Witness{{q, rr, x}, "Q ⊥ R but not Qs ⊥ Rs"};
          }
          if (!wd && dense && !semigroup_dense(os, qs, rs)) {
            wd = Witness{{q, rr, x}, "Q D R but not Qs D Rs"};
          }
        }
      }
    }
    r.record("QperpR0", !wp, wp.value_or(Witness{}));
    r.record("QDR0", !wd, wd.value_or(Witness{}));
  }

  {
    std::vector<std::pair<Subset, Subset>> dpairs, cpairs;
    for (const auto &q : dom) {
      for (const auto &q2 : dom) {
        if (semigroup_dense(os, q, q2)) {
          dpairs.emplace_back(q, q2);
        }
        if (semigroup_compact(os, q, q2)) {
          cpairs.emplace_back(q, q2);
        }
      }
    }
    // Bounded, deterministic sample of pair-of-pairs.
    constexpr std::size_t kBudget = 40000;
    auto law = [&](const char *name, const std::vector<std::pair<Subset, Subset>> &ps,
                   auto &&rel) {
      std::optional<Witness> w;
      auto test = [&](std::size_t i, std::size_t j) {
        const auto &[q, q2] = ps[i];
        const auto &[a, b] = ps[j];
        if (!rel(set_product(s, q, a), set_product(s, q2, b))) {
          w = Witness{{q, q2, a, b}, "product of covers is not a cover"};
        }
      };
      if (ps.size() * ps.size() <= kBudget) {
        for (std::size_t i = 0; i < ps.size() && !w; ++i) {
          for (std::size_t j = 0; j < ps.size() && !w; ++j) {
            test(i, j);
          }
        }
      } else {
        Rng rng(ps.size());
        for (std::size_t k = 0; k < kBudget && !w; ++k) {
          test(rng.below(ps.size()), rng.below(ps.size()));
        }
      }
      r.record(name, !w, w.value_or(Witness{}));
    };
    law("QRDQ'R'", dpairs, [&](const Subset &a, const Subset &b) {
      return semigroup_dense(os, a, b);
    });
    law("QRCQ'R'", cpairs, [&](const Subset &a, const Subset &b) {
      return semigroup_compact(os, a, b);
    });
  }

  std::vector<Subset> tights;
  for (const auto &t : enumerate_tight(os.P())) {
    if (!t.empty()) {
      tights.push_back(os.from_P(t.members()));
    }
  }

  {
    std::optional<Witness> w;
    const Subset below_something = down_image(os.prec(), os.prec().full_set());
    for (const auto &t : tights) {
      const Subset tt = up_closure(s, set_product(s, set_inverse(s, t), t));
      below_something.for_each([&](std::size_t x) {
        if (w || !tt.test(s.mul(x, s.inverse(x)))) {
          return;
        }
        const Subset u = up_closure(s, right_translate(s, t, x));
        if (u.intersects(zero) || !is_tight(os.P(), os.to_P(u))) {
          w = Witness{{t, x}, "(Ts)^≤ is not tight"};
        }
      });
    }
    r.record("TsTight", !w, w.value_or(Witness{}));
  }

  {
    std::optional<Witness> w;
    for (const auto &t : tights) {
      if (!is_coset(s, t)) {
        w = Witness{{t}, "tight set is not a coset"};
      } else if (set_product(s, set_inverse(s, t), t).intersects(zero)) {
        w = Witness{{t}, "0 ∈ T⁻¹T"};
      }
      if (w) {
        break;
      }
    }
    r.record("tight_coset", !w, w.value_or(Witness{}));
  }

  {
    std::optional<Witness> w;
    std::vector<Subset> pool = cosets;
    pool.insert(pool.end(), tights.begin(), tights.end());
    const Subset e = s.idempotents();
    for (const auto &c : pool) {
      const bool has_e = c.intersects(e);
      const bool unit = c == up_closure(s, set_product(s, c, set_inverse(s, c)));
      if (!c.empty() && has_e != unit) {
        w = Witness{{c}, "C ∩ E ≠ ∅ differs from C = (CC⁻¹)^≤"};
        break;
      }
    }
    r.record("idempotent_cosets", !w, w.value_or(Witness{}));
  }
  return r;
}

InvSemigroup meet_semilattice(
    Carrier elements, const std::vector<std::pair<std::size_t, std::size_t>> &leq) {
  const std::size_t n = elements.size();
  std::vector<Subset> up(n, Subset(n));
  for (std::size_t i = 0; i < n; ++i) {
    up[i].set(i);
  }
  for (auto [a, b] : leq) {
    if (a >= n || b >= n) {
      throw InvalidStructure("order pair out of range");
    }
    up[a].set(b);
  }
  // Warshall on the up-sets.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (up[i].test(k)) {
        up[i] |= up[k];
      }
    }
  }
  Table t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::optional<std::size_t> meet;
      for (std::size_t z = 0; z < n && !meet; ++z) {
        if (!(up[z].test(a) && up[z].test(b))) {
          continue;
        }
        bool greatest = true;
        for (std::size_t w = 0; w < n && greatest; ++w) {
          if (up[w].test(a) && up[w].test(b)) {
            greatest = up[w].test(z);
          }
        }
        if (greatest) {
          meet = z;
        }
      }
      if (!meet) {
        throw InvalidStructure("elements " + elements.name(a) + " and " +
                               elements.name(b) + " have no meet");
      }
      t[a][b] = *meet;
    }
  }
  return InvSemigroup(std::move(elements), std::move(t));
}

InvSemigroup boolean_semilattice(std::size_t n) {
  if (n > 6) {
    throw CapExceeded("boolean_semilattice supports at most 6 atoms");
  }
  const std::size_t m = std::size_t{1} << n;
  std::vector<std::string> names;
  for (std::size_t mask = 0; mask < m; ++mask) {
    std::string label;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1u) {
        label += std::to_string(i + 1);
      }
    }
    names.push_back(label.empty() ? "0" : label);
  }
  Table t(m, std::vector<std::size_t>(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      t[a][b] = a & b;
    }
  }
  return InvSemigroup(Carrier(std::move(names)), std::move(t));
}

InvSemigroup semilattice_e5() {
  return meet_semilattice(Carrier({"0", "x", "y", "t"}),
                          {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

InvSemigroup symmetric_inverse_monoid(std::size_t n) {
  if (n < 1 || n > 3) {
    throw CapExceeded("symmetric_inverse_monoid supports 1 ≤ n ≤ 3");
  }
  using Map = std::array<int, 3>;
  std::vector<Map> maps;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= n + 1;
  }
  for (std::size_t code = 0; code < total; ++code) {
    Map m{-1, -1, -1};
    std::size_t c = code;
    unsigned used = 0;
    bool injective = true;
    for (std::size_t i = 0; i < n; ++i) {
      m[i] = static_cast<int>(c % (n + 1)) - 1;
      c /= n + 1;
      if (m[i] >= 0) {
        injective = injective && !((used >> m[i]) & 1u);
        used |= 1u << m[i];
      }
    }
    if (injective) {
      maps.push_back(m);
    }
  }
  auto label = [&](const Map &m) {
    std::string s;
    for (std::size_t i = 0; i < n; ++i) {
      s += m[i] < 0 ? '-' : static_cast<char>('1' + m[i]);
    }
    return s;
  };
  auto domain = [&](const Map &m) {
    unsigned d = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] >= 0) {
        d |= 1u << i;
      }
    }
    return d;
  };
  auto idempotent = [&](const Map &m) {
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] >= 0 && m[i] != static_cast<int>(i)) {
        return false;
      }
    }
    return true;
  };
  std::sort(maps.begin(), maps.end(), [&](const Map &a, const Map &b) {
    const auto ka = std::make_tuple(!idempotent(a), domain(a), label(a));
    const auto kb = std::make_tuple(!idempotent(b), domain(b), label(b));
    return ka < kb;
  });
  std::vector<std::string> names;
  for (const auto &m : maps) {
    names.push_back(label(m));
  }
  Table t(maps.size(), std::vector<std::size_t>(maps.size()));
  for (std::size_t a = 0; a < maps.size(); ++a) {
    for (std::size_t b = 0; b < maps.size(); ++b) {
      Map c{-1, -1, -1};
      for (std::size_t x = 0; x < n; ++x) {
        const int y = maps[b][x];
        c[x] = y < 0 ? -1 : maps[a][static_cast<std::size_t>(y)];
      }
      t[a][b] = static_cast<std::size_t>(
          std::find(maps.begin(), maps.end(), c) - maps.begin());
    }
  }
  return InvSemigroup(Carrier(std::move(names)), std::move(t));
}

InvSemigroup generated_subsemigroup(const InvSemigroup &s, const Subset &gens) {
  require_width(s, gens);
  Subset cur = gens;
  if (s.zero()) {
    cur.set(*s.zero());
  }
  for (;;) {
    const Subset next = cur | set_inverse(s, cur) | set_product(s, cur, cur);
    if (next == cur) {
      break;
    }
    cur = next;
  }
  return s.restricted(cur);
}

InvSemigroup random_inverse_subsemigroup(Rng &rng, std::size_t n) {
  const InvSemigroup full = symmetric_inverse_monoid(n);
  Subset gens(full.size());
  const std::size_t k = 1 + rng.below(3);
  for (std::size_t i = 0; i < k; ++i) {
    gens.set(1 + rng.below(full.size() - 1));
  }
  return generated_subsemigroup(full, gens);
}

} // namespace tgpd
