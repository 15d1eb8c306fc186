#include "tgpd/gpd.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "tgpd/fintop.hpp"
#include "tgpd/tight.hpp"

namespace tgpd {

namespace {

void require_width(const FiniteGroupoid &g, const Subset &a) {
  if (a.width() != g.size()) {
    throw CarrierMismatch("subset width does not match the groupoid");
  }
}

// First failing item of a scan, as an optional witness.
using Found = std::optional<Witness>;

void record(ValidationReport &r, const char *name, const Found &w) {
  r.record(name, !w, w.value_or(Witness{}));
}

} // namespace

FiniteGroupoid::FiniteGroupoid(Carrier elements, std::vector<std::size_t> inv,
                               std::vector<std::vector<std::size_t>> product)
    : elements_(std::move(elements)), inv_(std::move(inv)),
      product_(std::move(product)) {}

Subset FiniteGroupoid::units() const {
  Subset u(size());
  for (std::size_t g = 0; g < size(); ++g) {
    u.set(source(g));
  }
  return u;
}

ValidationReport validate_groupoid(const FiniteGroupoid &g) {
  const std::size_t n = g.size();
  ValidationReport r;
  {
    bool ok = g.product().size() == n;
    for (std::size_t a = 0; a < n && ok; ++a) {
      ok = g.inverse(a) < n && g.product()[a].size() == n;
      for (std::size_t b = 0; b < n && ok; ++b) {
        ok = g.mul(a, b) < n || g.mul(a, b) == kUndefined;
      }
    }
    r.record("shape", ok, Witness{{}, "inverse map or product table malformed"});
    if (!ok) {
      return r;
    }
  }
  Found w;
  for (std::size_t a = 0; a < n && !w; ++a) {
    if (g.inverse(g.inverse(a)) != a) {
      w = Witness{{a}, "(g⁻¹)⁻¹ ≠ g"};
    }
  }
  record(r, "involution", w);

  w.reset();
  for (std::size_t a = 0; a < n && !w; ++a) {
    if (!g.composable(g.inverse(a), a) || !g.composable(a, g.inverse(a))) {
      w = Witness{{a}, "g⁻¹g or gg⁻¹ undefined"};
    }
  }
  record(r, "inverse_products", w);
  if (w) {
    return r;
  }

  w.reset();
  for (std::size_t a = 0; a < n && !w; ++a) {
    for (std::size_t b = 0; b < n && !w; ++b) {
      if (g.composable(a, b) != (g.source(a) == g.range(b))) {
        w = Witness{{a, b}, "composability differs from g⁻¹g = hh⁻¹"};
      }
    }
  }
  record(r, "composability", w);

  w.reset();
  for (std::size_t a = 0; a < n && !w; ++a) {
    for (std::size_t b = 0; b < n && !w; ++b) {
      if (!g.composable(a, b)) {
        continue;
      }
      for (std::size_t c = 0; c < n && !w; ++c) {
        const std::size_t ab = g.mul(a, b);
        if (!g.composable(ab, c) || !g.composable(b, c)) {
          continue;
        }
        const std::size_t bc = g.mul(b, c);
        if (!g.composable(a, bc) || g.mul(ab, c) != g.mul(a, bc)) {
          w = Witness{{a, b, c}, "(gh)k ≠ g(hk)"};
        }
      }
    }
  }
  record(r, "associative", w);

  w.reset();
  for (std::size_t a = 0; a < n && !w; ++a) {
    const std::size_t aa = g.mul(a, g.inverse(a));
    if (!g.composable(aa, a) || g.mul(aa, a) != a) {
      w = Witness{{a}, "gg⁻¹g ≠ g"};
    }
  }
  record(r, "ginvg", w);

  w.reset();
  const Subset units = g.units();
  units.for_each([&](std::size_t u) {
    for (std::size_t h = 0; h < n && !w; ++h) {
      if ((g.composable(u, h) && g.mul(u, h) != h) ||
          (g.composable(h, u) && g.mul(h, u) != h)) {
        w = Witness{{u, h}, "unit does not act neutrally"};
      }
    }
  });
  record(r, "units_neutral", w);
  return r;
}

Subset pointwise_product(const FiniteGroupoid &g, const Subset &a, const Subset &b) {
  require_width(g, a);
  require_width(g, b);
  Subset out(g.size());
  a.for_each([&](std::size_t x) {
    b.for_each([&](std::size_t y) {
      if (g.composable(x, y)) {
        out.set(g.mul(x, y));
      }
    });
  });
  return out;
}

Subset pointwise_inverse(const FiniteGroupoid &g, const Subset &a) {
  require_width(g, a);
  Subset out(g.size());
  a.for_each([&](std::size_t x) { out.set(g.inverse(x)); });
  return out;
}

bool bisection_check(const FiniteGroupoid &g, const Subset &b) {
  const Subset units = g.units();
  const Subset bi = pointwise_inverse(g, b);
  return pointwise_product(g, bi, b).subset_of(units) &&
         pointwise_product(g, b, bi).subset_of(units);
}

std::vector<Subset> all_bisections(const FiniteGroupoid &g) {
  if (g.size() > 20) {
    throw CapExceeded("all_bisections supports at most 20 elements");
  }
  std::vector<Subset> out;
  for_each_subset_of(Subset::full(g.size()), [&](const Subset &b) {
    if (bisection_check(g, b)) {
      out.push_back(b);
    }
    return true;
  });
  return out;
}

ValidationReport validate_etale_family(const FiniteGroupoid &g,
                                       const std::vector<Subset> &members) {
  for (const auto &m : members) {
    require_width(g, m);
  }
  const std::unordered_set<Subset> index(members.begin(), members.end());
  auto in_family = [&](const Subset &s) { return s.empty() || index.count(s) != 0; };
  ValidationReport r;
  Found w;
  for (const auto &m : members) {
    if (!bisection_check(g, m)) {
      w = Witness{{m}, "member is not a bisection"};
      break;
    }
  }
  record(r, "bisections", w);

  Subset covered(g.size());
  for (const auto &m : members) {
    covered |= m;
  }
  r.record("cover", covered.is_full(), Witness{{~covered}, "elements in no member"});

  w.reset();
  for (const auto &a : members) {
    for (const auto &b : members) {
      if (!w && !in_family(pointwise_product(g, a, b))) {
        w = Witness{{a, b}, "product is not a member"};
      }
    }
  }
  record(r, "product_closed", w);

  w.reset();
  for (const auto &a : members) {
    if (!in_family(pointwise_inverse(g, a))) {
      w = Witness{{a}, "inverse is not a member"};
      break;
    }
  }
  record(r, "inverse_closed", w);
  return r;
}

ValidationReport functor_check(const FiniteGroupoid &g,
                               const std::vector<Subset> &members) {
  const auto fam = dedupe_members(members);
  const std::size_t k = fam.size();
  ValidationReport r;
  if (k == 0) {
    r.pass("functor_inverse");
    r.pass("functor_product");
    return r;
  }
  std::unordered_map<Subset, std::size_t> pos;
  for (std::size_t i = 0; i < k; ++i) {
    pos.emplace(fam[i], i);
  }
  auto member_of = [&](const Subset &s) -> std::optional<std::size_t> {
    const auto it = pos.find(s);
    return it == pos.end() ? std::nullopt : std::optional<std::size_t>(it->second);
  };
  std::vector<Subset> tg(g.size(), Subset(k));
  for (std::size_t x = 0; x < g.size(); ++x) {
    for (std::size_t i = 0; i < k; ++i) {
      if (fam[i].test(x)) {
        tg[x].set(i);
      }
    }
  }
  auto up = [&](const Subset &a) {
    Subset out(k);
    a.for_each([&](std::size_t i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (fam[i].subset_of(fam[j])) {
          out.set(j);
        }
      }
    });
    return out;
  };

  Found wi, wp;
  for (std::size_t x = 0; x < g.size(); ++x) {
    Subset inv(k);
    bool closed = true;
    tg[x].for_each([&](std::size_t i) {
      const auto j = member_of(pointwise_inverse(g, fam[i]));
      if (j) {
        inv.set(*j);
      } else {
        closed = false;
      }
    });
    if (!wi && (!closed || inv != tg[g.inverse(x)])) {
      wi = Witness{{x}, "T_{g⁻¹} ≠ T_g⁻¹"};
    }
    for (std::size_t y = 0; y < g.size() && !wp; ++y) {
      if (!g.composable(x, y)) {
        continue;
      }
      Subset prod(k);
      bool ok = true;
      tg[x].for_each([&](std::size_t i) {
        tg[y].for_each([&](std::size_t j) {
          const Subset p = pointwise_product(g, fam[i], fam[j]);
          if (const auto m = member_of(p)) {
            prod.set(*m);
          } else if (p.any()) {
            ok = false;
          }
        });
      });
      if (!ok || up(prod) != tg[g.mul(x, y)]) {
        wp = Witness{{x, y}, "T_{gh} ≠ (T_g T_h)^≤"};
      }
    }
  }
  record(r, "functor_inverse", wi);
  record(r, "functor_product", wp);
  return r;
}

ValidationReport intersection_preserving(const FiniteGroupoid &g,
                                         const std::vector<Subset> &members) {
  const auto fam = dedupe_members(members);
  const std::size_t k = fam.size();
  ValidationReport r;
  Found w;
  if (k > 0) {
    const auto dom = quantifier_domain(k, 6);
    auto meet = [&](const Subset &pick) {
      Subset out = Subset::full(g.size());
      pick.for_each([&](std::size_t i) { out &= fam[i]; });
      return out;
    };
    for (const auto &a : dom) {
      if (a.empty() || w) {
        continue;
      }
      for (const auto &b : dom) {
        if (b.empty()) {
          continue;
        }
        Subset rhs = Subset::full(g.size());
        a.for_each([&](std::size_t i) {
          b.for_each([&](std::size_t j) {
            rhs &= pointwise_product(g, fam[i], fam[j]);
          });
        });
        if (pointwise_product(g, meet(a), meet(b)) != rhs) {
          w = Witness{{meet(a), meet(b)}, "(⋂A)(⋂B) ≠ ⋂AB"};
          break;
        }
      }
    }
  }
  record(r, "intersection_preserving", w);
  return r;
}

ValidationReport coherent_etale(const FiniteGroupoid &g,
                                const std::vector<Subset> &members) {
  const FiniteSpace discrete = FiniteSpace::discrete(g.elements());
  const FiniteSpace xp = generate_XP(discrete, members);
  const FiniteSpace pt = patch(xp);
  auto open_bisections = [&](const FiniteSpace &sp) {
    std::vector<Subset> out;
    for (const auto &o : sp.opens()) {
      if (o.any() && bisection_check(g, o)) {
        out.push_back(o);
      }
    }
    return out;
  };
  ValidationReport r;
  r.merge(validate_etale_family(g, open_bisections(xp)), "XP.");
  r.merge(validate_etale_family(g, open_bisections(pt)), "patch.");
  r.record("patch_discrete", pt == discrete,
           Witness{{}, "patch of the generated topology is not discrete"});
  return r;
}

TightGroupoid tight_groupoid(const OrderedInvSemigroup &os) {
  const ValidationReport pseudobasic = validate_pseudobasic(os);
  if (const Check *c = pseudobasic.first_failure()) {
    throw PreconditionViolation("tight_groupoid: not pseudobasic (" + c->name + ")");
  }
  const InvSemigroup &s = os.base();
  TightGroupoid tg;
  tg.semigroup = os;
  for (const auto &t : enumerate_tight(os.P())) {
    if (!t.empty()) {
      tg.points.push_back(os.from_P(t.members()));
    }
  }
  const std::size_t m = tg.points.size();
  auto find_point = [&](const Subset &c) {
    const auto it = std::find(tg.points.begin(), tg.points.end(), c);
    if (it == tg.points.end()) {
      throw Defect("tight groupoid not closed: " + s.elements().format(c));
    }
    return static_cast<std::size_t>(it - tg.points.begin());
  };
  std::vector<std::string> labels;
  std::vector<std::size_t> inv(m);
  std::vector<std::vector<std::size_t>> prod(m, std::vector<std::size_t>(m, kUndefined));
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back(s.elements().format(tg.points[i]));
    inv[i] = find_point(set_inverse(s, tg.points[i]));
    for (std::size_t j = 0; j < m; ++j) {
      if (const auto c = coset_product(s, Coset{tg.points[i]}, Coset{tg.points[j]})) {
        prod[i][j] = find_point(c->members);
      }
    }
  }
  tg.groupoid = FiniteGroupoid(Carrier(std::move(labels)), std::move(inv), std::move(prod));
  const FiniteGroupoid &g = tg.groupoid;

  auto O = [&](std::size_t x) {
    Subset out(m);
    for (std::size_t i = 0; i < m; ++i) {
      if (tg.points[i].test(x)) {
        out.set(i);
      }
    }
    return out;
  };
  const Subset below = down_image(os.prec(), os.prec().full_set());
  below.for_each([&](std::size_t x) {
    tg.family_index.push_back(x);
    tg.family.push_back(O(x));
  });

  ValidationReport &r = tg.report;
  r.merge(validate_groupoid(g), "groupoid.");
  if (!r.ok()) {
    return tg;
  }
  r.merge(validate_etale_family(g, tg.family), "family.");
  Found wss, wprod, winv;
  for (std::size_t x = 0; x < s.size(); ++x) {
    const Subset ox = O(x);
    if (!winv && pointwise_inverse(g, ox) != O(s.inverse(x))) {
      winv = Witness{{x}, "O_s⁻¹ ≠ O_{s⁻¹}"};
    }
    if (!below.test(x)) {
      continue;
    }
    if (!wss && pointwise_product(g, ox, pointwise_inverse(g, ox)) !=
                    O(s.mul(x, s.inverse(x)))) {
      wss = Witness{{x}, "O_sO_s⁻¹ ≠ O_{ss⁻¹}"};
    }
    for (std::size_t y = 0; y < s.size() && !wprod; ++y) {
      if (pointwise_product(g, ox, O(y)) != O(s.mul(x, y))) {
        wprod = Witness{{x, y}, "O_sO_t ≠ O_{st}"};
      }
    }
  }
  record(r, "ss-1", wss);
  record(r, "product", wprod);
  record(r, "inverse", winv);
  r.merge(functor_check(g, tg.family));
  return tg;
}

OrderedInvSemigroup bisection_semigroup(const FiniteGroupoid &g,
                                        const std::vector<Subset> &members) {
  for (const auto &m : members) {
    require_width(g, m);
    if (m.empty()) {
      throw PreconditionViolation("bisection_semigroup: ∅ is a member");
    }
  }
  const ValidationReport etale = validate_etale_family(g, members);
  if (const Check *c = etale.first_failure()) {
    throw PreconditionViolation("bisection_semigroup: not an étale family (" +
                                c->name + ")");
  }
  const FiniteSpace space = FiniteSpace::discrete(g.elements());
  const ValidationReport pb = is_pseudobasis(space, members);
  if (const Check *c = pb.first_failure()) {
    throw PreconditionViolation("bisection_semigroup: not a pseudobasis (" +
                                c->name + ")");
  }
  std::vector<Subset> elems{Subset(g.size())};
  for (const auto &m : dedupe_members(members)) {
    elems.push_back(m);
  }
  const std::size_t n = elems.size();
  std::vector<std::string> labels{"0"};
  for (std::size_t i = 1; i < n; ++i) {
    labels.push_back(g.elements().format(elems[i]));
  }
  auto index_of = [&](const Subset &x) {
    return static_cast<std::size_t>(std::find(elems.begin(), elems.end(), x) -
                                    elems.begin());
  };
  Table t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      t[a][b] = index_of(pointwise_product(g, elems[a], elems[b]));
    }
  }
  Carrier carrier(std::move(labels));
  std::vector<std::pair<std::size_t, std::size_t>> prec;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (way_below(space, elems[a], elems[b])) {
        prec.emplace_back(a, b);
      }
    }
  }
  RelStructure rel(carrier, prec);
  return OrderedInvSemigroup(InvSemigroup(std::move(carrier), std::move(t)),
                             std::move(rel));
}

ValidationReport recover_groupoid(const FiniteGroupoid &g,
                                  const std::vector<Subset> &members) {
  const OrderedInvSemigroup os = bisection_semigroup(g, members);
  ValidationReport r;
  r.merge(validate_pseudobasic(os), "S.");
  if (!r.ok()) {
    return r;
  }
  const TightGroupoid tg = tight_groupoid(os);
  r.merge(tg.report, "T.");
  const auto fam = dedupe_members(members);
  std::vector<std::size_t> map(g.size());
  Found w;
  for (std::size_t x = 0; x < g.size() && !w; ++x) {
    Subset tx(os.base().size());
    for (std::size_t i = 0; i < fam.size(); ++i) {
      if (fam[i].test(x)) {
        tx.set(i + 1);
      }
    }
    const auto it = std::find(tg.points.begin(), tg.points.end(), tx);
    if (it == tg.points.end()) {
      w = Witness{{x}, "T_g is not a tight set"};
    } else {
      map[x] = static_cast<std::size_t>(it - tg.points.begin());
    }
  }
  record(r, "Tx_points", w);
  if (!w) {
    r.merge(iso_report(g, tg.groupoid, map), "iso.");
  }
  return r;
}

ValidationReport iso_report(const FiniteGroupoid &g1, const FiniteGroupoid &g2,
                            const std::vector<std::size_t> &map) {
  ValidationReport r;
  const std::size_t n = g1.size();
  bool bij = map.size() == n && g2.size() == n;
  Subset hit(std::max<std::size_t>(g2.size(), 1));
  for (std::size_t x = 0; x < map.size() && bij; ++x) {
    bij = map[x] < g2.size() && !hit.test(map[x]);
    if (bij) {
      hit.set(map[x]);
    }
  }
  r.record("bijective", bij, Witness{{}, "map is not a bijection"});
  if (!bij) {
    return r;
  }
  Found wi, wc, wp;
  for (std::size_t a = 0; a < n; ++a) {
    if (!wi && map[g1.inverse(a)] != g2.inverse(map[a])) {
      wi = Witness{{a}, "inverse not preserved"};
    }
    for (std::size_t b = 0; b < n; ++b) {
      const bool c1 = g1.composable(a, b);
      if (!wc && c1 != g2.composable(map[a], map[b])) {
        wc = Witness{{a, b}, "composability not preserved"};
      }
      if (!wp && c1 && g2.composable(map[a], map[b]) &&
          map[g1.mul(a, b)] != g2.mul(map[a], map[b])) {
        wp = Witness{{a, b}, "product not preserved"};
      }
    }
  }
  record(r, "inverse", wi);
  record(r, "composable", wc);
  record(r, "product", wp);
  return r;
}

bool iso_check(const FiniteGroupoid &g1, const FiniteGroupoid &g2,
               const std::vector<std::size_t> &map) {
  return iso_report(g1, g2, map).ok();
}

std::optional<std::vector<std::size_t>> find_isomorphism(const FiniteGroupoid &g1,
                                                         const FiniteGroupoid &g2) {
  const std::size_t n = g1.size();
  if (g2.size() != n) {
    return std::nullopt;
  }
  const Subset u1 = g1.units();
  const Subset u2 = g2.units();
  if (u1.count() != u2.count()) {
    return std::nullopt;
  }
  std::vector<std::size_t> order = u1.indices();
  for (auto x : (~u1).indices()) {
    order.push_back(x);
  }
  std::vector<std::size_t> map(n, kUndefined);
  std::vector<bool> used(n, false);
  auto consistent = [&](std::size_t a) {
    const std::size_t fa = map[a];
    const std::size_t ia = g1.inverse(a);
    if (map[ia] != kUndefined && map[ia] != g2.inverse(fa)) {
      return false;
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (map[b] == kUndefined) {
        continue;
      }
      for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
        const bool c1 = g1.composable(x, y);
        if (c1 != g2.composable(map[x], map[y])) {
          return false;
        }
        if (c1) {
          const std::size_t p = map[g1.mul(x, y)];
          if (p != kUndefined && p != g2.mul(map[x], map[y])) {
            return false;
          }
        }
      }
    }
    return true;
  };
  auto go = [&](auto &&self, std::size_t k) -> bool {
    if (k == n) {
      return true;
    }
    const std::size_t a = order[k];
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || u1.test(a) != u2.test(c)) {
        continue;
      }
      map[a] = c;
      used[c] = true;
      if (consistent(a) && self(self, k + 1)) {
        return true;
      }
      used[c] = false;
      map[a] = kUndefined;
    }
    return false;
  };
  if (go(go, 0) && iso_check(g1, g2, map)) {
    return map;
  }
  return std::nullopt;
}

FiniteGroupoid pair_groupoid(std::size_t k) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      labels.push_back("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
  }
  const std::size_t n = k * k;
  std::vector<std::size_t> inv(n);
  std::vector<std::vector<std::size_t>> prod(n, std::vector<std::size_t>(n, kUndefined));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      inv[i * k + j] = j * k + i;
      for (std::size_t l = 0; l < k; ++l) {
        prod[i * k + j][j * k + l] = i * k + l;
      }
    }
  }
  return FiniteGroupoid(Carrier(std::move(labels)), std::move(inv), std::move(prod));
}

FiniteGroupoid unit_groupoid(std::size_t k) {
  std::vector<std::string> labels;
  std::vector<std::size_t> inv(k);
  std::vector<std::vector<std::size_t>> prod(k, std::vector<std::size_t>(k, kUndefined));
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back("u" + std::to_string(i + 1));
    inv[i] = i;
    prod[i][i] = i;
  }
  return FiniteGroupoid(Carrier(std::move(labels)), std::move(inv), std::move(prod));
}

std::string groupoid_dot(const FiniteGroupoid &g) {
  auto quote = [](const std::string &s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') {
        out += '\\';
      }
      out += c;
    }
    return out + "\"";
  };
  const Subset units = g.units();
  std::ostringstream out;
  out << "digraph groupoid {\n";
  units.for_each([&](std::size_t u) {
    out << "  " << quote(g.elements().name(u)) << " [shape=box];\n";
  });
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (units.test(x)) {
      continue;
    }
    out << "  " << quote(g.elements().name(g.source(x))) << " -> "
        << quote(g.elements().name(g.range(x))) << " [label="
        << quote(g.elements().name(x)) << "];\n";
  }
  out << "}\n";
  return out.str();
}

} // namespace tgpd
