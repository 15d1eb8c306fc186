#include "tgpd/oracles.hpp"

#include <string>

#include "tgpd/error.hpp"

namespace tgpd::oracle {

namespace {

bool has(Mask m, std::size_t i) { return (m >> i) & 1u; }

// Calls f on every submask of m (including 0 and m); stops when f is true.
template <typename F> bool any_submask(Mask m, F &&f) {
  Mask s = m;
  while (true) {
    if (f(s)) {
      return true;
    }
    if (s == 0) {
      return false;
    }
    s = (s - 1) & m;
  }
}

} // namespace

Brute::Brute(const RelStructure &rel) : n_(rel.size()) {
  if (n_ > kMaxSize) {
    throw CapExceeded("brute-force oracle limited to " + std::to_string(kMaxSize) +
                      " elements");
  }
  full_ = n_ == 32 ? ~Mask{0} : (Mask{1} << n_) - 1;
  m_.assign(n_, std::vector<bool>(n_, false));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      m_[i][j] = rel.prec(i, j);
    }
  }
  if (n_ <= 8) {
    dense_memo_.assign(std::size_t{1} << (2 * n_), 0);
    compact_memo_.assign(std::size_t{1} << (2 * n_), 0);
    for (Mask f = 0; f <= full_; ++f) {
      meet_tab_.push_back(meet_direct(f));
      perp_tab_.push_back(perp_direct(f));
    }
  }
}

Mask Brute::up(Mask q) const {
  Mask out = 0;
  for (std::size_t p = 0; p < n_; ++p) {
    for (std::size_t x = 0; x < n_; ++x) {
      if (has(q, x) && m_[x][p]) {
        out |= Mask{1} << p;
      }
    }
  }
  return out;
}

Mask Brute::down(Mask q) const {
  Mask out = 0;
  for (std::size_t p = 0; p < n_; ++p) {
    for (std::size_t x = 0; x < n_; ++x) {
      if (has(q, x) && m_[p][x]) {
        out |= Mask{1} << p;
      }
    }
  }
  return out;
}

bool Brute::prec_sets(Mask q, Mask r) const {
  for (std::size_t a = 0; a < n_; ++a) {
    if (!has(q, a)) {
      continue;
    }
    bool found = false;
    for (std::size_t b = 0; b < n_ && !found; ++b) {
      found = has(r, b) && m_[a][b];
    }
    if (!found) {
      return false;
    }
  }
  return true;
}

bool Brute::dense(Mask q, Mask r) {
  std::uint8_t *memo = nullptr;
  if (!dense_memo_.empty()) {
    memo = &dense_memo_[(std::size_t{q} << n_) | r];
    if (*memo) {
      return *memo == 2;
    }
  }
  bool ok = true;
  for (std::size_t a = 0; a < n_ && ok; ++a) {
    bool below_q = false;
    for (std::size_t x = 0; x < n_; ++x) {
      below_q = below_q || (has(q, x) && m_[a][x]);
    }
    if (!below_q) {
      continue;
    }
    bool found = false;
    for (std::size_t b = 0; b < n_ && !found; ++b) {
      if (!m_[b][a]) {
        continue;
      }
      for (std::size_t y = 0; y < n_ && !found; ++y) {
        found = has(r, y) && m_[b][y];
      }
    }
    ok = found;
  }
  if (memo) {
    *memo = ok ? 2 : 1;
  }
  return ok;
}

bool Brute::compact(Mask q, Mask r) {
  std::uint8_t *memo = nullptr;
  if (!compact_memo_.empty()) {
    memo = &compact_memo_[(std::size_t{q} << n_) | r];
    if (*memo) {
      return *memo == 2;
    }
  }
  bool ok = false;
  for (Mask f = 0; f <= full_ && !ok; ++f) {
    ok = prec_sets(f, r) && dense(q, f);
    if (f == full_) {
      break;
    }
  }
  if (memo) {
    *memo = ok ? 2 : 1;
  }
  return ok;
}

Mask Brute::meet(Mask f) const {
  return meet_tab_.empty() ? meet_direct(f) : meet_tab_[f];
}

Mask Brute::meet_direct(Mask f) const {
  Mask out = 0;
  for (std::size_t p = 0; p < n_; ++p) {
    bool all = true;
    for (std::size_t x = 0; x < n_ && all; ++x) {
      all = !has(f, x) || m_[p][x];
    }
    if (all) {
      out |= Mask{1} << p;
    }
  }
  return out;
}

bool Brute::disjoint(Mask q, Mask r) const {
  for (std::size_t p = 0; p < n_; ++p) {
    bool bq = false, br = false;
    for (std::size_t x = 0; x < n_; ++x) {
      bq = bq || (has(q, x) && m_[p][x]);
      br = br || (has(r, x) && m_[p][x]);
    }
    if (bq && br) {
      return false;
    }
  }
  return true;
}

Mask Brute::perp(Mask q) const {
  return perp_tab_.empty() ? perp_direct(q) : perp_tab_[q];
}

Mask Brute::perp_direct(Mask q) const {
  Mask out = 0;
  for (std::size_t p = 0; p < n_; ++p) {
    if (disjoint(q, Mask{1} << p)) {
      out |= Mask{1} << p;
    }
  }
  return out;
}

bool Brute::centred(Mask q) const {
  return !any_submask(q, [&](Mask f) { return meet(f) == 0; });
}

bool Brute::round(Mask r) const {
  for (std::size_t a = 0; a < n_; ++a) {
    if (!has(r, a)) {
      continue;
    }
    bool found = false;
    for (std::size_t b = 0; b < n_ && !found; ++b) {
      found = has(r, b) && m_[b][a];
    }
    if (!found) {
      return false;
    }
  }
  return true;
}

bool Brute::hatted(CoverKind kind, Mask q, Mask r) {
  return any_submask(q, [&](Mask f) {
    const Mask mf = meet(f);
    switch (kind) {
    case CoverKind::Dense:
      return dense(mf, r);
    case CoverKind::Compact:
      return compact(mf, r);
    case CoverKind::Prec:
      return prec_sets(mf, r);
    case CoverKind::Perp:
      return disjoint(mf, r);
    }
    return false;
  });
}

bool Brute::tight(Mask t) {
  return round(t) && !hatted(CoverKind::Compact, t, full_ & ~t);
}

bool Brute::frink(Mask u) const {
  for (std::size_t x = 0; x < n_; ++x) {
    bool rhs = false;
    for (std::size_t w = 0; w < n_ && !rhs; ++w) {
      if (!m_[w][x]) {
        continue;
      }
      rhs = any_submask(u, [&](Mask f) { return prec_sets(meet(f), Mask{1} << w); });
    }
    if (rhs != has(u, x)) {
      return false;
    }
  }
  return true;
}

bool Brute::witness_covers(Mask t, Mask h) {
  const Mask rest = full_ & ~t;
  return any_submask(t, [&](Mask f) {
    const Mask mf = meet(f);
    for (Mask g = 0;; ++g) {
      if (prec_sets(g, rest) && compact(mf & perp(g), h)) {
        return true;
      }
      if (g == full_) {
        return false;
      }
    }
  });
}

bool Brute::tight_elementwise(Mask t) {
  for (std::size_t p = 0; p < n_; ++p) {
    if (witness_covers(t, Mask{1} << p) != has(t, p)) {
      return false;
    }
  }
  return true;
}

bool Brute::tight_setwise(Mask t) {
  for (Mask h = 0;; ++h) {
    if (witness_covers(t, h) != ((h & t) != 0)) {
      return false;
    }
    if (h == full_) {
      return true;
    }
  }
}

std::vector<Mask> Brute::tight_sets() {
  std::vector<Mask> out;
  for (Mask t = 0;; ++t) {
    if (tight(t)) {
      out.push_back(t);
    }
    if (t == full_) {
      return out;
    }
  }
}

std::vector<Mask> Brute::maximal_round_centred() const {
  std::vector<Mask> rc;
  for (Mask u = 0;; ++u) {
    if (round(u) && centred(u)) {
      rc.push_back(u);
    }
    if (u == full_) {
      break;
    }
  }
  std::vector<Mask> out;
  for (Mask u : rc) {
    bool maximal = true;
    for (Mask v : rc) {
      if (v != u && (u & v) == u) {
        maximal = false;
        break;
      }
    }
    if (maximal) {
      out.push_back(u);
    }
  }
  return out;
}

} // namespace tgpd::oracle
