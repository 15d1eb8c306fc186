#include "tgpd/tight.hpp"

#include <algorithm>
#include <unordered_set>

#include "tgpd/rng.hpp"

namespace tgpd {

namespace {

Subset up_closure(const RelStructure &rel, Subset s) {
  for (;;) {
    const Subset next = s | up_image(rel, s);
    if (next == s) {
      return s;
    }
    s = next;
  }
}

Subset down_closure(const RelStructure &rel, Subset s) {
  for (;;) {
    const Subset next = s | down_image(rel, s);
    if (next == s) {
      return s;
    }
    s = next;
  }
}

bool hatted_c(const RelStructure &rel, const Subset &q, const Subset &r) {
  return hatted_cover(rel, CoverKind::Compact, q, r);
}

// Depth-first search over up-closed subsets between `inc` and the
// complement of `exc`. `prune(inc, exc)` returning true kills a branch;
// `leaf(set)` receives each surviving up-closed set.
template <typename Prune, typename Leaf>
void search_up_closed(const RelStructure &rel, Subset inc, Subset exc,
                      Prune &&prune, Leaf &&leaf) {
  if (inc.intersects(exc) || prune(inc, exc)) {
    return;
  }
  const Subset undecided = ~(inc | exc);
  if (undecided.empty()) {
    leaf(inc);
    return;
  }
  const std::size_t p = undecided.first();
  const Subset single = Subset::singleton(rel.size(), p);
  search_up_closed(rel, up_closure(rel, inc | single), exc, prune, leaf);
  search_up_closed(rel, inc, down_closure(rel, exc | single), prune, leaf);
}

} // namespace

bool is_frink_filter(const RelStructure &rel, const Subset &u) {
  const Subset meet = formal_meet(rel, u);
  for (std::size_t p = 0; p < rel.size(); ++p) {
    bool rhs = false;
    rel.below(p).for_each([&](std::size_t w) {
      rhs = rhs || meet.subset_of(rel.below(w));
    });
    if (rhs != u.test(p)) {
      return false;
    }
  }
  return true;
}

bool is_tight(const RelStructure &rel, const Subset &t) {
  return is_round(rel, t) && !hatted_c(rel, t, ~t);
}

Subset tight_generated(const RelStructure &rel, const Subset &t) {
  const Subset g = down_image(rel, ~t);
  const Subset core = formal_meet(rel, t) & perp_set(rel, g);
  Subset out = rel.empty_set();
  for (std::size_t p = 0; p < rel.size(); ++p) {
    if (compact_cover(rel, core, Subset::singleton(rel.size(), p))) {
      out.set(p);
    }
  }
  return out;
}

bool satisfies_tight_elementwise(const RelStructure &rel, const Subset &t) {
  return tight_generated(rel, t) == t;
}

bool satisfies_tight_setwise(const RelStructure &rel, const Subset &t) {
  const Subset g = down_image(rel, ~t);
  const Subset core = formal_meet(rel, t) & perp_set(rel, g);
  return for_each_subset_of(rel.full_set(), [&](const Subset &h) {
    return h.intersects(t) == compact_cover(rel, core, h);
  });
}

TightSet::TightSet(const RelStructure &rel, Subset members)
    : members_(std::move(members)) {
  if (!is_tight(rel, members_)) {
    throw InvalidStructure("subset " + rel.carrier().format(members_) +
                           " is not tight");
  }
}

std::vector<Subset> enumerate_tight_between(const RelStructure &rel,
                                            const Subset &must_in,
                                            const Subset &must_out) {
  require_pseudobasis(rel, "tight enumeration");
  std::vector<Subset> out;
  search_up_closed(
      rel, up_closure(rel, must_in), down_closure(rel, must_out),
      [&](const Subset &inc, const Subset &exc) {
        return hatted_c(rel, inc, exc);
      },
      [&](const Subset &t) {
        if (is_tight(rel, t)) {
          out.push_back(t);
        }
      });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TightSet> enumerate_tight(const RelStructure &rel) {
  std::vector<TightSet> out;
  for (auto &t : enumerate_tight_between(rel, rel.empty_set(),
                                         rel.empty_set())) {
    out.emplace_back(rel, std::move(t));
  }
  return out;
}

std::vector<Subset> maximal_round_centred(const RelStructure &rel) {
  std::vector<Subset> cands;
  search_up_closed(
      rel, rel.empty_set(), rel.empty_set(),
      [&](const Subset &inc, const Subset &) { return !centred(rel, inc); },
      [&](const Subset &u) {
        if (is_round(rel, u)) {
          cands.push_back(u);
        }
      });
  std::vector<Subset> out;
  for (const auto &u : cands) {
    const bool dominated = std::any_of(cands.begin(), cands.end(), [&](auto &v) {
      return v != u && u.subset_of(v);
    });
    if (!dominated) {
      out.push_back(u);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Selection

bool SelectionProblem::in_delta(const Subset &d) const {
  if (delta_list) {
    return std::find(delta_list->begin(), delta_list->end(), d) !=
           delta_list->end();
  }
  return delta_pred && delta_pred(d);
}

namespace {

constexpr std::size_t kExhaustiveDelta = 12;
constexpr std::size_t kDeltaSamples = 256;
constexpr std::size_t kMaxGammaSubsets = 16;
constexpr std::size_t kMaxSearchNodes = 1u << 20;

// Candidate members of Δ over which the hypothesis quantifiers run.
std::vector<Subset> delta_domain(const RelStructure &rel,
                                 const SelectionProblem &pb) {
  if (pb.delta_list) {
    return *pb.delta_list;
  }
  std::vector<Subset> out;
  if (rel.size() <= kExhaustiveDelta) {
    for (auto &d : all_subsets(rel.size())) {
      if (pb.in_delta(d)) {
        out.push_back(d);
      }
    }
    return out;
  }
  Rng rng(rel.size());
  for (std::size_t k = 0; k < kDeltaSamples; ++k) {
    Subset d = rel.empty_set();
    for (std::size_t p = 0; p < rel.size(); ++p) {
      if (rng.chance(1, 4)) {
        d.set(p);
      }
    }
    if (pb.in_delta(d)) {
      out.push_back(d);
    }
  }
  return out;
}

bool all_subsets_in_delta(const SelectionProblem &pb, const Subset &r) {
  if (r.count() > 16) {
    return pb.in_delta(r);
  }
  return for_each_subset_of(r, [&](const Subset &d) { return pb.in_delta(d); });
}

// Subsets of r that contain p, all in Δ (r already known to satisfy FIP).
bool extension_in_delta(const SelectionProblem &pb, const Subset &r,
                        std::size_t p) {
  Subset base = r;
  base.reset(p);
  if (base.count() > 16) {
    return pb.in_delta(r);
  }
  return for_each_subset_of(base, [&](const Subset &d) {
    Subset e = d;
    e.set(p);
    return pb.in_delta(e);
  });
}

} // namespace

ValidationReport selection_hypotheses(const RelStructure &rel,
                                      const SelectionProblem &pb) {
  ValidationReport report;
  const auto domain = delta_domain(rel, pb);

  {
    bool ok = true;
    Witness w;
    for (const auto &d : domain) {
      const Subset ext = up_image(rel, d) - d;
      ext.for_each([&](std::size_t p) {
        if (ok && !pb.in_delta(d | Subset::singleton(rel.size(), p))) {
          ok = false;
          w = Witness{{p, d}, "d ≻ D ∈ Δ but {d} ∪ D ∉ Δ"};
        }
      });
      if (!ok) {
        break;
      }
    }
    report.record("succ_closed", ok, w);
  }

  {
    bool ok = true;
    Witness w;
    for (const auto &d : domain) {
      const bool sub_ok = for_each_subset_of(d, [&](const Subset &e) {
        if (!pb.in_delta(e)) {
          w = Witness{{d, e}, "D ∈ Δ but its subset is not"};
          return false;
        }
        return true;
      });
      if (!sub_ok) {
        ok = false;
        break;
      }
    }
    report.record("down_closed", ok, w);
  }

  {
    bool ok = true;
    Witness w;
    for (std::size_t i = 0; i < pb.gamma.size() && ok; ++i) {
      const bool found =
          std::any_of(pb.gamma.begin(), pb.gamma.end(), [&](const Subset &g) {
            return subset_prec(rel, g, pb.gamma[i]);
          });
      if (!found) {
        ok = false;
        w = Witness{{i, pb.gamma[i]}, "no member of Γ lies ≺ below"};
      }
    }
    report.record("prec_round", ok, w);
  }

  {
    const std::size_t m = pb.gamma.size();
    bool ok = true;
    Witness w;
    auto hits_all = [&](const Subset &d, std::uint64_t phi) {
      for (std::size_t i = 0; i < m; ++i) {
        if (((phi >> i) & 1u) && !pb.gamma[i].intersects(d)) {
          return false;
        }
      }
      return true;
    };
    auto check_phi = [&](std::uint64_t phi) {
      const bool found = std::any_of(domain.begin(), domain.end(),
                                     [&](auto &d) { return hits_all(d, phi); });
      if (!found) {
        ok = false;
        Subset idx(std::max<std::size_t>(m, 1));
        for (std::size_t i = 0; i < m; ++i) {
          if ((phi >> i) & 1u) {
            idx.set(i);
          }
        }
        w = Witness{{idx}, "no member of Δ meets every chosen Γ member"};
      }
    };
    if (m <= kMaxGammaSubsets) {
      for (std::uint64_t phi = 0; phi < (std::uint64_t{1} << m) && ok; ++phi) {
        check_phi(phi);
      }
    } else {
      Rng rng(m);
      for (std::size_t k = 0; k < 4096 && ok; ++k) {
        check_phi(rng.next() & ((std::uint64_t{1} << std::min<std::size_t>(
                                                     m, 63)) - 1));
      }
    }
    report.record("delta_centred", ok, w);
  }

  if (pb.theta) {
    bool ok = pb.theta->size() == pb.gamma.size();
    Witness w{{}, "θ must be a total map on Γ"};
    for (std::size_t i = 0; ok && i < pb.theta->size(); ++i) {
      const std::size_t j = (*pb.theta)[i];
      if (j >= pb.gamma.size() || !subset_prec(rel, pb.gamma[j], pb.gamma[i])) {
        ok = false;
        w = Witness{{i}, "Γ[θ(λ)] ⊀ Γ[λ]"};
      }
    }
    report.record("theta", ok, w);
  }
  return report;
}

SelectionResult selection_solve(const RelStructure &rel,
                                const SelectionProblem &pb) {
  for (const auto &g : pb.gamma) {
    if (g.width() != rel.size()) {
      throw CarrierMismatch("selection problem Γ member of wrong width");
    }
  }
  SelectionResult result;
  result.hypotheses = selection_hypotheses(rel, pb);
  if (!result.hypotheses.passed("succ_closed")) {
    throw InvalidStructure(
        "selection problem: Δ is not ≻-closed " +
        format_witness(*result.hypotheses.find("succ_closed")->witness,
                       &rel.carrier()));
  }

  std::optional<Subset> best;
  std::size_t nodes = 0;
  Subset chosen = rel.empty_set();
  std::function<void(std::size_t)> go = [&](std::size_t lambda) {
    if (++nodes > kMaxSearchNodes) {
      return;
    }
    if (lambda == pb.gamma.size()) {
      if (is_round(rel, chosen) && (!best || chosen < *best)) {
        best = chosen;
      }
      return;
    }
    if (chosen.intersects(pb.gamma[lambda])) {
      go(lambda + 1);
    }
    (pb.gamma[lambda] - chosen).for_each([&](std::size_t p) {
      chosen.set(p);
      if (extension_in_delta(pb, chosen, p)) {
        go(lambda + 1);
      }
      chosen.reset(p);
    });
  };
  if (pb.in_delta(chosen)) {
    go(0);
  }

  if (!best && rel.size() <= 20) {
    for_each_subset_of(rel.full_set(), [&](const Subset &r) {
      const bool selector =
          std::all_of(pb.gamma.begin(), pb.gamma.end(),
                      [&](const Subset &f) { return f.intersects(r); });
      if (selector && is_round(rel, r) && all_subsets_in_delta(pb, r)) {
        best = r;
        return false;
      }
      return true;
    });
  }

  result.selector = best;
  if (!best && result.hypotheses.ok()) {
    throw Defect("selection search found no selector although every "
                 "hypothesis holds");
  }
  return result;
}

std::optional<TightSet> tight_stretch(const RelStructure &rel, const Subset &q,
                                      const Subset &r, const Subset &s) {
  require_pseudobasis(rel, "tight_stretch");
  if (!is_round(rel, r)) {
    throw PreconditionViolation("tight_stretch: R = " + rel.carrier().format(r) +
                                " is not round");
  }
  if (hatted_c(rel, q | r, s)) {
    throw PreconditionViolation("tight_stretch: Q ∪ R Ĉ S");
  }
  for (const auto &t : enumerate_tight_between(rel, r, s)) {
    if (!hatted_c(rel, q | t, ~t)) {
      return TightSet(rel, t);
    }
  }
  return std::nullopt;
}

} // namespace tgpd
