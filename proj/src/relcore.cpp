#include "tgpd/relcore.hpp"

#include <string>

namespace tgpd {

namespace {

void check_width(const RelStructure &rel, const Subset &s) {
  if (s.width() != rel.size()) {
    throw CarrierMismatch("subset of width " + std::to_string(s.width()) +
                          " used with relation on " +
                          std::to_string(rel.size()) + " elements");
  }
}

} // namespace

RelStructure::RelStructure(
    Carrier carrier,
    const std::vector<std::pair<std::size_t, std::size_t>> &pairs)
    : carrier_(std::move(carrier)) {
  const std::size_t n = carrier_.size();
  above_.assign(n, Subset(n));
  below_.assign(n, Subset(n));
  for (auto [i, j] : pairs) {
    if (i >= n || j >= n) {
      throw InvalidStructure("relation pair out of range");
    }
    above_[i].set(j);
    below_[j].set(i);
  }
}

RelStructure
RelStructure::from_matrix(Carrier carrier,
                          const std::vector<std::vector<bool>> &matrix) {
  const std::size_t n = carrier.size();
  if (matrix.size() != n) {
    throw InvalidStructure("relation matrix must be square with side " +
                           std::to_string(n));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n) {
      throw InvalidStructure("relation matrix must be square with side " +
                             std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (matrix[i][j]) {
        pairs.emplace_back(i, j);
      }
    }
  }
  return RelStructure(std::move(carrier), pairs);
}

std::vector<std::pair<std::size_t, std::size_t>> RelStructure::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i) {
    above_[i].for_each([&](std::size_t j) { out.emplace_back(i, j); });
  }
  return out;
}

RelStructure RelStructure::transposed() const {
  RelStructure t;
  t.carrier_ = carrier_;
  t.above_ = below_;
  t.below_ = above_;
  return t;
}

RelStructure RelStructure::restricted(const Subset &keep) const {
  check_width(*this, keep);
  const auto idx = keep.indices();
  std::vector<std::string> names;
  std::vector<std::size_t> pos(size(), size());
  for (std::size_t k = 0; k < idx.size(); ++k) {
    names.push_back(carrier_.name(idx[k]));
    pos[idx[k]] = k;
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (auto i : idx) {
    above_[i].for_each([&](std::size_t j) {
      if (keep.test(j)) {
        pairs.emplace_back(pos[i], pos[j]);
      }
    });
  }
  return RelStructure(Carrier(std::move(names)), pairs);
}

Subset up_image(const RelStructure &rel, const Subset &q) {
  check_width(rel, q);
  Subset out = rel.empty_set();
  q.for_each([&](std::size_t i) { out |= rel.above(i); });
  return out;
}

Subset down_image(const RelStructure &rel, const Subset &q) {
  check_width(rel, q);
  Subset out = rel.empty_set();
  q.for_each([&](std::size_t i) { out |= rel.below(i); });
  return out;
}

bool subset_prec(const RelStructure &rel, const Subset &q, const Subset &r) {
  check_width(rel, q);
  return q.subset_of(down_image(rel, r));
}

bool dense_cover(const RelStructure &rel, const Subset &q, const Subset &r) {
  check_width(rel, q);
  // Q^≻ ⊆ (R^≻)^≺
  return down_image(rel, q).subset_of(up_image(rel, down_image(rel, r)));
}

bool compact_cover(const RelStructure &rel, const Subset &q, const Subset &r) {
  return dense_cover(rel, q, down_image(rel, r));
}

bool disjoint(const RelStructure &rel, const Subset &q, const Subset &r) {
  check_width(rel, q);
  return !down_image(rel, q).intersects(down_image(rel, r));
}

Subset perp_set(const RelStructure &rel, const Subset &q) {
  const Subset below_q = down_image(rel, q);
  Subset out = rel.empty_set();
  for (std::size_t p = 0; p < rel.size(); ++p) {
    if (!rel.below(p).intersects(below_q)) {
      out.set(p);
    }
  }
  return out;
}

Subset formal_meet(const RelStructure &rel, const Subset &f) {
  check_width(rel, f);
  Subset out = rel.full_set();
  f.for_each([&](std::size_t i) { out &= rel.below(i); });
  return out;
}

bool centred(const RelStructure &rel, const Subset &q) {
  return q.empty() || formal_meet(rel, q).any();
}

bool hatted_cover(const RelStructure &rel, CoverKind kind, const Subset &q,
                  const Subset &r) {
  const Subset meet = formal_meet(rel, q);
  switch (kind) {
  case CoverKind::Dense:
    return dense_cover(rel, meet, r);
  case CoverKind::Compact:
    return compact_cover(rel, meet, r);
  case CoverKind::Prec:
    return subset_prec(rel, meet, r);
  case CoverKind::Perp:
    return disjoint(rel, meet, r);
  }
  return false;
}

bool is_round(const RelStructure &rel, const Subset &r) {
  check_width(rel, r);
  return r.subset_of(up_image(rel, r));
}

bool is_transitive(const RelStructure &rel) {
  for (std::size_t p = 0; p < rel.size(); ++p) {
    if (!up_image(rel, rel.above(p)).subset_of(rel.above(p))) {
      return false;
    }
  }
  return true;
}

bool is_reflexive(const RelStructure &rel) {
  for (std::size_t p = 0; p < rel.size(); ++p) {
    if (!rel.prec(p, p)) {
      return false;
    }
  }
  return true;
}

ValidationReport validate_pseudobasis(const RelStructure &rel) {
  ValidationReport report;
  const std::size_t n = rel.size();

  {
    const Subset missing = rel.full_set() - up_image(rel, rel.full_set());
    if (missing.empty()) {
      report.pass("round");
    } else {
      report.fail("round", Witness{{missing.first()}, "has no predecessor"});
    }
  }

  {
    bool ok = true;
    Witness w;
    for (std::size_t p = 0; p < n && ok; ++p) {
      rel.above(p).for_each([&](std::size_t q) {
        if (!ok) {
          return;
        }
        const Subset bad = rel.above(q) - rel.above(p);
        if (bad.any()) {
          ok = false;
          w = Witness{{p, q, bad.first()}, "p≺q≺r but not p≺r"};
        }
      });
    }
    report.record("transitive", ok, w);
  }

  {
    bool ok = true;
    Witness w;
    for (std::size_t p = 0; p < n && ok; ++p) {
      rel.above(p).for_each([&](std::size_t q) {
        if (ok && !compact_cover(rel, Subset::singleton(n, p), rel.below(q))) {
          ok = false;
          w = Witness{{p, q}, "p≺q but not {p} C q^≻"};
        }
      });
    }
    report.record("shrinking", ok, w);
  }
  return report;
}

void require_pseudobasis(const RelStructure &rel, const char *what) {
  const ValidationReport r = validate_pseudobasis(rel);
  if (const Check *c = r.first_failure()) {
    throw PreconditionViolation(std::string(what) +
                                " requires an abstract pseudobasis; check '" +
                                c->name + "' failed " +
                                format_witness(*c->witness, &rel.carrier()));
  }
}

ValidationReport is_separative(const RelStructure &rel) {
  require_pseudobasis(rel, "is_separative");
  const std::size_t n = rel.size();
  ValidationReport report;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (!rel.prec(p, q) &&
          compact_cover(rel, Subset::singleton(n, p),
                        Subset::singleton(n, q))) {
        report.fail("separative", Witness{{p, q}, "p⊀q but {p} C {q}"});
        return report;
      }
    }
  }
  report.pass("separative");
  return report;
}

} // namespace tgpd
