#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tgpd/subset.hpp"

namespace tgpd {

class Carrier;

/// One component of a counterexample: an element index or a subset.
using WitnessItem = std::variant<std::size_t, Subset>;

/// A counterexample tuple. Items are interpreted by the check that produced
/// them; `note` is a short human-readable gloss.
struct Witness {
  std::vector<WitnessItem> items;
  std::string note;

  std::size_t element(std::size_t k) const {
    return std::get<std::size_t>(items.at(k));
  }
  const Subset &subset(std::size_t k) const {
    return std::get<Subset>(items.at(k));
  }
};

struct Check {
  std::string name;
  bool passed = true;
  /// Advisory checks are reported but do not affect ok().
  bool advisory = false;
  std::optional<Witness> witness;
};

class ValidationReport {
public:
  void pass(std::string name, bool advisory = false);
  void fail(std::string name, Witness w, bool advisory = false);
  /// Records pass/fail according to `ok`; the witness is kept only on failure.
  void record(std::string name, bool ok, Witness w = {}, bool advisory = false);
  void merge(const ValidationReport &other, const std::string &prefix = "");

  bool ok() const;
  const std::vector<Check> &checks() const { return checks_; }
  const Check *find(const std::string &name) const;
  bool passed(const std::string &name) const;
  /// First failing non-advisory check, if any.
  const Check *first_failure() const;

  /// One line per check: "PASS name" / "FAIL name: witness".
  std::string to_text(const Carrier *carrier = nullptr) const;

private:
  std::vector<Check> checks_;
};

std::string format_witness(const Witness &w, const Carrier *carrier);

} // namespace tgpd
