#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tgpd/subset.hpp"

namespace tgpd {

/// Current cap on carrier size. Defaults to 64; the TIGHT_MAX_CARRIER
/// environment variable (read once) or set_carrier_cap() may raise it to at
/// most kMaxWidth.
std::size_t carrier_cap();
void set_carrier_cap(std::size_t cap);

/// An ordered list of unique, non-empty element labels.
class Carrier {
public:
  Carrier() = default;
  explicit Carrier(std::vector<std::string> names);

  /// Labels "0", "1", ..., "n-1".
  static Carrier indexed(std::size_t n);

  std::size_t size() const { return names_.size(); }
  const std::string &name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string> &names() const { return names_; }
  std::optional<std::size_t> find(const std::string &label) const;
  /// Throws ParseError for unknown labels.
  std::size_t index_of(const std::string &label) const;

  Subset empty_set() const { return Subset(size()); }
  Subset full_set() const { return Subset::full(size()); }
  Subset subset(const std::vector<std::string> &labels) const;

  /// "{a,b}" rendering of a subset over this carrier.
  std::string format(const Subset &s) const;
  std::vector<std::string> labels(const Subset &s) const;

  bool operator==(const Carrier &o) const { return names_ == o.names_; }

private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

} // namespace tgpd
