#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tgpd/relcore.hpp"

namespace fx {

using Pairs = std::vector<std::pair<std::string, std::string>>;

inline tgpd::RelStructure rel(std::vector<std::string> names, const Pairs &pairs) {
  tgpd::Carrier c(std::move(names));
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  for (const auto &[a, b] : pairs) {
    idx.emplace_back(c.index_of(a), c.index_of(b));
  }
  return tgpd::RelStructure(std::move(c), idx);
}

// Antichain.
inline tgpd::RelStructure e1() { return rel({"a", "b"}, {{"a", "a"}, {"b", "b"}}); }
// Vee: c below a and b.
inline tgpd::RelStructure e2() {
  return rel({"a", "b", "c"},
             {{"a", "a"}, {"b", "b"}, {"c", "c"}, {"c", "a"}, {"c", "b"}});
}
// Two atoms under a top.
inline tgpd::RelStructure e3() {
  return rel({"x", "y", "t"},
             {{"x", "x"}, {"y", "y"}, {"t", "t"}, {"x", "t"}, {"y", "t"}});
}
// v is not reflexive.
inline tgpd::RelStructure e4() { return rel({"u", "v"}, {{"u", "u"}, {"u", "v"}}); }

inline tgpd::Subset S(const tgpd::RelStructure &r, std::vector<std::string> labels) {
  return r.carrier().subset(labels);
}

} // namespace fx
