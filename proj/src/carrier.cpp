#include "tgpd/carrier.hpp"

#include <atomic>
#include <cstdlib>
#include <mutex>

namespace tgpd {

namespace {

std::atomic<std::size_t> g_cap{0};
std::once_flag g_env_once;

void read_env_cap() {
  std::size_t cap = 64;
  if (const char *env = std::getenv("TIGHT_MAX_CARRIER")) {
    char *end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= kMaxWidth) {
      cap = v;
    }
  }
  std::size_t expected = 0;
  g_cap.compare_exchange_strong(expected, cap);
}

} // namespace

std::size_t carrier_cap() {
  std::call_once(g_env_once, read_env_cap);
  return g_cap.load();
}

void set_carrier_cap(std::size_t cap) {
  if (cap < 1 || cap > kMaxWidth) {
    throw CapExceeded("carrier cap must lie in [1, " +
                      std::to_string(kMaxWidth) + "]");
  }
  std::call_once(g_env_once, read_env_cap);
  g_cap.store(cap);
}

Carrier::Carrier(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) {
    throw InvalidStructure("carrier must have at least one element");
  }
  if (names_.size() > carrier_cap()) {
    throw CapExceeded("carrier of size " + std::to_string(names_.size()) +
                      " exceeds cap " + std::to_string(carrier_cap()));
  }
  index_.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) {
      throw InvalidStructure("empty element label at position " +
                             std::to_string(i));
    }
    if (!index_.emplace(names_[i], i).second) {
      throw InvalidStructure("duplicate element label '" + names_[i] + "'");
    }
  }
}

Carrier Carrier::indexed(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
  }
  return Carrier(std::move(names));
}

std::optional<std::size_t> Carrier::find(const std::string &label) const {
  auto it = index_.find(label);
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::size_t Carrier::index_of(const std::string &label) const {
  if (auto i = find(label)) {
    return *i;
  }
  throw ParseError("unknown element label '" + label + "'");
}

Subset Carrier::subset(const std::vector<std::string> &labels) const {
  Subset s(size());
  for (const auto &l : labels) {
    s.set(index_of(l));
  }
  return s;
}

std::string Carrier::format(const Subset &s) const {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first) {
      out += ',';
    }
    out += names_.at(i);
    first = false;
  });
  out += '}';
  return out;
}

std::vector<std::string> Carrier::labels(const Subset &s) const {
  std::vector<std::string> out;
  s.for_each([&](std::size_t i) { out.push_back(names_.at(i)); });
  return out;
}

} // namespace tgpd
