#include "tgpd/subset.hpp"

#include <algorithm>
#include <sstream>

namespace tgpd {

namespace {

std::array<std::uint64_t, 2> full_words(std::size_t width) {
  std::array<std::uint64_t, 2> w{};
  if (width >= 64) {
    w[0] = ~std::uint64_t{0};
    const std::size_t rest = width - 64;
    w[1] = rest >= 64 ? ~std::uint64_t{0}
                      : (rest == 0 ? 0 : (std::uint64_t{1} << rest) - 1);
  } else if (width > 0) {
    w[0] = (std::uint64_t{1} << width) - 1;
  }
  return w;
}

void check_index(std::size_t width, std::size_t i) {
  if (i >= width) {
    std::ostringstream oss;
    oss << "element index " << i << " out of range for carrier of size "
        << width;
    throw InvalidStructure(oss.str());
  }
}

} // namespace

Subset::Subset(std::size_t width) : width_(static_cast<std::uint32_t>(width)) {
  if (width > kMaxWidth) {
    throw CapExceeded("subset width " + std::to_string(width) +
                      " exceeds hard limit " + std::to_string(kMaxWidth));
  }
}

Subset Subset::full(std::size_t width) {
  Subset s(width);
  s.w_ = full_words(width);
  return s;
}

Subset Subset::singleton(std::size_t width, std::size_t i) {
  Subset s(width);
  s.set(i);
  return s;
}

Subset Subset::of(std::size_t width, std::initializer_list<std::size_t> idx) {
  Subset s(width);
  for (auto i : idx) {
    s.set(i);
  }
  return s;
}

Subset Subset::of(std::size_t width, const std::vector<std::size_t> &idx) {
  Subset s(width);
  for (auto i : idx) {
    s.set(i);
  }
  return s;
}

Subset Subset::from_bits(std::size_t width, std::uint64_t bits) {
  Subset s(width);
  s.w_[0] = bits & full_words(width)[0];
  return s;
}

Subset &Subset::set(std::size_t i) {
  check_index(width_, i);
  w_[i >> 6] |= std::uint64_t{1} << (i & 63);
  return *this;
}

Subset &Subset::reset(std::size_t i) {
  check_index(width_, i);
  w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  return *this;
}

void Subset::check(const Subset &o) const {
  if (width_ != o.width_) {
    std::ostringstream oss;
    oss << "carrier mismatch: subset of width " << width_
        << " combined with subset of width " << o.width_;
    throw CarrierMismatch(oss.str());
  }
}

Subset Subset::operator|(const Subset &o) const {
  Subset r = *this;
  r |= o;
  return r;
}

Subset Subset::operator&(const Subset &o) const {
  Subset r = *this;
  r &= o;
  return r;
}

Subset Subset::operator-(const Subset &o) const {
  Subset r = *this;
  r -= o;
  return r;
}

Subset Subset::operator~() const {
  Subset r = full(width_);
  r.w_[0] &= ~w_[0];
  r.w_[1] &= ~w_[1];
  return r;
}

Subset &Subset::operator|=(const Subset &o) {
  check(o);
  w_[0] |= o.w_[0];
  w_[1] |= o.w_[1];
  return *this;
}

Subset &Subset::operator&=(const Subset &o) {
  check(o);
  w_[0] &= o.w_[0];
  w_[1] &= o.w_[1];
  return *this;
}

Subset &Subset::operator-=(const Subset &o) {
  check(o);
  w_[0] &= ~o.w_[0];
  w_[1] &= ~o.w_[1];
  return *this;
}

bool Subset::subset_of(const Subset &o) const {
  check(o);
  return (w_[0] & ~o.w_[0]) == 0 && (w_[1] & ~o.w_[1]) == 0;
}

bool Subset::intersects(const Subset &o) const {
  check(o);
  return ((w_[0] & o.w_[0]) | (w_[1] & o.w_[1])) != 0;
}

std::strong_ordering Subset::operator<=>(const Subset &o) const {
  if (auto c = width_ <=> o.width_; c != 0) {
    return c;
  }
  if (auto c = w_[1] <=> o.w_[1]; c != 0) {
    return c;
  }
  return w_[0] <=> o.w_[0];
}

std::size_t Subset::first() const {
  if (w_[0]) {
    return std::countr_zero(w_[0]);
  }
  if (w_[1]) {
    return 64 + std::countr_zero(w_[1]);
  }
  return width_;
}

std::size_t Subset::next(std::size_t i) const {
  const std::size_t j = i + 1;
  if (j >= width_) {
    return width_;
  }
  if (j < 64) {
    const std::uint64_t rest = w_[0] >> j;
    if (rest) {
      return j + std::countr_zero(rest);
    }
    return w_[1] ? 64 + std::countr_zero(w_[1]) : width_;
  }
  const std::uint64_t rest = w_[1] >> (j - 64);
  return rest ? j + std::countr_zero(rest) : width_;
}

std::vector<std::size_t> Subset::indices() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::size_t Subset::hash() const {
  std::uint64_t h = 1469598103934665603ULL ^ width_;
  for (auto w : w_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::vector<Subset> all_subsets(std::size_t width) {
  return all_subsets_of(Subset::full(width));
}

std::vector<Subset> all_subsets_of(const Subset &base) {
  std::vector<Subset> out;
  for_each_subset_of(base, [&](const Subset &s) {
    out.push_back(s);
    return true;
  });
  return out;
}

bool for_each_subset_of(const Subset &base,
                        const std::function<bool(const Subset &)> &f) {
  const auto idx = base.indices();
  if (idx.size() > 24) {
    throw CapExceeded("refusing to enumerate 2^" + std::to_string(idx.size()) +
                      " subsets");
  }
  const std::uint64_t total = std::uint64_t{1} << idx.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Subset s(base.width());
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if ((mask >> k) & 1u) {
        s.set(idx[k]);
      }
    }
    if (!f(s)) {
      return false;
    }
  }
  return true;
}

std::vector<Subset> subsets_up_to(std::size_t width, std::size_t k) {
  std::vector<Subset> out;
  auto go = [&](auto &&self, Subset cur, std::size_t from) -> void {
    out.push_back(cur);
    if (cur.count() == k) {
      return;
    }
    for (std::size_t i = from; i < width; ++i) {
      Subset next = cur;
      next.set(i);
      self(self, next, i + 1);
    }
  };
  go(go, Subset(width), 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subset> quantifier_domain(std::size_t width, std::size_t limit) {
  return width <= limit ? all_subsets(width) : subsets_up_to(width, 2);
}

} // namespace tgpd
