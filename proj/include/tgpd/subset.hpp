#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "tgpd/error.hpp"

namespace tgpd {

/// Hard upper bound on any carrier. The configurable cap (see carrier.hpp)
/// can be raised up to this value but never beyond.
inline constexpr std::size_t kMaxWidth = 128;

/// A subset of a finite carrier, stored as a fixed 128-bit vector plus the
/// carrier width. Bits at positions >= width are always zero.
///
/// All binary operations require equal widths and throw CarrierMismatch
/// otherwise.
class Subset {
public:
  Subset() = default;
  explicit Subset(std::size_t width);

  static Subset full(std::size_t width);
  static Subset singleton(std::size_t width, std::size_t i);
  static Subset of(std::size_t width, std::initializer_list<std::size_t> idx);
  static Subset of(std::size_t width, const std::vector<std::size_t> &idx);
  /// Subset whose membership bits are the binary digits of `bits`.
  /// Only meaningful for width <= 64.
  static Subset from_bits(std::size_t width, std::uint64_t bits);

  std::size_t width() const { return width_; }
  std::uint64_t to_bits() const { return w_[0]; }

  bool test(std::size_t i) const {
    return (w_[i >> 6] >> (i & 63)) & 1u;
  }
  Subset &set(std::size_t i);
  Subset &reset(std::size_t i);

  std::size_t count() const {
    return std::popcount(w_[0]) + std::popcount(w_[1]);
  }
  bool empty() const { return (w_[0] | w_[1]) == 0; }
  bool any() const { return !empty(); }
  bool is_full() const { return *this == full(width_); }

  Subset operator|(const Subset &o) const;
  Subset operator&(const Subset &o) const;
  /// Set difference.
  Subset operator-(const Subset &o) const;
  /// Complement within the carrier.
  Subset operator~() const;
  Subset &operator|=(const Subset &o);
  Subset &operator&=(const Subset &o);
  Subset &operator-=(const Subset &o);

  bool subset_of(const Subset &o) const;
  bool intersects(const Subset &o) const;

  bool operator==(const Subset &o) const = default;

  /// Order by subset index: the integer whose i-th binary digit is the
  /// membership of element i. Width is compared first.
  std::strong_ordering operator<=>(const Subset &o) const;

  /// Lowest member, or width() when empty.
  std::size_t first() const;
  /// Lowest member strictly greater than i, or width() when none.
  std::size_t next(std::size_t i) const;

  std::vector<std::size_t> indices() const;

  template <typename F> void for_each(F &&f) const {
    for (std::size_t k = 0; k < 2; ++k) {
      std::uint64_t word = w_[k];
      while (word) {
        const std::size_t bit = std::countr_zero(word);
        f(k * 64 + bit);
        word &= word - 1;
      }
    }
  }

  std::size_t hash() const;

private:
  void check(const Subset &o) const;

  std::array<std::uint64_t, 2> w_{};
  std::uint32_t width_ = 0;
};

/// Every subset of a width-n carrier, in subset-index order. n <= 24.
std::vector<Subset> all_subsets(std::size_t width);

/// Every subset of `base`, in subset-index order. |base| <= 24.
std::vector<Subset> all_subsets_of(const Subset &base);

/// Calls f on each subset of `base` in subset-index order; stops early when
/// f returns false. Returns false iff stopped early.
bool for_each_subset_of(const Subset &base,
                        const std::function<bool(const Subset &)> &f);

/// Subsets of a width-n carrier with at most k members, in subset-index
/// order.
std::vector<Subset> subsets_up_to(std::size_t width, std::size_t k);

/// Domain for quantifiers over subsets: every subset when width <= limit,
/// otherwise those of size at most two.
std::vector<Subset> quantifier_domain(std::size_t width, std::size_t limit);

} // namespace tgpd

template <> struct std::hash<tgpd::Subset> {
  std::size_t operator()(const tgpd::Subset &s) const noexcept {
    return s.hash();
  }
};
