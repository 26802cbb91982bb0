#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace wlab {

// Markets are capped at 24 items so that every exhaustive scan (2^m bundles,
// 3^m allocation DP, 4^m exchange tests) stays within desk scale.
inline constexpr int kMaxItems = 24;

// A bundle of items, stored as a bitmask over item indices 0..m-1.
class ItemSet {
 public:
  constexpr ItemSet() = default;
  static constexpr ItemSet of_bits(std::uint32_t bits) { return ItemSet(bits); }
  static constexpr ItemSet single(int j) { return ItemSet(1u << j); }
  static constexpr ItemSet full(int m) {
    return ItemSet(m >= 32 ? ~0u : (1u << m) - 1u);
  }
  static ItemSet of(std::initializer_list<int> items) {
    std::uint32_t b = 0;
    for (int j : items) b |= 1u << j;
    return ItemSet(b);
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int count() const { return std::popcount(bits_); }
  constexpr bool contains(int j) const { return (bits_ >> j) & 1u; }
  constexpr bool subset_of(ItemSet t) const { return (bits_ & ~t.bits_) == 0; }
  constexpr bool intersects(ItemSet t) const { return (bits_ & t.bits_) != 0; }

  constexpr ItemSet operator|(ItemSet t) const { return ItemSet(bits_ | t.bits_); }
  constexpr ItemSet operator&(ItemSet t) const { return ItemSet(bits_ & t.bits_); }
  // Set difference.
  constexpr ItemSet operator-(ItemSet t) const { return ItemSet(bits_ & ~t.bits_); }
  constexpr ItemSet plus(int j) const { return ItemSet(bits_ | (1u << j)); }
  constexpr ItemSet minus(int j) const { return ItemSet(bits_ & ~(1u << j)); }
  constexpr ItemSet complement(int m) const {
    return ItemSet(~bits_ & full(m).bits_);
  }

  constexpr bool operator==(const ItemSet&) const = default;
  constexpr bool operator<(ItemSet t) const { return bits_ < t.bits_; }

  std::vector<int> items() const {
    std::vector<int> out;
    out.reserve(count());
    for (std::uint32_t b = bits_; b; b &= b - 1)
      out.push_back(std::countr_zero(b));
    return out;
  }

  template <class F>
  void for_each_item(F&& f) const {
    for (std::uint32_t b = bits_; b; b &= b - 1) f(std::countr_zero(b));
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for_each_item([&](int j) {
      if (!first) s += ',';
      s += std::to_string(j);
      first = false;
    });
    s += '}';
    return s;
  }

 private:
  explicit constexpr ItemSet(std::uint32_t bits) : bits_(bits) {}
  std::uint32_t bits_ = 0;
};

// Visits every subset of `mask`, including the empty set and `mask` itself,
// in decreasing bitmask order.
template <class F>
void for_each_subset(ItemSet mask, F&& f) {
  std::uint32_t m = mask.bits();
  std::uint32_t sub = m;
  while (true) {
    f(ItemSet::of_bits(sub));
    if (sub == 0) break;
    sub = (sub - 1) & m;
  }
}

}  // namespace wlab
