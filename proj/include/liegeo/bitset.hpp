#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace liegeo {

/// Fixed-size dense bitset over 64-bit words. Point sets, adjacency rows and
/// symp supports all use this; intersection-heavy workloads dominate, so the
/// word loops are kept branch-free.
class DynBitset {
public:
  DynBitset() = default;
  explicit DynBitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }

  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
  void clear() { std::fill(w_.begin(), w_.end(), 0); }

  std::size_t count() const {
    std::size_t c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (uint64_t w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  DynBitset& operator&=(const DynBitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  DynBitset& operator|=(const DynBitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  /// Set difference: removes every member of `o`.
  DynBitset& operator-=(const DynBitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend DynBitset operator&(DynBitset a, const DynBitset& b) { return a &= b; }
  friend DynBitset operator|(DynBitset a, const DynBitset& b) { return a |= b; }
  friend DynBitset operator-(DynBitset a, const DynBitset& b) { return a -= b; }

  bool operator==(const DynBitset& o) const { return n_ == o.n_ && w_ == o.w_; }
  /// Lexicographic on words; used only to order sets canonically.
  bool operator<(const DynBitset& o) const { return w_ < o.w_; }

  bool intersects(const DynBitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  bool is_subset_of(const DynBitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  static std::size_t and_count(const DynBitset& a, const DynBitset& b) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.w_.size(); ++i)
      c += std::popcount(a.w_[i] & b.w_[i]);
    return c;
  }

  /// Index of the lowest set bit, or size() when empty.
  std::size_t first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return (i << 6) + std::countr_zero(w_[i]);
    return n_;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      uint64_t w = w_[i];
      while (w) {
        f((i << 6) + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  std::vector<uint32_t> to_indices() const {
    std::vector<uint32_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(static_cast<uint32_t>(i)); });
    return out;
  }

  std::size_t hash() const {
    std::size_t h = n_;
    for (uint64_t w : w_) h = h * 0x9e3779b97f4a7c15ull + w;
    return h;
  }

  struct Hash {
    std::size_t operator()(const DynBitset& b) const { return b.hash(); }
  };

private:
  std::size_t n_ = 0;
  std::vector<uint64_t> w_;
};

inline DynBitset bitset_of(std::size_t n, const std::vector<uint32_t>& idx) {
  DynBitset b(n);
  for (uint32_t i : idx) b.set(i);
  return b;
}

}  // namespace liegeo
