#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace toricchi {

/// A subset of {0, ..., 63}, stored as a bitmask.
///
/// Rays, cone generators, faces, ideal generator supports and fine weights are
/// all subsets of the ray index set, so one compact value type serves them
/// all. Indices are 0-based internally; formatting helpers print 1-based.
class IndexSet {
 public:
  static constexpr int kCapacity = 64;

  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint64_t bits) : bits_(bits) {}
  IndexSet(std::initializer_list<int> elements) {
    for (int e : elements) insert(e);
  }

  static IndexSet from_elements(const std::vector<int>& elements) {
    IndexSet s;
    for (int e : elements) s.insert(e);
    return s;
  }

  /// {0, ..., d-1}.
  static constexpr IndexSet full(int d) {
    return IndexSet(d >= kCapacity ? ~std::uint64_t{0}
                                   : (std::uint64_t{1} << d) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr bool is_subset_of(IndexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(IndexSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  void insert(int i) { bits_ |= std::uint64_t{1} << i; }
  void erase(int i) { bits_ &= ~(std::uint64_t{1} << i); }

  constexpr IndexSet with(int i) const {
    return IndexSet(bits_ | (std::uint64_t{1} << i));
  }
  constexpr IndexSet without(int i) const {
    return IndexSet(bits_ & ~(std::uint64_t{1} << i));
  }

  friend constexpr IndexSet operator|(IndexSet a, IndexSet b) {
    return IndexSet(a.bits_ | b.bits_);
  }
  friend constexpr IndexSet operator&(IndexSet a, IndexSet b) {
    return IndexSet(a.bits_ & b.bits_);
  }
  /// Set difference.
  friend constexpr IndexSet operator-(IndexSet a, IndexSet b) {
    return IndexSet(a.bits_ & ~b.bits_);
  }

  friend constexpr bool operator==(IndexSet, IndexSet) = default;
  friend constexpr auto operator<=>(IndexSet a, IndexSet b) {
    return a.bits_ <=> b.bits_;
  }

  /// Elements in increasing order.
  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b));
    }
    return out;
  }

  /// Smallest element; undefined on the empty set.
  constexpr int front() const { return std::countr_zero(bits_); }

 private:
  std::uint64_t bits_ = 0;
};

/// Presentation order for generator lists: by size, then lexicographically on
/// the sorted element lists.
bool support_less(IndexSet a, IndexSet b);

/// "1 3" style rendering with 1-based indices.
std::string to_one_based_string(IndexSet s, const char* separator = " ");

/// Calls f(sub) for every subset of `s`, including the empty set and `s`.
template <typename F>
void for_each_subset(IndexSet s, F&& f) {
  const std::uint64_t mask = s.bits();
  std::uint64_t sub = mask;
  while (true) {
    f(IndexSet(sub));
    if (sub == 0) break;
    sub = (sub - 1) & mask;
  }
}

/// Calls f(s) for every k-element subset s of {0, ..., d-1}, in increasing
/// bitmask order.
template <typename F>
void for_each_k_subset(int d, int k, F&& f) {
  if (k < 0 || k > d) return;
  if (k == 0) {
    f(IndexSet{});
    return;
  }
  const std::uint64_t limit = std::uint64_t{1} << d;
  std::uint64_t s = (std::uint64_t{1} << k) - 1;
  while (s < limit) {
    f(IndexSet(s));
    // Gosper's hack: next integer with the same popcount.
    const std::uint64_t c = s & (~s + 1);
    const std::uint64_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

}  // namespace toricchi
