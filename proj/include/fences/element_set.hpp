#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace fences {

/// Maximum ground-set size for subset-level operations (ideals, filters,
/// lattices). Rank sequences are computed without this limit.
inline constexpr int kMaxSubsetElements = 64;

/// A subset of a poset's ground set. Element i (0-based) carries the
/// label x_{i+1}.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

  /// Builds from 1-based labels. Labels are not range checked here; use
  /// Poset::subset for validated construction.
  static ElementSet from_labels(std::initializer_list<int> labels);
  static ElementSet from_labels(const std::vector<int>& labels);

  /// First `n` elements.
  static constexpr ElementSet full(int n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }

  constexpr void insert(int i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(int i) { bits_ &= ~(std::uint64_t{1} << i); }

  constexpr bool is_subset_of(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  constexpr ElementSet operator|(ElementSet o) const { return ElementSet(bits_ | o.bits_); }
  constexpr ElementSet operator&(ElementSet o) const { return ElementSet(bits_ & o.bits_); }
  constexpr ElementSet operator^(ElementSet o) const { return ElementSet(bits_ ^ o.bits_); }
  /// Set difference.
  constexpr ElementSet operator-(ElementSet o) const { return ElementSet(bits_ & ~o.bits_); }

  /// 0-based indices in increasing order.
  std::vector<int> indices() const;
  /// 1-based labels in increasing order.
  std::vector<int> labels() const;
  /// "{x9,x10,x16}"
  std::string to_string() const;

  friend constexpr bool operator==(ElementSet, ElementSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order on indicator vectors read x_1, x_2, ..., x_n (x_1 most
/// significant, absent < present).
constexpr bool indicator_less(ElementSet a, ElementSet b) {
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  return b.contains(std::countr_zero(diff));
}

struct ElementSetHash {
  std::size_t operator()(ElementSet s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};

}  // namespace fences
