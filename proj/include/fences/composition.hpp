#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fences {

/// An ordered list of positive parts. Seeds every fence, circular fence and
/// gate. Construction validates; a Composition value is always well formed.
class Composition {
 public:
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts)
      : Composition(std::vector<int>(parts)) {}

  /// Parses "6,2,1,2,3,1,6". Whitespace around parts is tolerated.
  static Composition parse(std::string_view text);

  std::span<const int> parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  int front() const { return parts_.front(); }
  int back() const { return parts_.back(); }
  int total() const { return total_; }
  bool has_even_parts() const { return parts_.size() % 2 == 0; }

  Composition reversed() const;
  /// Contiguous parts [first, first+count).
  Composition slice(std::size_t first, std::size_t count) const;

  std::string to_string() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition& a, const Composition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

/// Every composition of `total`, in lexicographic order of parts.
std::vector<Composition> compositions_of(int total);

/// Parses a comma separated list of integers (signs allowed). Used for raw
/// encoding sequences where zeros are legal.
std::vector<int> parse_int_list(std::string_view text);

}  // namespace fences
