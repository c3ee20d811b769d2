#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fences/composition.hpp"
#include "fences/element_set.hpp"

namespace fences {

enum class PosetFamily { fence, circular_fence, gate };

/// A cover relation lower ◁ upper, 0-based element indices.
struct Cover {
  int lower;
  int upper;
  friend auto operator<=>(const Cover&, const Cover&) = default;
};

/// A maximal monotone run of the Hasse path, listed left to right.
/// `ascending` means values increase left to right.
struct Segment {
  std::vector<int> elements;
  bool ascending;
  friend bool operator==(const Segment&, const Segment&) = default;
};

/// A fence-family poset: the Hasse diagram is a path (fence, gate) or a cycle
/// (circular fence) on positions 0..n-1, so every cover joins positions i and
/// i+1 (mod n for cycles). Values are immutable after construction.
class Poset {
 public:
  PosetFamily family() const { return family_; }
  /// β for fences and circular fences, δ for gates. When `mirrored_dual()` is
  /// set, the poset is the mirrored dual of the family member built from it.
  const Composition& composition() const { return composition_; }
  bool mirrored_dual() const { return mirrored_dual_; }
  bool circular() const { return family_ == PosetFamily::circular_fence; }
  /// Circular fence of (1,1): both segments give the same cover.
  bool degenerate() const { return degenerate_; }

  int size() const { return n_; }
  std::span<const Cover> covers() const { return covers_; }
  std::span<const Segment> segments() const { return segments_; }

  /// True when position i is below position i+1 (mod n for cycles). Indexed
  /// 0..n-2 for paths and 0..n-1 for cycles.
  std::span<const std::uint8_t> steps_up() const { return steps_up_; }

  /// Elements covered by / covering element i. Requires size() <= 64.
  ElementSet lower_covers(int i) const { return down_[i]; }
  ElementSet upper_covers(int i) const { return up_[i]; }

  ElementSet ground_set() const { return ElementSet::full(n_); }

  /// Validated subset from 1-based labels.
  ElementSet subset(std::span<const int> labels) const;

  /// Throws cap_exceeded when the poset is too large for bitmask subsets.
  void require_subset_capacity() const;

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  friend Poset make_path_poset(PosetFamily, Composition, bool, std::vector<Segment>, int);

  PosetFamily family_ = PosetFamily::fence;
  Composition composition_{1};
  bool mirrored_dual_ = false;
  bool degenerate_ = false;
  int n_ = 0;
  std::vector<Cover> covers_;
  std::vector<Segment> segments_;
  std::vector<std::uint8_t> steps_up_;
  std::vector<ElementSet> down_;
  std::vector<ElementSet> up_;
};

Poset build_fence(const Composition& beta);
/// Requires an even number of parts. β=(1,1) is accepted and flagged
/// degenerate.
Poset build_circular_fence(const Composition& beta);
/// Order dual of F(δ_1,1,δ_2,1,...,1,δ_ℓ), drawn left to right.
Poset build_gate(const Composition& delta);

/// Reverses every cover and relabels x_i ↦ x_{n+1-i}, so that
/// dual(build_gate(δ)) == build_gate(δ reversed) and, for an odd number of
/// parts, dual(build_fence(β)) == build_fence(β reversed).
Poset dual(const Poset& poset);

bool is_ideal(const Poset& poset, ElementSet subset);
bool is_filter(const Poset& poset, ElementSet subset);

/// Down-closure / up-closure of a subset.
ElementSet down_closure(const Poset& poset, ElementSet subset);
ElementSet up_closure(const Poset& poset, ElementSet subset);

/// Maximal / minimal elements of a subset with respect to the poset order.
ElementSet maximal_elements(const Poset& poset, ElementSet subset);
ElementSet minimal_elements(const Poset& poset, ElementSet subset);

/// Segment parameters used by the sequence encodings.
///
/// Linear fence with 2ℓ+1 parts: δ_i = β_{2i}, α_i = β_{2i-1} for interior
/// ascending segments, and the two end segments get one extra because their
/// outer endpoint is unshared. Circular fence with 2ℓ parts: δ_i = β_{2i},
/// α_i = β_{2i-1} for all i.
struct AlphaDeltaParams {
  std::vector<int> alpha;
  std::vector<int> delta;
  bool circular = false;

  std::size_t ell() const { return delta.size(); }
  friend bool operator==(const AlphaDeltaParams&, const AlphaDeltaParams&) = default;
};

AlphaDeltaParams alpha_delta(const Composition& beta, bool circular);
/// Only defined for fences with an odd number of parts and circular fences.
AlphaDeltaParams alpha_delta(const Poset& poset);

// Export formats. Labels are 1-based.
std::string to_edge_list(const Poset& poset);
std::string to_json(const Poset& poset, int indent = -1);

std::string to_string(PosetFamily family);

}  // namespace fences
