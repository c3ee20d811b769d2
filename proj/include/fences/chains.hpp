#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/rational.hpp>

#include "fences/element_set.hpp"
#include "fences/poset.hpp"
#include "fences/rank.hpp"

namespace fences {

inline constexpr std::size_t kDefaultLatticeCap = 1u << 20;

/// L(P) materialized: every ideal with its up-covers.
class IdealLattice {
 public:
  /// Throws cap_exceeded when P has more than 64 elements or L(P) more than
  /// `cap` ideals.
  explicit IdealLattice(const Poset& poset, std::size_t cap = kDefaultLatticeCap);

  const Poset& poset() const { return *poset_; }
  std::size_t size() const { return ideals_.size(); }
  int top_rank() const { return poset_->size(); }

  /// Ideals are numbered by rank, then by indicator order within a rank.
  ElementSet ideal(std::size_t id) const { return ideals_[id]; }
  int rank(std::size_t id) const { return ideals_[id].size(); }
  std::span<const std::size_t> up_covers(std::size_t id) const { return up_[id]; }
  std::optional<std::size_t> find(ElementSet ideal) const;
  /// First id of each rank; entry n+1 is size().
  std::span<const std::size_t> rank_offsets() const { return rank_offsets_; }

 private:
  const Poset* poset_;
  std::vector<ElementSet> ideals_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<std::size_t> rank_offsets_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
};

/// An ordering of the ground set (0-based elements) compatible with the
/// order.
class LinearExtension {
 public:
  /// Throws not_linear_extension.
  LinearExtension(const Poset& poset, std::vector<int> order);
  static LinearExtension from_labels(const Poset& poset, const std::vector<int>& labels);

  std::span<const int> order() const { return order_; }
  int position(int element) const { return position_[element]; }
  std::vector<int> labels() const;

  /// The subset's elements as an increasing sequence with respect to this
  /// extension, as 1-based labels.
  std::vector<int> key_labels(ElementSet subset) const;
  /// Bit p set when the element at extension position p is in the subset.
  std::uint64_t position_mask(ElementSet subset) const;

 private:
  std::vector<int> order_;
  std::vector<int> position_;
};

/// Lexicographic comparison of the increasing sequences given as position
/// masks; when one sequence is a prefix of the other the shorter one is
/// smaller.
bool lex_less(std::uint64_t a_positions, std::uint64_t b_positions);

struct SaturatedChain {
  std::vector<ElementSet> ideals;

  int bottom_rank() const { return ideals.front().size(); }
  int top_rank() const { return ideals.back().size(); }
  boost::rational<int> center() const {
    return boost::rational<int>(bottom_rank() + top_rank(), 2);
  }
};

enum class DecompositionKind { scd, tcd, bcd, none };

struct ChainDecomposition {
  std::vector<SaturatedChain> chains;
  DecompositionKind kind = DecompositionKind::none;
};

/// Greedy lexicographic chain decomposition for a linear extension.
ChainDecomposition lcd(const IdealLattice& lattice, const LinearExtension& extension);
ChainDecomposition lcd(const Poset& poset, const LinearExtension& extension);

/// Kind from chain centers alone (SCD preferred).
DecompositionKind kind_from_centers(const std::vector<SaturatedChain>& chains, int top_rank);
/// Checks that the chains are saturated and partition L(P) (throws
/// not_a_partition), then classifies.
DecompositionKind classify_cd(const IdealLattice& lattice, const ChainDecomposition& cd);

/// Decomposition kind matching a predicted rank-sequence kind.
std::optional<DecompositionKind> decomposition_for(SequenceKind kind);

struct ExtensionSearchResult {
  std::optional<LinearExtension> witness;
  std::optional<ChainDecomposition> decomposition;
  std::uint64_t examined = 0;
  /// Every linear extension was tried.
  bool exhausted = false;
  /// Stopped because the budget ran out.
  bool budget_exhausted = false;
};

/// Tries linear extensions in backtracking order (smallest available element
/// index first) and returns the first whose LCD has the target kind.
ExtensionSearchResult search_extensions(const Poset& poset, DecompositionKind target,
                                        std::uint64_t budget);

/// Calls fn for each linear extension in the same deterministic order until
/// it returns false.
void for_each_linear_extension(const Poset& poset,
                               const std::function<bool(const std::vector<int>&)>& fn);

std::string to_string(DecompositionKind kind);
DecompositionKind parse_decomposition_kind(const std::string& text);
std::string to_json(const ChainDecomposition& cd);

}  // namespace fences
