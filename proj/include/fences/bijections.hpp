#pragma once

#include <span>
#include <string>
#include <vector>

#include "fences/encodings.hpp"

namespace fences {

/// A maximal factor of positive entries. Indices are 0-based; in circular
/// mode `last` may be smaller than `first` when the block wraps.
struct Block {
  int first;
  int last;
  int length;
  /// Length of the maximal all-ones suffix of the block.
  int trailing_ones;
  friend bool operator==(const Block&, const Block&) = default;
};

struct BlockStructure {
  std::vector<Block> blocks;
  bool circular = false;
  /// Circular sequence with no zero entry: it has no blocks.
  bool positive = false;
};

/// Throws negative_entry.
BlockStructure block_structure(std::span<const int> seq, bool circular);

/// Intermediate state after a numbered step.
struct TraceStep {
  std::string step;
  std::vector<int> asc;
  std::vector<int> desc;
  std::string note;
};

using Trace = std::vector<TraceStep>;

struct MapOptions {
  /// Receives the sequence after every numbered step.
  Trace* trace = nullptr;
  /// Check the step-local invariants the proofs rely on (each factor handed
  /// to the gate map is a restricted gate ideal). Throws step_invariant.
  bool verify_steps = false;
};

/// The individual passes, exposed for tracing and for tests that compare
/// them against alternative formulations.
namespace steps {

/// Moves every nonempty trailing-ones factor one place right, past the zero
/// that follows it.
std::vector<int> move_trailing_ones(std::span<const int> seq, const BlockStructure& blocks);
/// For every block whose non-trailing part has at least two entries, moves
/// one unit from that part's last entry to its first.
std::vector<int> shift_block_heads(std::span<const int> seq, const BlockStructure& blocks);

/// The gate map on a bare sequence (no δ needed). Requires every nonempty
/// trailing-ones factor to be followed by a zero.
std::vector<int> gate_sequence_map(std::span<const int> seq, Trace* trace = nullptr);
/// Circular variant: positive sequences are returned unchanged.
std::vector<int> circular_sequence_map(std::span<const int> seq, Trace* trace = nullptr);

/// For each i with d_i = 1 and a_{i+1} below its cap, move that unit from d_i
/// to a_{i+1}. Indices wrap for circular encodings. Updates in place.
void push_single_ones(std::vector<int>& asc, std::vector<int>& desc, std::span<const int> alpha,
                      bool circular);
/// For each i with e_i = 0 and b_i > 0, move one unit from b_i to e_i.
void pull_back_units(std::vector<int>& asc, std::vector<int>& desc);

/// Cut points for the linear fence map: i (0-based, 1 <= i < ℓ) such that
/// a_i is below its cap, meaning d is split before d_i.
std::vector<int> fence_cut_points(std::span<const int> asc, std::span<const int> alpha);
/// Same for the circular map (any i, 0 <= i < ℓ).
std::vector<int> circular_cut_points(std::span<const int> asc, std::span<const int> alpha);

}  // namespace steps

// Gate bijection between restricted ideals and restricted filters of G(δ).
// Throws invalid_encoding when the input fails its restricted conditions.
GateFilter gate_bijection(const GateIdeal& ideal, const MapOptions& options = {});
GateIdeal gate_bijection_inverse(const GateFilter& filter, const MapOptions& options = {});

/// Which proven domain a fence ideal falls in.
enum class FenceDomain {
  bounded_size,  // size <= min(β_1, β_s)
  restricted,    // IF5 and IF6 hold (size arbitrary)
  outside,
};
FenceDomain fence_domain(const FenceIdeal& ideal);
FenceDomain fence_domain(const FenceFilter& filter);

// Fence bijection between ideals and filters of equal size on F(β) with an
// odd number of parts. Throws precondition when the input is in neither
// proven domain.
FenceFilter fence_bijection(const FenceIdeal& ideal, const MapOptions& options = {});
FenceIdeal fence_bijection_inverse(const FenceFilter& filter, const MapOptions& options = {});

// Narrow circular fences F̄(1,δ_1,...,1,δ_ℓ).
NarrowFilter narrow_circular_bijection(const NarrowIdeal& ideal, const MapOptions& options = {});
NarrowIdeal narrow_circular_bijection_inverse(const NarrowFilter& filter, const MapOptions& options = {});

// Arbitrary circular fences.
CircularFilter circular_bijection(const CircularIdeal& ideal, const MapOptions& options = {});
CircularIdeal circular_bijection_inverse(const CircularFilter& filter, const MapOptions& options = {});

std::string to_string(FenceDomain domain);
std::string to_json(const Trace& trace);

}  // namespace fences
