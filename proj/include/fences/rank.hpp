#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fences/composition.hpp"
#include "fences/element_set.hpp"
#include "fences/poset.hpp"

namespace fences {

using BigInt = boost::multiprecision::cpp_int;

/// r_0..r_n: r_k is the number of ideals of size k.
struct RankSequence {
  std::vector<BigInt> coefficients;

  /// Top rank n (= number of poset elements).
  int top_rank() const { return static_cast<int>(coefficients.size()) - 1; }
  BigInt total() const;
  std::string to_string() const;

  static RankSequence from(std::initializer_list<long long> values);
  friend bool operator==(const RankSequence&, const RankSequence&) = default;
};

inline constexpr int kDefaultEnumerationCap = 24;

/// Calls `fn` with every ideal (optionally only those of one size) in
/// lexicographic order of indicator vectors over x_1..x_n. Brute force over
/// all subsets; throws cap_exceeded above `cap` elements.
void for_each_ideal(const Poset& poset, const std::function<void(ElementSet)>& fn,
                    std::optional<int> size = std::nullopt, int cap = kDefaultEnumerationCap);
std::vector<ElementSet> enumerate_ideals(const Poset& poset, std::optional<int> size = std::nullopt,
                                         int cap = kDefaultEnumerationCap);

/// Exact rank sequence by transfer along the Hasse path (or cycle).
RankSequence rank_sequence(const Poset& poset);
/// Same numbers by brute-force enumeration.
RankSequence rank_sequence_by_enumeration(const Poset& poset, int cap = kDefaultEnumerationCap);

/// The exclusive shape label of a sequence. A sequence both top and bottom
/// interlacing is symmetric, so the labels never overlap.
enum class SequenceKind { symmetric, top_interlacing, bottom_interlacing, none };

struct SequenceClassification {
  bool symmetric = false;
  bool unimodal = false;
  bool top_heavy = false;
  bool bottom_heavy = false;
  bool top_interlacing = false;
  bool bottom_interlacing = false;
  bool log_concave = false;

  // Smallest violating index of each failed property (as an index into the
  // sequence). For the interlacing chains this is the index of the right
  // hand side of the first failing inequality; for unimodality it is the
  // index where the sequence rises again after a descent.
  std::optional<int> symmetric_witness;
  std::optional<int> unimodal_witness;
  std::optional<int> top_heavy_witness;
  std::optional<int> bottom_heavy_witness;
  std::optional<int> top_interlacing_witness;
  std::optional<int> bottom_interlacing_witness;
  std::optional<int> log_concave_witness;

  SequenceKind kind() const;
};

/// Throws precondition on an empty sequence.
SequenceClassification classify(const RankSequence& seq);

/// Length of the longest contiguous window that is log-concave.
int longest_log_concave_window(const RankSequence& seq);

std::string to_string(SequenceKind kind);
std::string classification_json(const SequenceClassification& c);

// ---------------------------------------------------------------------------
// Verifiers. These return findings instead of throwing so sweeps can log
// counterexamples and keep going.

struct PartialSymmetryRow {
  int k;
  BigInt ideals;   // r_k
  BigInt filters;  // r_{n-k}
  bool numeric_equal;
  bool bijection_ok;  // the fence map is injective on size-k ideals into size-k filters
};

struct PartialSymmetryReport {
  Composition beta;
  int n;
  int max_k;
  std::vector<PartialSymmetryRow> rows;
  bool ok;
};

/// Requires an odd number of parts (throws parity).
PartialSymmetryReport verify_partial_symmetry(const Composition& beta);

/// Case of the interlacing classification that applies to a composition.
enum class HeavyCase {
  single_part,       // all coefficients equal 1
  even_parts,        // bottom interlacing
  first_larger,      // odd parts, β_1 > β_s: bottom interlacing
  last_larger,       // odd parts, β_1 < β_s: top interlacing
  equal_ends,        // odd parts, β_1 = β_s: decided by the inner composition
};

struct HeavyReport {
  Composition beta;
  HeavyCase heavy_case;
  SequenceKind predicted;
  SequenceKind observed;
  /// Kind of the inner composition (β_2..β_{s-1}) for the equal-ends case.
  std::optional<SequenceKind> inner;
  RankSequence r;
  bool ok;
};

HeavyCase heavy_case(const Composition& beta);
/// Predicted kind of r(β). Recurses through the inner composition in the
/// equal-ends case.
SequenceKind predicted_kind(const Composition& beta);
HeavyReport verify_theorem_heavy(const Composition& beta);

struct CircularSymmetryReport {
  Composition beta;
  RankSequence r;
  bool palindromic;
  std::optional<int> witness;
  /// The circular fence map sends the ideals of each size injectively onto
  /// valid filters of the same size. Empty when n exceeds the subset cap.
  std::optional<bool> bijection_ok;
  bool ok;
};

/// Requires an even number of parts.
CircularSymmetryReport verify_circular_symmetry(const Composition& beta,
                                                bool check_bijection = true);

struct CircularUnimodalityReport {
  Composition beta;
  RankSequence r;
  bool unimodal;
  std::optional<int> witness;
  /// β is (1,k,1,k) or (k,1,k,1).
  bool exceptional_shape;
  /// unimodal exactly when the shape is not exceptional.
  bool ok;
};

bool is_exceptional_circular_shape(const Composition& beta);
CircularUnimodalityReport verify_conjecture_fbuni(const Composition& beta);

struct LogConcavityReport {
  Composition beta;
  bool circular;
  RankSequence r;
  bool log_concave;
  std::optional<int> witness;
  int longest_window;
};

LogConcavityReport check_log_concavity(const Composition& beta, bool circular);

std::string to_string(HeavyCase c);
std::string to_json_number(const BigInt& value);
std::string to_json(const RankSequence& r);

}  // namespace fences
