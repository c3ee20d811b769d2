#pragma once

#include <string>
#include <vector>

#include "fences/composition.hpp"
#include "fences/element_set.hpp"
#include "fences/poset.hpp"

namespace fences {

/// Which poset family an encoding lives on.
///  - gate: G(δ), one count per descending segment.
///  - fence: F(β) with an odd number of parts, counts on the unshared part of
///    each ascending segment and on each descending segment.
///  - circular: F̄(β) with an even number of parts, same split as fence.
///  - narrow_circular: F̄(1,δ_1,1,δ_2,...,1,δ_ℓ), descending counts only.
enum class Shape { gate, fence, circular, narrow_circular };
enum class Side { ideal, filter };

/// Counts-per-segment encoding of an ideal (smallest elements of each chain)
/// or a filter (largest elements of each chain).
///
/// `composition` is δ for gate and narrow_circular shapes and β otherwise.
/// `asc` holds a (ideal) or b (filter) and is empty for gate and narrow
/// shapes; `desc` holds d (ideal) or e (filter).
template <Shape S, Side D>
struct SequenceEncoding {
  static constexpr Shape shape = S;
  static constexpr Side side = D;

  Composition composition;
  std::vector<int> asc;
  std::vector<int> desc;

  int total() const;
  friend bool operator==(const SequenceEncoding&, const SequenceEncoding&) = default;
};

using GateIdeal = SequenceEncoding<Shape::gate, Side::ideal>;
using GateFilter = SequenceEncoding<Shape::gate, Side::filter>;
using FenceIdeal = SequenceEncoding<Shape::fence, Side::ideal>;
using FenceFilter = SequenceEncoding<Shape::fence, Side::filter>;
using CircularIdeal = SequenceEncoding<Shape::circular, Side::ideal>;
using CircularFilter = SequenceEncoding<Shape::circular, Side::filter>;
using NarrowIdeal = SequenceEncoding<Shape::narrow_circular, Side::ideal>;
using NarrowFilter = SequenceEncoding<Shape::narrow_circular, Side::filter>;

/// One failed labeled condition. `index` is the 1-based subscript the
/// condition was instantiated at, or 0 for conditions without one.
struct Violation {
  std::string label;
  int index = 0;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool violates(const std::string& label) const;
  /// Distinct labels in first-seen order.
  std::vector<std::string> labels() const;
  std::string to_string() const;
};

/// Checks the labeled conditions for the encoding's shape and side:
///   gate ideal I1-I3, gate filter U1-U3, fence ideal IF1-IF6, fence filter
///   UF1-UF6, circular ideal IC1-IC4, circular filter UC1-UC4, narrow
///   circular ICN1-ICN2 / UCN1-UCN2.
/// I3, U3, IF5-IF6 and UF5-UF6 are only checked when `restricted` is set;
/// circular shapes have no restricted conditions.
/// Throws length_mismatch when sequence lengths do not fit the composition,
/// and parity when the composition has the wrong number of parts.
template <Shape S, Side D>
ValidationReport validate(const SequenceEncoding<S, D>& encoding, bool restricted = false);

/// Throws invalid_encoding listing the violated labels.
template <Shape S, Side D>
void require_valid(const SequenceEncoding<S, D>& encoding, bool restricted = false);

/// Element chains backing an encoding: for every counted segment, its
/// elements listed bottom to top.
struct EncodingLayout {
  std::vector<std::vector<int>> asc;   // unshared elements of ascending segments
  std::vector<std::vector<int>> desc;  // every element of descending segments
};

EncodingLayout encoding_layout(Shape shape, const Composition& composition);

/// The poset an encoding shape refers to.
Poset encoding_poset(Shape shape, const Composition& composition);

/// Subset → encoding. Throws not_an_ideal / not_a_filter.
template <Shape S, Side D>
SequenceEncoding<S, D> encode(const Composition& composition, ElementSet subset);

/// Encoding → subset. Throws invalid_encoding when the unrestricted condition
/// set fails.
template <Shape S, Side D>
ElementSet decode(const SequenceEncoding<S, D>& encoding);

/// The composition the reversed encoding lives on. Linear shapes reverse
/// the parts; circular shapes keep β_1 first: (β_1, β_2ℓ, ..., β_2).
Composition reversed_composition(Shape shape, const Composition& composition);

/// Reverses an encoding: ideal encodings become filter encodings of the
/// reversed composition and vice versa. For circular encodings a_1 stays in
/// front, so (a_1, a_2, ..., a_ℓ) becomes (a_1, a_ℓ, ..., a_2).
GateFilter reverse(const GateIdeal& e);
GateIdeal reverse(const GateFilter& e);
FenceFilter reverse(const FenceIdeal& e);
FenceIdeal reverse(const FenceFilter& e);
CircularFilter reverse(const CircularIdeal& e);
CircularIdeal reverse(const CircularFilter& e);
NarrowFilter reverse(const NarrowIdeal& e);
NarrowIdeal reverse(const NarrowFilter& e);

/// Two-row interlaced layout, e.g.
///
///   ideal  a:  0     0     1     0
///          d:     1     3     1
///
/// Circular encodings repeat a_1 at the end of the top row.
template <Shape S, Side D>
std::string pretty(const SequenceEncoding<S, D>& encoding);

/// {"a":[...],"d":[...]}, {"b":[...],"e":[...]}, gate/narrow {"d":[...]}.
template <Shape S, Side D>
std::string to_json(const SequenceEncoding<S, D>& encoding);

/// Builds an encoding from raw sequences; checks only lengths.
template <Shape S, Side D>
SequenceEncoding<S, D> make_encoding(Composition composition, std::vector<int> asc,
                                     std::vector<int> desc);

/// Calls `fn` with every valid encoding of the given shape and side whose
/// total equals `size` (or every valid encoding when size < 0).
template <Shape S, Side D, class Fn>
void for_each_encoding(const Composition& composition, int size, bool restricted, Fn&& fn);

std::string to_string(Shape shape);
std::string to_string(Side side);

}  // namespace fences

#include "fences/detail/encoding_enumeration.hpp"
