#include "fences/rank.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include <json.hpp>

#include "fences/bijections.hpp"
#include "fences/encodings.hpp"
#include "fences/error.hpp"

namespace fences {

namespace {

using Poly = std::vector<BigInt>;

void add_into(Poly& target, const Poly& source) {
  if (target.size() < source.size()) target.resize(source.size());
  for (std::size_t i = 0; i < source.size(); ++i) target[i] += source[i];
}

Poly shifted(const Poly& p) {
  Poly out(p.size() + 1);
  for (std::size_t i = 0; i < p.size(); ++i) out[i + 1] = p[i];
  return out;
}

// One step along the path. `in`/`out` are the generating polynomials split
// by membership of the current element.
void advance(Poly& in, Poly& out, bool up) {
  if (up) {
    add_into(out, in);
    in = shifted(in);
  } else {
    Poly both = out;
    add_into(both, in);
    in = shifted(both);
  }
}

RankSequence to_sequence(Poly p, int n) {
  p.resize(static_cast<std::size_t>(n) + 1);
  return RankSequence{std::move(p)};
}

std::string join(const std::vector<BigInt>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += v[i].str();
  }
  return out;
}

}  // namespace

BigInt RankSequence::total() const {
  BigInt t = 0;
  for (const BigInt& c : coefficients) t += c;
  return t;
}

std::string RankSequence::to_string() const { return join(coefficients); }

RankSequence RankSequence::from(std::initializer_list<long long> values) {
  RankSequence r;
  for (long long v : values) r.coefficients.emplace_back(v);
  return r;
}

void for_each_ideal(const Poset& poset, const std::function<void(ElementSet)>& fn,
                    std::optional<int> size, int cap) {
  const int n = poset.size();
  if (n > cap || n > kMaxSubsetElements) {
    throw FenceError(ErrorCode::cap_exceeded, "ideal enumeration is capped at " +
                                                  std::to_string(std::min(cap, kMaxSubsetElements)) +
                                                  " elements, poset has " + std::to_string(n));
  }
  // Depth-first over x_1..x_n, excluding before including, which yields the
  // lexicographic order of indicator vectors. A cover is checked once both of
  // its ends are decided.
  std::vector<ElementSet> below_mask(static_cast<std::size_t>(n));
  std::vector<ElementSet> above_mask(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const ElementSet earlier = ElementSet::full(i);
    below_mask[static_cast<std::size_t>(i)] = poset.lower_covers(i) & earlier;
    above_mask[static_cast<std::size_t>(i)] = poset.upper_covers(i) & earlier;
  }
  auto recurse = [&](auto& self, int i, ElementSet current, int count) -> void {
    if (size && (count > *size || count + (n - i) < *size)) return;
    if (i == n) {
      fn(current);
      return;
    }
    if ((above_mask[static_cast<std::size_t>(i)] & current).empty()) {
      self(self, i + 1, current, count);
    }
    if (below_mask[static_cast<std::size_t>(i)].is_subset_of(current)) {
      ElementSet with = current;
      with.insert(i);
      self(self, i + 1, with, count + 1);
    }
  };
  recurse(recurse, 0, ElementSet{}, 0);
}

std::vector<ElementSet> enumerate_ideals(const Poset& poset, std::optional<int> size, int cap) {
  std::vector<ElementSet> out;
  for_each_ideal(poset, [&](ElementSet s) { out.push_back(s); }, size, cap);
  return out;
}

RankSequence rank_sequence(const Poset& poset) {
  const int n = poset.size();
  const auto up = poset.steps_up();
  if (!poset.circular()) {
    Poly in{0, 1};
    Poly out{1};
    for (int i = 0; i + 1 < n; ++i) advance(in, out, up[static_cast<std::size_t>(i)] != 0);
    add_into(in, out);
    return to_sequence(std::move(in), n);
  }
  // Condition on whether x_1 is in the ideal, walk to x_n, then close the
  // cycle with the cover between x_n and x_1.
  Poly total;
  for (int first_in = 0; first_in <= 1; ++first_in) {
    Poly in = first_in ? Poly{0, 1} : Poly{};
    Poly out = first_in ? Poly{} : Poly{1};
    for (int i = 0; i + 1 < n; ++i) advance(in, out, up[static_cast<std::size_t>(i)] != 0);
    const bool last_below_first = up[static_cast<std::size_t>(n - 1)] != 0;
    if (last_below_first) {
      add_into(total, in);
      if (!first_in) add_into(total, out);
    } else {
      add_into(total, out);
      if (first_in) add_into(total, in);
    }
  }
  return to_sequence(std::move(total), n);
}

RankSequence rank_sequence_by_enumeration(const Poset& poset, int cap) {
  Poly counts(static_cast<std::size_t>(poset.size()) + 1);
  for_each_ideal(poset, [&](ElementSet s) { counts[static_cast<std::size_t>(s.size())] += 1; },
                 std::nullopt, cap);
  return RankSequence{std::move(counts)};
}

SequenceKind SequenceClassification::kind() const {
  if (top_interlacing && bottom_interlacing) return SequenceKind::symmetric;
  if (top_interlacing) return SequenceKind::top_interlacing;
  if (bottom_interlacing) return SequenceKind::bottom_interlacing;
  return SequenceKind::none;
}

namespace {

// Index order of an interlacing chain: top starts at 0, bottom at n.
std::vector<int> interlacing_order(int n, bool top) {
  std::vector<int> order;
  int lo = 0;
  int hi = n;
  bool take_low = top;
  while (lo <= hi) {
    order.push_back(take_low ? lo++ : hi--);
    take_low = !take_low;
  }
  return order;
}

std::optional<int> chain_witness(const std::vector<BigInt>& b, const std::vector<int>& order) {
  for (std::size_t j = 1; j < order.size(); ++j) {
    const auto lhs = static_cast<std::size_t>(order[j - 1]);
    const auto rhs = static_cast<std::size_t>(order[j]);
    if (b[lhs] > b[rhs]) return order[j];
  }
  return std::nullopt;
}

std::optional<int> log_concave_witness(const std::vector<BigInt>& b) {
  for (std::size_t i = 1; i + 1 < b.size(); ++i) {
    if (b[i] * b[i] < b[i - 1] * b[i + 1]) return static_cast<int>(i);
  }
  return std::nullopt;
}

}  // namespace

SequenceClassification classify(const RankSequence& seq) {
  const auto& b = seq.coefficients;
  if (b.empty()) throw FenceError(ErrorCode::precondition, "cannot classify an empty sequence");
  const int n = static_cast<int>(b.size()) - 1;
  SequenceClassification c;

  for (int k = 0; k <= n && !c.symmetric_witness; ++k) {
    if (b[static_cast<std::size_t>(k)] != b[static_cast<std::size_t>(n - k)]) c.symmetric_witness = k;
  }
  bool descended = false;
  for (int j = 1; j <= n && !c.unimodal_witness; ++j) {
    const auto& prev = b[static_cast<std::size_t>(j - 1)];
    const auto& cur = b[static_cast<std::size_t>(j)];
    if (cur < prev) descended = true;
    if (cur > prev && descended) c.unimodal_witness = j;
  }
  for (int k = 0; k < n / 2; ++k) {
    const auto& lo = b[static_cast<std::size_t>(k)];
    const auto& hi = b[static_cast<std::size_t>(n - k)];
    if (!c.top_heavy_witness && lo > hi) c.top_heavy_witness = k;
    if (!c.bottom_heavy_witness && lo < hi) c.bottom_heavy_witness = k;
  }
  c.top_interlacing_witness = chain_witness(b, interlacing_order(n, true));
  c.bottom_interlacing_witness = chain_witness(b, interlacing_order(n, false));
  c.log_concave_witness = log_concave_witness(b);

  c.symmetric = !c.symmetric_witness;
  c.unimodal = !c.unimodal_witness;
  c.top_heavy = !c.top_heavy_witness;
  c.bottom_heavy = !c.bottom_heavy_witness;
  c.top_interlacing = !c.top_interlacing_witness;
  c.bottom_interlacing = !c.bottom_interlacing_witness;
  c.log_concave = !c.log_concave_witness;
  return c;
}

int longest_log_concave_window(const RankSequence& seq) {
  const auto& b = seq.coefficients;
  const int len = static_cast<int>(b.size());
  if (len <= 2) return len;
  int best = 2;
  int run = 0;
  for (std::size_t i = 1; i + 1 < b.size(); ++i) {
    run = b[i] * b[i] >= b[i - 1] * b[i + 1] ? run + 1 : 0;
    best = std::max(best, run + 2);
  }
  return best;
}

std::string to_string(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::symmetric: return "symmetric";
    case SequenceKind::top_interlacing: return "top-interlacing";
    case SequenceKind::bottom_interlacing: return "bottom-interlacing";
    case SequenceKind::none: return "none";
  }
  return "unknown";
}

namespace {

nlohmann::ordered_json classification_doc(const SequenceClassification& c) {
  nlohmann::ordered_json doc;
  doc["symmetric"] = c.symmetric;
  doc["unimodal"] = c.unimodal;
  doc["top_heavy"] = c.top_heavy;
  doc["bottom_heavy"] = c.bottom_heavy;
  doc["top_interlacing"] = c.top_interlacing;
  doc["bottom_interlacing"] = c.bottom_interlacing;
  doc["log_concave"] = c.log_concave;
  doc["kind"] = to_string(c.kind());
  nlohmann::ordered_json witnesses = nlohmann::ordered_json::object();
  auto put = [&](const char* name, const std::optional<int>& w) {
    if (w) witnesses[name] = *w;
  };
  put("symmetric", c.symmetric_witness);
  put("unimodal", c.unimodal_witness);
  put("top_heavy", c.top_heavy_witness);
  put("bottom_heavy", c.bottom_heavy_witness);
  put("top_interlacing", c.top_interlacing_witness);
  put("bottom_interlacing", c.bottom_interlacing_witness);
  put("log_concave", c.log_concave_witness);
  doc["witnesses"] = std::move(witnesses);
  return doc;
}

}  // namespace

std::string classification_json(const SequenceClassification& c) {
  return classification_doc(c).dump();
}

PartialSymmetryReport verify_partial_symmetry(const Composition& beta) {
  if (beta.has_even_parts()) {
    throw FenceError(ErrorCode::parity, "partial symmetry needs an odd number of parts, got " +
                                            std::to_string(beta.size()));
  }
  const Poset poset = build_fence(beta);
  const RankSequence r = rank_sequence(poset);
  const int n = poset.size();
  PartialSymmetryReport report{beta, n, std::min(beta.front(), beta.back()), {}, true};

  for (int k = 0; k <= report.max_k; ++k) {
    PartialSymmetryRow row{k, r.coefficients[static_cast<std::size_t>(k)],
                           r.coefficients[static_cast<std::size_t>(n - k)], false, true};
    row.numeric_equal = row.ideals == row.filters;
    std::set<std::pair<std::vector<int>, std::vector<int>>> images;
    BigInt domain = 0;
    for_each_encoding<Shape::fence, Side::ideal>(beta, k, false, [&](const FenceIdeal& ideal) {
      domain += 1;
      const FenceFilter image = fence_bijection(ideal);
      if (image.total() != k || !validate(image).ok()) row.bijection_ok = false;
      images.emplace(image.asc, image.desc);
    });
    row.bijection_ok = row.bijection_ok && domain == row.ideals && BigInt(images.size()) == domain &&
                       BigInt(images.size()) == row.filters;
    report.ok = report.ok && row.numeric_equal && row.bijection_ok;
    report.rows.push_back(std::move(row));
  }
  return report;
}

HeavyCase heavy_case(const Composition& beta) {
  if (beta.size() == 1) return HeavyCase::single_part;
  if (beta.has_even_parts()) return HeavyCase::even_parts;
  if (beta.front() > beta.back()) return HeavyCase::first_larger;
  if (beta.front() < beta.back()) return HeavyCase::last_larger;
  return HeavyCase::equal_ends;
}

namespace {

SequenceKind flipped(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::top_interlacing: return SequenceKind::bottom_interlacing;
    case SequenceKind::bottom_interlacing: return SequenceKind::top_interlacing;
    default: return kind;
  }
}

Composition inner(const Composition& beta) { return beta.slice(1, beta.size() - 2); }

}  // namespace

SequenceKind predicted_kind(const Composition& beta) {
  switch (heavy_case(beta)) {
    case HeavyCase::single_part: return SequenceKind::symmetric;
    case HeavyCase::even_parts:
    case HeavyCase::first_larger: return SequenceKind::bottom_interlacing;
    case HeavyCase::last_larger: return SequenceKind::top_interlacing;
    case HeavyCase::equal_ends: return flipped(predicted_kind(inner(beta)));
  }
  return SequenceKind::none;
}

HeavyReport verify_theorem_heavy(const Composition& beta) {
  HeavyReport report{beta, heavy_case(beta), predicted_kind(beta), SequenceKind::none,
                     std::nullopt, rank_sequence(build_fence(beta)), false};
  report.observed = classify(report.r).kind();
  report.ok = report.observed == report.predicted;
  if (report.heavy_case == HeavyCase::equal_ends) {
    report.inner = classify(rank_sequence(build_fence(inner(beta)))).kind();
    report.ok = report.ok && flipped(*report.inner) == report.observed;
  }
  if (report.heavy_case == HeavyCase::single_part) {
    report.ok = report.ok && std::all_of(report.r.coefficients.begin(), report.r.coefficients.end(),
                                         [](const BigInt& v) { return v == 1; });
  }
  return report;
}

CircularSymmetryReport verify_circular_symmetry(const Composition& beta, bool check_bijection) {
  const Poset poset = build_circular_fence(beta);
  CircularSymmetryReport report{beta, rank_sequence(poset), false, std::nullopt, std::nullopt,
                                false};
  const SequenceClassification c = classify(report.r);
  report.palindromic = c.symmetric;
  report.witness = c.symmetric_witness;
  if (check_bijection) {
    const int n = poset.size();
    bool ok = true;
    for (int k = 0; k <= n && ok; ++k) {
      std::set<std::pair<std::vector<int>, std::vector<int>>> images;
      BigInt domain = 0;
      for_each_encoding<Shape::circular, Side::ideal>(beta, k, false,
                                                      [&](const CircularIdeal& ideal) {
        domain += 1;
        const CircularFilter image = circular_bijection(ideal);
        if (image.total() != k || !validate(image).ok()) ok = false;
        images.emplace(image.asc, image.desc);
      });
      const auto& r = report.r.coefficients;
      ok = ok && domain == r[static_cast<std::size_t>(k)] && BigInt(images.size()) == domain &&
           BigInt(images.size()) == r[static_cast<std::size_t>(n - k)];
    }
    report.bijection_ok = ok;
  }
  report.ok = report.palindromic && report.bijection_ok.value_or(true);
  return report;
}

bool is_exceptional_circular_shape(const Composition& beta) {
  if (beta.size() != 4) return false;
  const bool one_k = beta[0] == 1 && beta[2] == 1 && beta[1] == beta[3];
  const bool k_one = beta[1] == 1 && beta[3] == 1 && beta[0] == beta[2];
  return one_k || k_one;
}

CircularUnimodalityReport verify_conjecture_fbuni(const Composition& beta) {
  CircularUnimodalityReport report{beta, rank_sequence(build_circular_fence(beta)), false,
                                   std::nullopt, is_exceptional_circular_shape(beta), false};
  const SequenceClassification c = classify(report.r);
  report.unimodal = c.unimodal;
  report.witness = c.unimodal_witness;
  report.ok = report.unimodal != report.exceptional_shape;
  return report;
}

LogConcavityReport check_log_concavity(const Composition& beta, bool circular) {
  const Poset poset = circular ? build_circular_fence(beta) : build_fence(beta);
  LogConcavityReport report{beta, circular, rank_sequence(poset), false, std::nullopt, 0};
  report.witness = log_concave_witness(report.r.coefficients);
  report.log_concave = !report.witness;
  report.longest_window = longest_log_concave_window(report.r);
  return report;
}

std::string to_string(HeavyCase c) {
  switch (c) {
    case HeavyCase::single_part: return "single-part";
    case HeavyCase::even_parts: return "even-parts";
    case HeavyCase::first_larger: return "first-larger";
    case HeavyCase::last_larger: return "last-larger";
    case HeavyCase::equal_ends: return "equal-ends";
  }
  return "unknown";
}

std::string to_json_number(const BigInt& value) {
  if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max()) return value.str();
  return '"' + value.str() + '"';
}

std::string to_json(const RankSequence& r) {
  std::string out = "[";
  for (std::size_t i = 0; i < r.coefficients.size(); ++i) {
    if (i) out += ',';
    out += to_json_number(r.coefficients[i]);
  }
  return out + "]";
}

}  // namespace fences
