#include "fences/bijections.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

#include "fences/error.hpp"

namespace fences {

namespace {

int wrap_index(int i, int n) { return ((i % n) + n) % n; }

std::string join(std::span<const int> v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

void record(Trace* trace, std::string step, const std::vector<int>& asc,
            const std::vector<int>& desc, std::string note = {}) {
  if (trace) trace->push_back({std::move(step), asc, desc, std::move(note)});
}

Block finish_block(std::span<const int> seq, int first, int length, int n) {
  const int last = wrap_index(first + length - 1, n);
  int ones = 0;
  while (ones < length && seq[static_cast<std::size_t>(wrap_index(last - ones, n))] == 1) ++ones;
  return Block{first, last, length, ones};
}

}  // namespace

BlockStructure block_structure(std::span<const int> seq, bool circular) {
  BlockStructure out;
  out.circular = circular;
  const int n = static_cast<int>(seq.size());
  for (int i = 0; i < n; ++i) {
    if (seq[static_cast<std::size_t>(i)] < 0) {
      throw FenceError(ErrorCode::negative_entry,
                       "entry " + std::to_string(i + 1) + " is negative: " + join(seq));
    }
  }
  if (n == 0) return out;

  int start = 0;
  if (circular) {
    const auto zero = std::find(seq.begin(), seq.end(), 0);
    if (zero == seq.end()) {
      out.positive = true;
      return out;
    }
    start = static_cast<int>(zero - seq.begin()) + 1;
  }
  int run_first = -1;
  int run_length = 0;
  for (int step = 0; step < n; ++step) {
    const int i = circular ? wrap_index(start + step, n) : step;
    if (seq[static_cast<std::size_t>(i)] > 0) {
      if (run_length == 0) run_first = i;
      ++run_length;
    } else if (run_length > 0) {
      out.blocks.push_back(finish_block(seq, run_first, run_length, n));
      run_length = 0;
    }
  }
  if (run_length > 0) out.blocks.push_back(finish_block(seq, run_first, run_length, n));
  return out;
}

namespace steps {

std::vector<int> move_trailing_ones(std::span<const int> seq, const BlockStructure& blocks) {
  std::vector<int> out(seq.begin(), seq.end());
  const int n = static_cast<int>(seq.size());
  for (const Block& b : blocks.blocks) {
    if (b.trailing_ones == 0) continue;
    const int zero = b.last + 1;
    if ((!blocks.circular && zero >= n) ||
        seq[static_cast<std::size_t>(wrap_index(zero, n))] != 0) {
      throw FenceError(ErrorCode::step_invariant,
                       "trailing ones ending at entry " + std::to_string(b.last + 1) +
                           " are not followed by a zero in " + join(seq));
    }
    const int head = b.last - b.trailing_ones + 1;
    out[static_cast<std::size_t>(wrap_index(head, n))] = 0;
    for (int j = 1; j <= b.trailing_ones; ++j) {
      out[static_cast<std::size_t>(wrap_index(head + j, n))] = 1;
    }
  }
  return out;
}

std::vector<int> shift_block_heads(std::span<const int> seq, const BlockStructure& blocks) {
  std::vector<int> out(seq.begin(), seq.end());
  const int n = static_cast<int>(seq.size());
  for (const Block& b : blocks.blocks) {
    const int rest = b.length - b.trailing_ones;
    if (rest < 2) continue;
    out[static_cast<std::size_t>(b.first)] += 1;
    out[static_cast<std::size_t>(wrap_index(b.first + rest - 1, n))] -= 1;
  }
  return out;
}

namespace {

std::vector<int> apply_blocks(std::span<const int> seq, bool circular, Trace* trace) {
  const BlockStructure blocks = block_structure(seq, circular);
  const std::string note = blocks.positive ? "positive" : "";
  std::vector<int> moved = move_trailing_ones(seq, blocks);
  record(trace, "P1", {}, moved, note);
  std::vector<int> shifted = shift_block_heads(moved, blocks);
  record(trace, "P2", {}, shifted, note);
  return shifted;
}

}  // namespace

std::vector<int> gate_sequence_map(std::span<const int> seq, Trace* trace) {
  return apply_blocks(seq, false, trace);
}

std::vector<int> circular_sequence_map(std::span<const int> seq, Trace* trace) {
  return apply_blocks(seq, true, trace);
}

void push_single_ones(std::vector<int>& asc, std::vector<int>& desc, std::span<const int> alpha,
                      bool circular) {
  const int ell = static_cast<int>(desc.size());
  for (int i = 0; i < ell; ++i) {
    const auto j = static_cast<std::size_t>(circular ? wrap_index(i + 1, ell) : i + 1);
    auto& d = desc[static_cast<std::size_t>(i)];
    if (d == 1 && asc[j] < alpha[j] - 1) {
      d = 0;
      ++asc[j];
    }
  }
}

void pull_back_units(std::vector<int>& asc, std::vector<int>& desc) {
  for (std::size_t i = 0; i < desc.size(); ++i) {
    if (desc[i] == 0 && asc[i] > 0) {
      desc[i] = 1;
      --asc[i];
    }
  }
}

std::vector<int> fence_cut_points(std::span<const int> asc, std::span<const int> alpha) {
  std::vector<int> cuts;
  const int ell = static_cast<int>(alpha.size()) - 1;
  for (int i = 1; i < ell; ++i) {
    if (asc[static_cast<std::size_t>(i)] < alpha[static_cast<std::size_t>(i)] - 1) {
      cuts.push_back(i);
    }
  }
  return cuts;
}

std::vector<int> circular_cut_points(std::span<const int> asc, std::span<const int> alpha) {
  std::vector<int> cuts;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (asc[i] < alpha[i] - 1) cuts.push_back(static_cast<int>(i));
  }
  return cuts;
}

}  // namespace steps

namespace {

void require_restricted(const GateIdeal& factor, const std::string& where) {
  const ValidationReport report = validate(factor, true);
  if (!report.ok()) {
    throw FenceError(ErrorCode::step_invariant,
                     where + ": factor " + join(factor.desc) +
                         " is not a restricted gate ideal: " + report.to_string());
  }
}

template <class Enc>
void require_output(const Enc& out, int expected_total, bool restricted, const std::string& map) {
  const ValidationReport report = validate(out, restricted);
  if (!report.ok() || out.total() != expected_total) {
    throw FenceError(ErrorCode::step_invariant,
                     map + " produced " + to_json(out) + ": " + report.to_string() +
                         (out.total() != expected_total ? ", size changed" : ""));
  }
}

// Maps the factor of `desc` of given length starting at `first` (wrapping
// when circular) through the gate map and writes it back into `out`.
std::string map_factor(const std::vector<int>& desc, std::span<const int> delta, int first,
                       int length, bool verify, const std::string& step, std::vector<int>& out) {
  const int ell = static_cast<int>(desc.size());
  std::vector<int> sub;
  std::vector<int> sub_delta;
  for (int j = 0; j < length; ++j) {
    const auto i = static_cast<std::size_t>(wrap_index(first + j, ell));
    sub.push_back(desc[i]);
    sub_delta.push_back(delta[i]);
  }
  if (verify) require_restricted(GateIdeal{Composition(sub_delta), {}, sub}, step);
  const std::vector<int> mapped = steps::gate_sequence_map(sub);
  for (int j = 0; j < length; ++j) {
    out[static_cast<std::size_t>(wrap_index(first + j, ell))] = mapped[static_cast<std::size_t>(j)];
  }
  return join(sub);
}

}  // namespace

GateFilter gate_bijection(const GateIdeal& ideal, const MapOptions& options) {
  require_valid(ideal, true);
  GateFilter out{ideal.composition, {}, steps::gate_sequence_map(ideal.desc, options.trace)};
  if (options.verify_steps) require_output(out, ideal.total(), true, "gate map");
  return out;
}

GateIdeal gate_bijection_inverse(const GateFilter& filter, const MapOptions& options) {
  require_valid(filter, true);
  const GateIdeal flipped = reverse(filter);
  record(options.trace, "reverse", {}, flipped.desc, "read as an ideal over the reversed parts");
  const GateIdeal out = reverse(gate_bijection(flipped, options));
  record(options.trace, "reverse", {}, out.desc);
  return out;
}

FenceDomain fence_domain(const FenceIdeal& ideal) {
  if (ideal.total() <= std::min(ideal.composition.front(), ideal.composition.back())) {
    return FenceDomain::bounded_size;
  }
  return validate(ideal, true).ok() ? FenceDomain::restricted : FenceDomain::outside;
}

FenceDomain fence_domain(const FenceFilter& filter) {
  if (filter.total() <= std::min(filter.composition.front(), filter.composition.back())) {
    return FenceDomain::bounded_size;
  }
  return validate(filter, true).ok() ? FenceDomain::restricted : FenceDomain::outside;
}

namespace {

template <class Enc>
void require_fence_domain(const Enc& enc, FenceDomain domain) {
  if (domain != FenceDomain::outside) return;
  const int bound = std::min(enc.composition.front(), enc.composition.back());
  throw FenceError(ErrorCode::precondition,
                   "size " + std::to_string(enc.total()) + " exceeds min(first part, last part) = " +
                       std::to_string(bound) + " and the " + to_string(Enc::side) +
                       " is not restricted: " + validate(enc, true).to_string());
}

}  // namespace

FenceFilter fence_bijection(const FenceIdeal& ideal, const MapOptions& options) {
  require_valid(ideal, false);
  const FenceDomain domain = fence_domain(ideal);
  require_fence_domain(ideal, domain);

  const AlphaDeltaParams params = alpha_delta(ideal.composition, false);
  std::vector<int> a = ideal.asc;
  std::vector<int> d = ideal.desc;

  steps::push_single_ones(a, d, params.alpha, false);
  record(options.trace, "PH1", a, d);

  const std::vector<int> cuts = steps::fence_cut_points(a, params.alpha);
  std::vector<int> e = d;
  std::string factors;
  std::vector<int> bounds{0};
  bounds.insert(bounds.end(), cuts.begin(), cuts.end());
  bounds.push_back(static_cast<int>(d.size()));
  for (std::size_t k = 0; k + 1 < bounds.size(); ++k) {
    const int length = bounds[k + 1] - bounds[k];
    if (length == 0) continue;
    if (!factors.empty()) factors += " | ";
    factors += map_factor(d, params.delta, bounds[k], length, options.verify_steps, "PH2", e);
  }
  record(options.trace, "PH2", a, e, factors.empty() ? "" : "factors " + factors);

  steps::pull_back_units(a, e);
  record(options.trace, "PH3", a, e);

  FenceFilter out{ideal.composition, std::move(a), std::move(e)};
  if (options.verify_steps) {
    require_output(out, ideal.total(), domain == FenceDomain::restricted, "fence map");
  }
  return out;
}

FenceIdeal fence_bijection_inverse(const FenceFilter& filter, const MapOptions& options) {
  require_valid(filter, false);
  require_fence_domain(filter, fence_domain(filter));
  const FenceIdeal flipped = reverse(filter);
  record(options.trace, "reverse", flipped.asc, flipped.desc,
         "read as an ideal over " + flipped.composition.to_string());
  const FenceIdeal out = reverse(fence_bijection(flipped, options));
  record(options.trace, "reverse", out.asc, out.desc);
  return out;
}

NarrowFilter narrow_circular_bijection(const NarrowIdeal& ideal, const MapOptions& options) {
  require_valid(ideal, false);
  NarrowFilter out{ideal.composition, {}, steps::circular_sequence_map(ideal.desc, options.trace)};
  if (options.verify_steps) require_output(out, ideal.total(), false, "narrow circular map");
  return out;
}

NarrowIdeal narrow_circular_bijection_inverse(const NarrowFilter& filter,
                                              const MapOptions& options) {
  require_valid(filter, false);
  const NarrowIdeal flipped = reverse(filter);
  record(options.trace, "reverse", {}, flipped.desc, "read as an ideal over the reversed parts");
  const NarrowIdeal out = reverse(narrow_circular_bijection(flipped, options));
  record(options.trace, "reverse", {}, out.desc);
  return out;
}

CircularFilter circular_bijection(const CircularIdeal& ideal, const MapOptions& options) {
  require_valid(ideal, false);
  const AlphaDeltaParams params = alpha_delta(ideal.composition, true);
  std::vector<int> a = ideal.asc;
  std::vector<int> d = ideal.desc;
  const int ell = static_cast<int>(d.size());

  steps::push_single_ones(a, d, params.alpha, true);
  record(options.trace, "PHC1", a, d);

  const std::vector<int> cuts = steps::circular_cut_points(a, params.alpha);
  std::vector<int> e = d;
  std::string note;
  if (cuts.empty()) {
    if (options.verify_steps) {
      const NarrowIdeal whole{Composition(params.delta), {}, d};
      const ValidationReport report = validate(whole, false);
      if (!report.ok()) {
        throw FenceError(ErrorCode::step_invariant, "PHC2: " + join(d) +
                                                        " is not a narrow circular ideal: " +
                                                        report.to_string());
      }
    }
    e = steps::circular_sequence_map(d);
    note = "no cut, circular map on " + join(d);
  } else {
    std::string factors;
    for (std::size_t k = 0; k < cuts.size(); ++k) {
      const int first = cuts[k];
      const int next = cuts[(k + 1) % cuts.size()];
      int length = wrap_index(next - first, ell);
      if (length == 0) length = ell;
      if (!factors.empty()) factors += " | ";
      factors += map_factor(d, params.delta, first, length, options.verify_steps, "PHC2", e);
    }
    note = "factors " + factors;
  }
  record(options.trace, "PHC2", a, e, note);

  steps::pull_back_units(a, e);
  record(options.trace, "PHC3", a, e);

  CircularFilter out{ideal.composition, std::move(a), std::move(e)};
  if (options.verify_steps) require_output(out, ideal.total(), false, "circular fence map");
  return out;
}

CircularIdeal circular_bijection_inverse(const CircularFilter& filter, const MapOptions& options) {
  require_valid(filter, false);
  const CircularIdeal flipped = reverse(filter);
  record(options.trace, "reverse", flipped.asc, flipped.desc,
         "read as an ideal over " + flipped.composition.to_string());
  const CircularIdeal out = reverse(circular_bijection(flipped, options));
  record(options.trace, "reverse", out.asc, out.desc);
  return out;
}

std::string to_string(FenceDomain domain) {
  switch (domain) {
    case FenceDomain::bounded_size: return "bounded-size";
    case FenceDomain::restricted: return "restricted";
    case FenceDomain::outside: return "outside";
  }
  return "unknown";
}

std::string to_json(const Trace& trace) {
  auto doc = nlohmann::ordered_json::array();
  for (const TraceStep& s : trace) {
    nlohmann::ordered_json step;
    step["step"] = s.step;
    if (!s.asc.empty()) step["asc"] = s.asc;
    step["desc"] = s.desc;
    if (!s.note.empty()) step["note"] = s.note;
    doc.push_back(std::move(step));
  }
  return doc.dump();
}

}  // namespace fences
