#include "fences/poset.hpp"

#include <algorithm>

#include <json.hpp>

#include "fences/error.hpp"

namespace fences {

Poset make_path_poset(PosetFamily family, Composition composition, bool mirrored,
                      std::vector<Segment> segments, int n) {
  Poset p;
  p.family_ = family;
  p.composition_ = std::move(composition);
  p.mirrored_dual_ = mirrored;
  p.n_ = n;
  p.segments_ = std::move(segments);

  const bool cycle = family == PosetFamily::circular_fence;
  p.steps_up_.assign(static_cast<std::size_t>(cycle ? n : std::max(n - 1, 0)), 0);
  std::size_t raw_covers = 0;
  for (const Segment& seg : p.segments_) {
    for (std::size_t j = 0; j + 1 < seg.elements.size(); ++j) {
      const int left = seg.elements[j];
      const int right = seg.elements[j + 1];
      p.covers_.push_back(seg.ascending ? Cover{left, right} : Cover{right, left});
      p.steps_up_[static_cast<std::size_t>(left)] = seg.ascending ? 1 : 0;
      ++raw_covers;
    }
  }
  std::sort(p.covers_.begin(), p.covers_.end());
  p.covers_.erase(std::unique(p.covers_.begin(), p.covers_.end()), p.covers_.end());
  p.degenerate_ = p.covers_.size() != raw_covers;

  if (n <= kMaxSubsetElements) {
    p.down_.assign(static_cast<std::size_t>(n), ElementSet{});
    p.up_.assign(static_cast<std::size_t>(n), ElementSet{});
    for (const Cover& c : p.covers_) {
      p.down_[c.upper].insert(c.lower);
      p.up_[c.lower].insert(c.upper);
    }
  }
  return p;
}

namespace {

// Segments of a fence-like path whose i-th run has the given length and
// direction; consecutive runs share an endpoint. With wrap, the last
// element is identified with the first.
std::vector<Segment> runs_to_segments(const std::vector<std::pair<int, bool>>& runs, bool wrap,
                                      int& n_out) {
  int total = 0;
  for (const auto& r : runs) total += r.first;
  const int n = wrap ? total : total + 1;
  std::vector<Segment> segments;
  int pos = 0;
  for (const auto& [length, ascending] : runs) {
    Segment seg{{}, ascending};
    for (int j = 0; j <= length; ++j) seg.elements.push_back((pos + j) % n);
    segments.push_back(std::move(seg));
    pos += length;
  }
  n_out = n;
  return segments;
}

std::vector<std::pair<int, bool>> fence_runs(const Composition& beta) {
  std::vector<std::pair<int, bool>> runs;
  for (std::size_t i = 0; i < beta.size(); ++i) runs.emplace_back(beta[i], i % 2 == 0);
  return runs;
}

}  // namespace

ElementSet Poset::subset(std::span<const int> labels) const {
  require_subset_capacity();
  ElementSet s;
  for (int label : labels) {
    if (label < 1 || label > n_) {
      throw FenceError(ErrorCode::element_out_of_range,
                       "element x" + std::to_string(label) + " is not in a poset with " +
                           std::to_string(n_) + " elements");
    }
    s.insert(label - 1);
  }
  return s;
}

void Poset::require_subset_capacity() const {
  if (n_ > kMaxSubsetElements) {
    throw FenceError(ErrorCode::cap_exceeded, "subset operations support at most " +
                                                  std::to_string(kMaxSubsetElements) +
                                                  " elements, poset has " + std::to_string(n_));
  }
}

Poset build_fence(const Composition& beta) {
  int n = 0;
  auto segments = runs_to_segments(fence_runs(beta), false, n);
  return make_path_poset(PosetFamily::fence, beta, false, std::move(segments), n);
}

Poset build_circular_fence(const Composition& beta) {
  if (!beta.has_even_parts()) {
    throw FenceError(ErrorCode::parity, "circular fence needs an even number of parts, got " +
                                            std::to_string(beta.size()));
  }
  int n = 0;
  auto segments = runs_to_segments(fence_runs(beta), true, n);
  return make_path_poset(PosetFamily::circular_fence, beta, false, std::move(segments), n);
}

Poset build_gate(const Composition& delta) {
  std::vector<std::pair<int, bool>> runs;
  for (std::size_t i = 0; i < delta.size(); ++i) {
    if (i) runs.emplace_back(1, true);
    runs.emplace_back(delta[i], false);
  }
  int n = 0;
  auto segments = runs_to_segments(runs, false, n);
  return make_path_poset(PosetFamily::gate, delta, false, std::move(segments), n);
}

Poset dual(const Poset& poset) {
  const int n = poset.size();
  std::vector<Segment> segments;
  for (auto it = poset.segments().rbegin(); it != poset.segments().rend(); ++it) {
    Segment seg{{}, it->ascending};
    for (auto e = it->elements.rbegin(); e != it->elements.rend(); ++e) {
      seg.elements.push_back(n - 1 - *e);
    }
    segments.push_back(std::move(seg));
  }

  Composition composition = poset.composition();
  bool mirrored = !poset.mirrored_dual();
  // Gates and odd fences are closed under mirrored duality.
  const bool closed = poset.family() == PosetFamily::gate ||
                      (poset.family() == PosetFamily::fence && !poset.composition().has_even_parts());
  if (closed) {
    composition = composition.reversed();
    mirrored = false;
  }
  return make_path_poset(poset.family(), std::move(composition), mirrored, std::move(segments), n);
}

namespace {

void require_in_ground_set(const Poset& poset, ElementSet subset) {
  poset.require_subset_capacity();
  if (!subset.is_subset_of(poset.ground_set())) {
    throw FenceError(ErrorCode::element_out_of_range,
                     "subset " + subset.to_string() + " is not contained in a poset with " +
                         std::to_string(poset.size()) + " elements");
  }
}

}  // namespace

bool is_ideal(const Poset& poset, ElementSet subset) {
  require_in_ground_set(poset, subset);
  for (std::uint64_t rest = subset.bits(); rest != 0; rest &= rest - 1) {
    if (!poset.lower_covers(std::countr_zero(rest)).is_subset_of(subset)) return false;
  }
  return true;
}

bool is_filter(const Poset& poset, ElementSet subset) {
  require_in_ground_set(poset, subset);
  for (std::uint64_t rest = subset.bits(); rest != 0; rest &= rest - 1) {
    if (!poset.upper_covers(std::countr_zero(rest)).is_subset_of(subset)) return false;
  }
  return true;
}

ElementSet down_closure(const Poset& poset, ElementSet subset) {
  require_in_ground_set(poset, subset);
  ElementSet closed = subset;
  ElementSet frontier = subset;
  while (!frontier.empty()) {
    ElementSet next;
    for (int i : frontier.indices()) next = next | poset.lower_covers(i);
    frontier = next - closed;
    closed = closed | next;
  }
  return closed;
}

ElementSet up_closure(const Poset& poset, ElementSet subset) {
  require_in_ground_set(poset, subset);
  ElementSet closed = subset;
  ElementSet frontier = subset;
  while (!frontier.empty()) {
    ElementSet next;
    for (int i : frontier.indices()) next = next | poset.upper_covers(i);
    frontier = next - closed;
    closed = closed | next;
  }
  return closed;
}

ElementSet maximal_elements(const Poset& poset, ElementSet subset) {
  require_in_ground_set(poset, subset);
  ElementSet result;
  for (int i : subset.indices()) {
    ElementSet above = up_closure(poset, poset.upper_covers(i));
    if ((above & subset).empty()) result.insert(i);
  }
  return result;
}

ElementSet minimal_elements(const Poset& poset, ElementSet subset) {
  require_in_ground_set(poset, subset);
  ElementSet result;
  for (int i : subset.indices()) {
    ElementSet below = down_closure(poset, poset.lower_covers(i));
    if ((below & subset).empty()) result.insert(i);
  }
  return result;
}

AlphaDeltaParams alpha_delta(const Composition& beta, bool circular) {
  AlphaDeltaParams params;
  params.circular = circular;
  const std::size_t s = beta.size();
  if (circular) {
    if (s % 2 != 0) {
      throw FenceError(ErrorCode::parity,
                       "circular parameters need an even number of parts, got " + std::to_string(s));
    }
    for (std::size_t i = 0; i < s / 2; ++i) {
      params.alpha.push_back(beta[2 * i]);
      params.delta.push_back(beta[2 * i + 1]);
    }
    return params;
  }
  if (s % 2 == 0) {
    throw FenceError(ErrorCode::parity,
                     "fence parameters need an odd number of parts, got " + std::to_string(s));
  }
  const std::size_t ell = s / 2;
  for (std::size_t i = 0; i <= ell; ++i) params.alpha.push_back(beta[2 * i]);
  for (std::size_t i = 0; i < ell; ++i) params.delta.push_back(beta[2 * i + 1]);
  // α_i is one more than the number of unshared elements on the ascending
  // segment; the outer endpoint of each end segment is unshared.
  params.alpha.front() += 1;
  params.alpha.back() += 1;
  return params;
}

AlphaDeltaParams alpha_delta(const Poset& poset) {
  if (poset.mirrored_dual() || poset.family() == PosetFamily::gate) {
    throw FenceError(ErrorCode::precondition,
                     "segment parameters are defined for fences and circular fences only");
  }
  return alpha_delta(poset.composition(), poset.circular());
}

std::string to_edge_list(const Poset& poset) {
  std::string out;
  for (const Cover& c : poset.covers()) {
    out += std::to_string(c.lower + 1) + ' ' + std::to_string(c.upper + 1) + '\n';
  }
  return out;
}

std::string to_string(PosetFamily family) {
  switch (family) {
    case PosetFamily::fence: return "fence";
    case PosetFamily::circular_fence: return "circular_fence";
    case PosetFamily::gate: return "gate";
  }
  return "unknown";
}

std::string to_json(const Poset& poset, int indent) {
  nlohmann::ordered_json doc;
  doc["family"] = to_string(poset.family());
  doc["composition"] = std::vector<int>(poset.composition().parts().begin(),
                                        poset.composition().parts().end());
  doc["mirrored_dual"] = poset.mirrored_dual();
  doc["degenerate"] = poset.degenerate();
  doc["n"] = poset.size();
  auto covers = nlohmann::ordered_json::array();
  for (const Cover& c : poset.covers()) covers.push_back({c.lower + 1, c.upper + 1});
  doc["covers"] = std::move(covers);
  auto segments = nlohmann::ordered_json::array();
  for (const Segment& seg : poset.segments()) {
    std::vector<int> labels;
    for (int e : seg.elements) labels.push_back(e + 1);
    segments.push_back({{"ascending", seg.ascending}, {"elements", labels}});
  }
  doc["segments"] = std::move(segments);
  return doc.dump(indent);
}

}  // namespace fences
