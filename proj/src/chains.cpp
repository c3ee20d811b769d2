#include "fences/chains.hpp"

#include <algorithm>

#include <json.hpp>

#include "fences/error.hpp"

namespace fences {

IdealLattice::IdealLattice(const Poset& poset, std::size_t cap) : poset_(&poset) {
  poset.require_subset_capacity();
  const int n = poset.size();
  std::vector<ElementSet> level{ElementSet{}};
  rank_offsets_.push_back(0);
  for (int r = 0; r <= n; ++r) {
    const std::size_t base = ideals_.size();
    if (base + level.size() > cap) {
      throw FenceError(ErrorCode::cap_exceeded,
                       "ideal lattice exceeds the cap of " + std::to_string(cap) + " ideals");
    }
    for (std::size_t j = 0; j < level.size(); ++j) {
      ideals_.push_back(level[j]);
      index_.emplace(level[j], base + j);
    }
    up_.resize(ideals_.size());
    rank_offsets_.push_back(ideals_.size());

    std::vector<ElementSet> next;
    for (const ElementSet ideal : level) {
      for (int e = 0; e < n; ++e) {
        if (!ideal.contains(e) && poset.lower_covers(e).is_subset_of(ideal)) {
          ElementSet bigger = ideal;
          bigger.insert(e);
          next.push_back(bigger);
        }
      }
    }
    std::sort(next.begin(), next.end(), indicator_less);
    next.erase(std::unique(next.begin(), next.end()), next.end());
    const std::size_t next_base = ideals_.size();
    for (std::size_t j = 0; j < level.size(); ++j) {
      for (int e = 0; e < n; ++e) {
        const ElementSet ideal = level[j];
        if (ideal.contains(e) || !poset.lower_covers(e).is_subset_of(ideal)) continue;
        ElementSet bigger = ideal;
        bigger.insert(e);
        const auto it = std::lower_bound(next.begin(), next.end(), bigger, indicator_less);
        up_[base + j].push_back(next_base + static_cast<std::size_t>(it - next.begin()));
      }
    }
    level = std::move(next);
  }
}

std::optional<std::size_t> IdealLattice::find(ElementSet ideal) const {
  const auto it = index_.find(ideal);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

LinearExtension::LinearExtension(const Poset& poset, std::vector<int> order)
    : order_(std::move(order)) {
  const int n = poset.size();
  auto fail = [&](const std::string& why) {
    std::string labels;
    for (int e : order_) labels += (labels.empty() ? "x" : ",x") + std::to_string(e + 1);
    throw FenceError(ErrorCode::not_linear_extension, labels + " is not a linear extension: " + why);
  };
  if (static_cast<int>(order_.size()) != n) fail("expected " + std::to_string(n) + " elements");
  position_.assign(static_cast<std::size_t>(n), -1);
  for (std::size_t p = 0; p < order_.size(); ++p) {
    const int e = order_[p];
    if (e < 0 || e >= n) fail("element out of range");
    if (position_[static_cast<std::size_t>(e)] != -1) fail("element repeated");
    position_[static_cast<std::size_t>(e)] = static_cast<int>(p);
  }
  for (const Cover& c : poset.covers()) {
    if (position_[static_cast<std::size_t>(c.lower)] > position_[static_cast<std::size_t>(c.upper)]) {
      fail("x" + std::to_string(c.upper + 1) + " precedes x" + std::to_string(c.lower + 1));
    }
  }
}

LinearExtension LinearExtension::from_labels(const Poset& poset, const std::vector<int>& labels) {
  std::vector<int> order;
  order.reserve(labels.size());
  for (int label : labels) order.push_back(label - 1);
  return LinearExtension(poset, std::move(order));
}

std::vector<int> LinearExtension::labels() const {
  std::vector<int> out;
  for (int e : order_) out.push_back(e + 1);
  return out;
}

std::vector<int> LinearExtension::key_labels(ElementSet subset) const {
  std::vector<int> out;
  for (int e : order_) {
    if (subset.contains(e)) out.push_back(e + 1);
  }
  return out;
}

std::uint64_t LinearExtension::position_mask(ElementSet subset) const {
  std::uint64_t mask = 0;
  for (int e : subset.indices()) mask |= std::uint64_t{1} << position_[static_cast<std::size_t>(e)];
  return mask;
}

bool lex_less(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t diff = a ^ b;
  if (diff == 0) return false;
  const std::uint64_t first = diff & (~diff + 1);
  const std::uint64_t above = ~((first << 1) - 1);
  // The set holding the first differing position continues with it; the
  // other either continues with something later or has ended.
  if (a & first) return (b & above) != 0;
  return (a & above) == 0;
}

namespace {

struct LexContext {
  const IdealLattice& lattice;
  std::vector<std::uint64_t> keys;

  LexContext(const IdealLattice& l, const LinearExtension& ext) : lattice(l) {
    keys.reserve(l.size());
    for (std::size_t id = 0; id < l.size(); ++id) keys.push_back(ext.position_mask(l.ideal(id)));
  }
  bool less(std::size_t x, std::size_t y) const { return lex_less(keys[x], keys[y]); }
};

}  // namespace

ChainDecomposition lcd(const IdealLattice& lattice, const LinearExtension& extension) {
  const LexContext lex(lattice, extension);
  const int n = lattice.top_rank();
  const auto offsets = lattice.rank_offsets();

  std::vector<std::vector<std::size_t>> by_rank(static_cast<std::size_t>(n) + 1);
  for (int r = 0; r <= n; ++r) {
    auto& ids = by_rank[static_cast<std::size_t>(r)];
    for (std::size_t id = offsets[static_cast<std::size_t>(r)];
         id < offsets[static_cast<std::size_t>(r) + 1]; ++id) {
      ids.push_back(id);
    }
    std::sort(ids.begin(), ids.end(), [&](std::size_t x, std::size_t y) { return lex.less(x, y); });
  }

  std::vector<bool> used(lattice.size(), false);
  std::vector<std::size_t> cursor(static_cast<std::size_t>(n) + 1, 0);
  std::size_t remaining = lattice.size();
  int rank = 0;
  ChainDecomposition cd;
  while (remaining > 0) {
    auto& ids = by_rank[static_cast<std::size_t>(rank)];
    auto& at = cursor[static_cast<std::size_t>(rank)];
    while (at < ids.size() && used[ids[at]]) ++at;
    if (at == ids.size()) {
      ++rank;
      continue;
    }
    SaturatedChain chain;
    std::size_t current = ids[at];
    for (;;) {
      used[current] = true;
      --remaining;
      chain.ideals.push_back(lattice.ideal(current));
      std::optional<std::size_t> next;
      for (std::size_t up : lattice.up_covers(current)) {
        if (!used[up] && (!next || lex.less(up, *next))) next = up;
      }
      if (!next) break;
      current = *next;
    }
    cd.chains.push_back(std::move(chain));
  }
  cd.kind = kind_from_centers(cd.chains, n);
  return cd;
}

ChainDecomposition lcd(const Poset& poset, const LinearExtension& extension) {
  const IdealLattice lattice(poset);
  return lcd(lattice, extension);
}

DecompositionKind kind_from_centers(const std::vector<SaturatedChain>& chains, int top_rank) {
  bool symmetric = true;
  bool top = true;
  bool bottom = true;
  for (const SaturatedChain& c : chains) {
    const int twice_center = c.bottom_rank() + c.top_rank();
    symmetric = symmetric && twice_center == top_rank;
    top = top && (twice_center == top_rank || twice_center == top_rank + 1);
    bottom = bottom && (twice_center == top_rank || twice_center == top_rank - 1);
  }
  if (symmetric) return DecompositionKind::scd;
  if (top) return DecompositionKind::tcd;
  if (bottom) return DecompositionKind::bcd;
  return DecompositionKind::none;
}

DecompositionKind classify_cd(const IdealLattice& lattice, const ChainDecomposition& cd) {
  std::vector<bool> seen(lattice.size(), false);
  std::size_t count = 0;
  auto fail = [](const std::string& why) {
    throw FenceError(ErrorCode::not_a_partition, "chains do not partition the lattice: " + why);
  };
  for (const SaturatedChain& chain : cd.chains) {
    if (chain.ideals.empty()) fail("empty chain");
    for (std::size_t j = 0; j < chain.ideals.size(); ++j) {
      const ElementSet ideal = chain.ideals[j];
      const auto id = lattice.find(ideal);
      if (!id) fail(ideal.to_string() + " is not an ideal");
      if (seen[*id]) fail(ideal.to_string() + " appears twice");
      seen[*id] = true;
      ++count;
      if (j > 0) {
        const ElementSet prev = chain.ideals[j - 1];
        if (!prev.is_subset_of(ideal) || ideal.size() != prev.size() + 1) {
          fail(prev.to_string() + " is not covered by " + ideal.to_string());
        }
      }
    }
  }
  if (count != lattice.size()) {
    fail(std::to_string(lattice.size() - count) + " ideals are not covered");
  }
  return kind_from_centers(cd.chains, lattice.top_rank());
}

std::optional<DecompositionKind> decomposition_for(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::symmetric: return DecompositionKind::scd;
    case SequenceKind::top_interlacing: return DecompositionKind::tcd;
    case SequenceKind::bottom_interlacing: return DecompositionKind::bcd;
    case SequenceKind::none: return std::nullopt;
  }
  return std::nullopt;
}

namespace {

// Backtracking over minimal remaining elements in index order. Returns false
// when `fn` asked to stop.
bool extend(const Poset& poset, std::vector<int>& prefix, ElementSet placed,
            const std::function<bool(const std::vector<int>&)>& fn) {
  const int n = poset.size();
  if (static_cast<int>(prefix.size()) == n) return fn(prefix);
  for (int e = 0; e < n; ++e) {
    if (placed.contains(e) || !poset.lower_covers(e).is_subset_of(placed)) continue;
    prefix.push_back(e);
    ElementSet next = placed;
    next.insert(e);
    const bool go_on = extend(poset, prefix, next, fn);
    prefix.pop_back();
    if (!go_on) return false;
  }
  return true;
}

}  // namespace

void for_each_linear_extension(const Poset& poset,
                               const std::function<bool(const std::vector<int>&)>& fn) {
  poset.require_subset_capacity();
  std::vector<int> prefix;
  extend(poset, prefix, ElementSet{}, fn);
}

ExtensionSearchResult search_extensions(const Poset& poset, DecompositionKind target,
                                        std::uint64_t budget) {
  const IdealLattice lattice(poset);
  ExtensionSearchResult result;
  bool stopped = false;
  for_each_linear_extension(poset, [&](const std::vector<int>& order) {
    if (result.examined == budget) {
      result.budget_exhausted = true;
      stopped = true;
      return false;
    }
    ++result.examined;
    LinearExtension ext(poset, order);
    ChainDecomposition cd = lcd(lattice, ext);
    if (cd.kind == target) {
      result.witness = std::move(ext);
      result.decomposition = std::move(cd);
      stopped = true;
      return false;
    }
    return true;
  });
  result.exhausted = !stopped;
  return result;
}

std::string to_string(DecompositionKind kind) {
  switch (kind) {
    case DecompositionKind::scd: return "scd";
    case DecompositionKind::tcd: return "tcd";
    case DecompositionKind::bcd: return "bcd";
    case DecompositionKind::none: return "none";
  }
  return "unknown";
}

DecompositionKind parse_decomposition_kind(const std::string& text) {
  if (text == "scd") return DecompositionKind::scd;
  if (text == "tcd") return DecompositionKind::tcd;
  if (text == "bcd") return DecompositionKind::bcd;
  if (text == "none") return DecompositionKind::none;
  throw FenceError(ErrorCode::precondition, "unknown decomposition kind '" + text + "'");
}

std::string to_json(const ChainDecomposition& cd) {
  nlohmann::ordered_json doc;
  doc["kind"] = to_string(cd.kind);
  auto chains = nlohmann::ordered_json::array();
  for (const SaturatedChain& c : cd.chains) {
    nlohmann::ordered_json chain;
    chain["bottom_rank"] = c.bottom_rank();
    chain["top_rank"] = c.top_rank();
    const auto center = c.center();
    chain["center"] = center.denominator() == 1
                          ? std::to_string(center.numerator())
                          : std::to_string(center.numerator()) + "/" +
                                std::to_string(center.denominator());
    auto ideals = nlohmann::ordered_json::array();
    for (ElementSet s : c.ideals) ideals.push_back(s.labels());
    chain["ideals"] = std::move(ideals);
    chains.push_back(std::move(chain));
  }
  doc["chains"] = std::move(chains);
  return doc.dump();
}

}  // namespace fences
