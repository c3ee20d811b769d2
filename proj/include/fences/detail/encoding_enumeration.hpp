#pragma once

#include <algorithm>
#include <utility>
#include <vector>

namespace fences {

/// Inclusive upper bounds for every entry: (asc bounds, desc bounds).
std::pair<std::vector<int>, std::vector<int>> encoding_bounds(Shape shape,
                                                              const Composition& composition);

namespace detail {

template <class Fn>
void enumerate_bounded(const std::vector<int>& bounds, std::vector<int>& values, std::size_t pos,
                       int remaining, bool exact, Fn& fn) {
  if (pos == bounds.size()) {
    if (!exact || remaining == 0) fn(values);
    return;
  }
  int tail_capacity = 0;
  for (std::size_t j = pos + 1; j < bounds.size(); ++j) tail_capacity += bounds[j];
  const int hi = exact ? std::min(bounds[pos], remaining) : bounds[pos];
  for (int v = 0; v <= hi; ++v) {
    if (exact && remaining - v > tail_capacity) continue;
    values[pos] = v;
    enumerate_bounded(bounds, values, pos + 1, remaining - v, exact, fn);
  }
}

}  // namespace detail

template <Shape S, Side D, class Fn>
void for_each_encoding(const Composition& composition, int size, bool restricted, Fn&& fn) {
  auto [asc_bounds, desc_bounds] = encoding_bounds(S, composition);
  std::vector<int> bounds = asc_bounds;
  bounds.insert(bounds.end(), desc_bounds.begin(), desc_bounds.end());
  std::vector<int> values(bounds.size(), 0);
  const std::size_t split = asc_bounds.size();
  auto visit = [&](const std::vector<int>& v) {
    SequenceEncoding<S, D> enc{composition,
                               std::vector<int>(v.begin(), v.begin() + split),
                               std::vector<int>(v.begin() + split, v.end())};
    if (validate(enc, restricted).ok()) fn(enc);
  };
  detail::enumerate_bounded(bounds, values, 0, size, size >= 0, visit);
}

}  // namespace fences
