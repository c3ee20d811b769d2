#include "fences/composition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "fences/error.hpp"

namespace fences {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

void compositions_rec(int remaining, std::vector<int>& prefix, std::vector<Composition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = 1; part <= remaining; ++part) {
    prefix.push_back(part);
    compositions_rec(remaining - part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) {
    throw FenceError(ErrorCode::invalid_composition, "composition must have at least one part");
  }
  for (int p : parts_) {
    if (p < 1) {
      throw FenceError(ErrorCode::invalid_composition,
                       "composition parts must be positive, got " + std::to_string(p));
    }
  }
  total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Composition Composition::parse(std::string_view text) {
  std::vector<int> parts;
  try {
    parts = parse_int_list(text);
  } catch (const FenceError& e) {
    throw FenceError(ErrorCode::invalid_composition, e.what());
  }
  return Composition(std::move(parts));
}

Composition Composition::reversed() const {
  return Composition(std::vector<int>(parts_.rbegin(), parts_.rend()));
}

Composition Composition::slice(std::size_t first, std::size_t count) const {
  return Composition(std::vector<int>(parts_.begin() + static_cast<std::ptrdiff_t>(first),
                                      parts_.begin() + static_cast<std::ptrdiff_t>(first + count)));
}

std::string Composition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::vector<Composition> compositions_of(int total) {
  std::vector<Composition> out;
  if (total < 1) return out;
  std::vector<int> prefix;
  compositions_rec(total, prefix, out);
  return out;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> values;
  text = trim(text);
  if (text.empty()) {
    throw FenceError(ErrorCode::invalid_composition, "empty integer list");
  }
  while (true) {
    const auto comma = text.find(',');
    std::string_view item = trim(text.substr(0, comma));
    int value = 0;
    if (!item.empty() && item.front() == '+') item.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw FenceError(ErrorCode::invalid_composition,
                       "malformed integer '" + std::string(item) + "'");
    }
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return values;
}

}  // namespace fences
