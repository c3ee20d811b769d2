#include "fences/element_set.hpp"

namespace fences {

ElementSet ElementSet::from_labels(std::initializer_list<int> labels) {
  ElementSet s;
  for (int label : labels) s.insert(label - 1);
  return s;
}

ElementSet ElementSet::from_labels(const std::vector<int>& labels) {
  ElementSet s;
  for (int label : labels) s.insert(label - 1);
  return s;
}

std::vector<int> ElementSet::indices() const {
  std::vector<int> out;
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest));
  }
  return out;
}

std::vector<int> ElementSet::labels() const {
  std::vector<int> out = indices();
  for (int& v : out) ++v;
  return out;
}

std::string ElementSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int label : labels()) {
    if (!first) out += ',';
    first = false;
    out += 'x' + std::to_string(label);
  }
  return out + "}";
}

}  // namespace fences
