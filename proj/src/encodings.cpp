#include "fences/encodings.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

#include "fences/error.hpp"

namespace fences {

namespace {

Composition narrow_beta(const Composition& delta) {
  std::vector<int> parts;
  for (int d : delta.parts()) {
    parts.push_back(1);
    parts.push_back(d);
  }
  return Composition(std::move(parts));
}

void require_parity(Shape shape, const Composition& composition) {
  if (shape == Shape::fence && composition.has_even_parts()) {
    throw FenceError(ErrorCode::parity, "fence encodings need an odd number of parts, got " +
                                            std::to_string(composition.size()));
  }
  if (shape == Shape::circular && !composition.has_even_parts()) {
    throw FenceError(ErrorCode::parity,
                     "circular encodings need an even number of parts, got " +
                         std::to_string(composition.size()));
  }
}

// Bounds on asc (α_i - 1) and desc (δ_i + 1) entries.
struct Caps {
  std::vector<int> asc;
  std::vector<int> desc;
};

Caps caps_for(Shape shape, const Composition& composition) {
  require_parity(shape, composition);
  Caps caps;
  if (shape == Shape::gate || shape == Shape::narrow_circular) {
    for (int d : composition.parts()) caps.desc.push_back(d + 1);
    return caps;
  }
  const AlphaDeltaParams p = alpha_delta(composition, shape == Shape::circular);
  for (int a : p.alpha) caps.asc.push_back(a - 1);
  for (int d : p.delta) caps.desc.push_back(d + 1);
  return caps;
}

void check_lengths(Shape shape, const Caps& caps, std::size_t asc, std::size_t desc) {
  if (asc != caps.asc.size() || desc != caps.desc.size()) {
    throw FenceError(ErrorCode::length_mismatch,
                     to_string(shape) + " encoding expects " + std::to_string(caps.asc.size()) +
                         " ascending and " + std::to_string(caps.desc.size()) +
                         " descending entries, got " + std::to_string(asc) + " and " +
                         std::to_string(desc));
  }
}

class Checker {
 public:
  explicit Checker(ValidationReport& report) : report_(report) {}
  void require(bool holds, const char* label, int index, const std::string& detail) {
    if (!holds) report_.violations.push_back({label, index, detail});
  }

 private:
  ValidationReport& report_;
};

std::string sub(const char* name, int i) { return std::string(name) + "_" + std::to_string(i); }

void check_bounds(Checker& c, const char* label, const char* name, const std::vector<int>& v,
                  const std::vector<int>& caps) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    const int idx = static_cast<int>(i) + 1;
    c.require(v[i] >= 0 && v[i] <= caps[i], label, idx,
              sub(name, idx) + "=" + std::to_string(v[i]) + " outside [0," +
                  std::to_string(caps[i]) + "]");
  }
}

// Index helpers: 1-based subscripts like the condition statements.
struct Seq {
  const std::vector<int>& v;
  bool wrap;
  int at(int i) const {
    const int n = static_cast<int>(v.size());
    if (wrap) i = ((i - 1) % n + n) % n + 1;
    return v[static_cast<std::size_t>(i - 1)];
  }
};

}  // namespace

std::pair<std::vector<int>, std::vector<int>> encoding_bounds(Shape shape,
                                                              const Composition& composition) {
  Caps caps = caps_for(shape, composition);
  return {std::move(caps.asc), std::move(caps.desc)};
}

template <Shape S, Side D>
int SequenceEncoding<S, D>::total() const {
  return std::accumulate(asc.begin(), asc.end(), 0) + std::accumulate(desc.begin(), desc.end(), 0);
}

bool ValidationReport::violates(const std::string& label) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.label == label; });
}

std::vector<std::string> ValidationReport::labels() const {
  std::vector<std::string> out;
  for (const Violation& v : violations) {
    if (std::find(out.begin(), out.end(), v.label) == out.end()) out.push_back(v.label);
  }
  return out;
}

std::string ValidationReport::to_string() const {
  if (ok()) return "valid";
  std::string out;
  for (const Violation& v : violations) {
    if (!out.empty()) out += "; ";
    out += v.label;
    if (v.index) out += "[" + std::to_string(v.index) + "]";
    out += ": " + v.detail;
  }
  return out;
}

template <Shape S, Side D>
ValidationReport validate(const SequenceEncoding<S, D>& enc, bool restricted) {
  const Caps caps = caps_for(S, enc.composition);
  check_lengths(S, caps, enc.asc.size(), enc.desc.size());

  ValidationReport report;
  Checker c(report);
  const int ell = static_cast<int>(enc.desc.size());
  constexpr bool ideal = D == Side::ideal;
  constexpr bool circ = S == Shape::circular || S == Shape::narrow_circular;
  const Seq d{enc.desc, circ};
  const Seq a{enc.asc, circ};
  auto dcap = [&](int i) { return caps.desc[static_cast<std::size_t>((i - 1 + ell) % ell)]; };
  auto acap = [&](int i) {
    const int n = static_cast<int>(caps.asc.size());
    return caps.asc[static_cast<std::size_t>(circ ? (i - 1 + n) % n : i - 1)];
  };
  const char* dn = ideal ? "d" : "e";
  const char* an = ideal ? "a" : "b";

  if constexpr (S == Shape::gate) {
    check_bounds(c, ideal ? "I1" : "U1", dn, enc.desc, caps.desc);
    if (!report.ok()) return report;
    if constexpr (ideal) {
      for (int i = 2; i <= ell; ++i) {
        c.require(d.at(i) != dcap(i) || d.at(i - 1) > 0, "I2", i,
                  "d_i is full but d_{i-1} is 0");
      }
      if (restricted) {
        c.require(d.at(1) <= dcap(1) - 1, "I3", 1, "d_1 exceeds delta_1");
        c.require(d.at(ell) != 1, "I3", ell, "d_l equals 1");
      }
    } else {
      for (int i = 1; i <= ell - 1; ++i) {
        c.require(d.at(i) != dcap(i) || d.at(i + 1) > 0, "U2", i,
                  "e_i is full but e_{i+1} is 0");
      }
      if (restricted) {
        c.require(d.at(1) != 1, "U3", 1, "e_1 equals 1");
        c.require(d.at(ell) <= dcap(ell) - 1, "U3", ell, "e_l exceeds delta_l");
      }
    }
  } else if constexpr (S == Shape::narrow_circular) {
    check_bounds(c, ideal ? "ICN1" : "UCN1", dn, enc.desc, caps.desc);
    if (!report.ok()) return report;
    for (int i = 1; i <= ell; ++i) {
      if constexpr (ideal) {
        c.require(d.at(i) != dcap(i) || d.at(i - 1) > 0, "ICN2", i,
                  "d_i is full but d_{i-1} is 0");
      } else {
        c.require(d.at(i) != dcap(i) || d.at(i + 1) > 0, "UCN2", i,
                  "e_i is full but e_{i+1} is 0");
      }
    }
  } else if constexpr (S == Shape::fence) {
    check_bounds(c, ideal ? "IF1" : "UF1", an, enc.asc, caps.asc);
    check_bounds(c, ideal ? "IF2" : "UF2", dn, enc.desc, caps.desc);
    if (!report.ok()) return report;
    for (int i = 1; i <= ell; ++i) {
      if constexpr (ideal) {
        if (d.at(i) == dcap(i)) {
          c.require(a.at(i) == acap(i), "IF3", i, "d_i is full but a_i is not");
          if (i > 1) c.require(d.at(i - 1) > 0, "IF3", i, "d_i is full but d_{i-1} is 0");
        }
        c.require(a.at(i + 1) == 0 || d.at(i) > 0, "IF4", i, "a_{i+1} > 0 but d_i is 0");
      } else {
        if (d.at(i) == dcap(i)) {
          c.require(a.at(i + 1) == acap(i + 1), "UF3", i, "e_i is full but b_{i+1} is not");
          if (i < ell) c.require(d.at(i + 1) > 0, "UF3", i, "e_i is full but e_{i+1} is 0");
        }
        c.require(a.at(i) == 0 || d.at(i) > 0, "UF4", i, "b_i > 0 but e_i is 0");
      }
    }
    if (restricted && ell > 0) {
      if constexpr (ideal) {
        c.require(d.at(1) <= dcap(1) - 1, "IF5", 1, "d_1 exceeds delta_1");
        c.require(d.at(ell) != 1 || a.at(ell + 1) < acap(ell + 1), "IF6", ell,
                  "d_l equals 1 and a_{l+1} is full");
      } else {
        c.require(d.at(ell) <= dcap(ell) - 1, "UF5", ell, "e_l exceeds delta_l");
        c.require(d.at(1) != 1 || a.at(1) < acap(1), "UF6", 1, "e_1 equals 1 and b_1 is full");
      }
    }
  } else {
    check_bounds(c, ideal ? "IC1" : "UC1", an, enc.asc, caps.asc);
    check_bounds(c, ideal ? "IC2" : "UC2", dn, enc.desc, caps.desc);
    if (!report.ok()) return report;
    for (int i = 1; i <= ell; ++i) {
      if constexpr (ideal) {
        if (d.at(i) == dcap(i)) {
          c.require(a.at(i) == acap(i), "IC3", i, "d_i is full but a_i is not");
          c.require(d.at(i - 1) > 0, "IC3", i, "d_i is full but d_{i-1} is 0");
        }
        c.require(a.at(i) == 0 || d.at(i - 1) > 0, "IC4", i, "a_i > 0 but d_{i-1} is 0");
      } else {
        if (d.at(i) == dcap(i)) {
          c.require(a.at(i + 1) == acap(i + 1), "UC3", i, "e_i is full but b_{i+1} is not");
          c.require(d.at(i + 1) > 0, "UC3", i, "e_i is full but e_{i+1} is 0");
        }
        c.require(a.at(i) == 0 || d.at(i) > 0, "UC4", i, "b_i > 0 but e_i is 0");
      }
    }
  }
  return report;
}

template <Shape S, Side D>
void require_valid(const SequenceEncoding<S, D>& encoding, bool restricted) {
  const ValidationReport report = validate(encoding, restricted);
  if (!report.ok()) {
    throw FenceError(ErrorCode::invalid_encoding,
                     std::string(restricted ? "restricted " : "") + to_string(S) + " " +
                         to_string(D) + " encoding is invalid: " + report.to_string());
  }
}

Poset encoding_poset(Shape shape, const Composition& composition) {
  require_parity(shape, composition);
  switch (shape) {
    case Shape::gate: return build_gate(composition);
    case Shape::fence: return build_fence(composition);
    case Shape::circular: return build_circular_fence(composition);
    case Shape::narrow_circular: return build_circular_fence(narrow_beta(composition));
  }
  throw FenceError(ErrorCode::precondition, "unknown shape");
}

EncodingLayout encoding_layout(Shape shape, const Composition& composition) {
  const Poset poset = encoding_poset(shape, composition);
  EncodingLayout layout;
  const auto segments = poset.segments();
  const bool linear = shape == Shape::fence;
  for (std::size_t j = 0; j < segments.size(); ++j) {
    const Segment& seg = segments[j];
    if (!seg.ascending) {
      layout.desc.emplace_back(seg.elements.rbegin(), seg.elements.rend());
      continue;
    }
    if (shape == Shape::gate || shape == Shape::narrow_circular) continue;
    auto first = seg.elements.begin();
    auto last = seg.elements.end();
    if (!(linear && j == 0)) ++first;
    if (!(linear && j + 1 == segments.size())) --last;
    layout.asc.emplace_back(first, std::max(first, last));
  }
  return layout;
}

template <Shape S, Side D>
SequenceEncoding<S, D> encode(const Composition& composition, ElementSet subset) {
  const Poset poset = encoding_poset(S, composition);
  if constexpr (D == Side::ideal) {
    if (!is_ideal(poset, subset)) {
      throw FenceError(ErrorCode::not_an_ideal, subset.to_string() + " is not an ideal");
    }
  } else {
    if (!is_filter(poset, subset)) {
      throw FenceError(ErrorCode::not_a_filter, subset.to_string() + " is not a filter");
    }
  }
  const EncodingLayout layout = encoding_layout(S, composition);
  auto count = [&](const std::vector<int>& chain) {
    return static_cast<int>(std::count_if(chain.begin(), chain.end(),
                                          [&](int e) { return subset.contains(e); }));
  };
  SequenceEncoding<S, D> enc{composition, {}, {}};
  for (const auto& chain : layout.asc) enc.asc.push_back(count(chain));
  for (const auto& chain : layout.desc) enc.desc.push_back(count(chain));
  return enc;
}

template <Shape S, Side D>
ElementSet decode(const SequenceEncoding<S, D>& enc) {
  require_valid(enc, false);
  const EncodingLayout layout = encoding_layout(S, enc.composition);
  ElementSet out;
  auto take = [&](const std::vector<int>& chain, int count) {
    // chains are listed bottom to top
    for (int j = 0; j < count; ++j) {
      const std::size_t pos = D == Side::ideal ? static_cast<std::size_t>(j)
                                                : chain.size() - 1 - static_cast<std::size_t>(j);
      out.insert(chain[pos]);
    }
  };
  for (std::size_t i = 0; i < layout.asc.size(); ++i) take(layout.asc[i], enc.asc[i]);
  for (std::size_t i = 0; i < layout.desc.size(); ++i) take(layout.desc[i], enc.desc[i]);
  return out;
}

Composition reversed_composition(Shape shape, const Composition& composition) {
  if (shape != Shape::circular) return composition.reversed();
  std::vector<int> parts{composition.front()};
  for (std::size_t i = composition.size() - 1; i >= 1; --i) parts.push_back(composition[i]);
  return Composition(std::move(parts));
}

namespace {

std::vector<int> rev(const std::vector<int>& v) { return {v.rbegin(), v.rend()}; }

// (a_1, a_2, ..., a_ℓ) -> (a_1, a_ℓ, ..., a_2)
std::vector<int> rev_keep_first(const std::vector<int>& v) {
  if (v.empty()) return v;
  std::vector<int> out{v.front()};
  out.insert(out.end(), v.rbegin(), v.rend() - 1);
  return out;
}

template <class Out, class In>
Out reverse_linear(const In& e) {
  return Out{reversed_composition(In::shape, e.composition), rev(e.asc), rev(e.desc)};
}

template <class Out, class In>
Out reverse_circular(const In& e) {
  return Out{reversed_composition(In::shape, e.composition), rev_keep_first(e.asc), rev(e.desc)};
}

}  // namespace

GateFilter reverse(const GateIdeal& e) { return reverse_linear<GateFilter>(e); }
GateIdeal reverse(const GateFilter& e) { return reverse_linear<GateIdeal>(e); }
FenceFilter reverse(const FenceIdeal& e) { return reverse_linear<FenceFilter>(e); }
FenceIdeal reverse(const FenceFilter& e) { return reverse_linear<FenceIdeal>(e); }
CircularFilter reverse(const CircularIdeal& e) { return reverse_circular<CircularFilter>(e); }
CircularIdeal reverse(const CircularFilter& e) { return reverse_circular<CircularIdeal>(e); }
NarrowFilter reverse(const NarrowIdeal& e) { return reverse_linear<NarrowFilter>(e); }
NarrowIdeal reverse(const NarrowFilter& e) { return reverse_linear<NarrowIdeal>(e); }

template <Shape S, Side D>
std::string pretty(const SequenceEncoding<S, D>& enc) {
  constexpr bool ideal = D == Side::ideal;
  const std::string head = ideal ? "ideal  " : "filter ";
  const std::string pad(head.size(), ' ');
  std::vector<int> top = enc.asc;
  if (S == Shape::circular && !top.empty()) top.push_back(top.front());

  std::size_t width = 1;
  for (int v : top) width = std::max(width, std::to_string(v).size());
  for (int v : enc.desc) width = std::max(width, std::to_string(v).size());
  auto cell = [&](const std::string& s) { return std::string(width - s.size(), ' ') + s; };
  const std::string blank(width, ' ');

  const std::string dn = ideal ? "d: " : "e: ";
  if (top.empty()) {
    std::string row = head + dn;
    for (std::size_t i = 0; i < enc.desc.size(); ++i) {
      if (i) row += ' ';
      row += cell(std::to_string(enc.desc[i]));
    }
    return row + '\n';
  }
  std::string row1 = head + (ideal ? "a: " : "b: ");
  std::string row2 = pad + dn;
  for (std::size_t i = 0; i < top.size(); ++i) {
    if (i) {
      row1 += ' ';
      row2 += ' ';
    }
    row1 += cell(std::to_string(top[i]));
    row2 += blank;
    if (i < enc.desc.size()) {
      row1 += ' ' + blank;
      row2 += ' ' + cell(std::to_string(enc.desc[i]));
    }
  }
  while (!row1.empty() && row1.back() == ' ') row1.pop_back();
  while (!row2.empty() && row2.back() == ' ') row2.pop_back();
  return row1 + '\n' + row2 + '\n';
}

template <Shape S, Side D>
std::string to_json(const SequenceEncoding<S, D>& enc) {
  nlohmann::ordered_json doc;
  constexpr bool ideal = D == Side::ideal;
  if (S == Shape::fence || S == Shape::circular) doc[ideal ? "a" : "b"] = enc.asc;
  doc[ideal ? "d" : "e"] = enc.desc;
  return doc.dump();
}

template <Shape S, Side D>
SequenceEncoding<S, D> make_encoding(Composition composition, std::vector<int> asc,
                                     std::vector<int> desc) {
  const Caps caps = caps_for(S, composition);
  check_lengths(S, caps, asc.size(), desc.size());
  return SequenceEncoding<S, D>{std::move(composition), std::move(asc), std::move(desc)};
}

std::string to_string(Shape shape) {
  switch (shape) {
    case Shape::gate: return "gate";
    case Shape::fence: return "fence";
    case Shape::circular: return "circular";
    case Shape::narrow_circular: return "narrow-circular";
  }
  return "unknown";
}

std::string to_string(Side side) { return side == Side::ideal ? "ideal" : "filter"; }

#define FENCES_INSTANTIATE(S, D)                                                              \
  template struct SequenceEncoding<S, D>;                                                     \
  template ValidationReport validate(const SequenceEncoding<S, D>&, bool);                    \
  template void require_valid(const SequenceEncoding<S, D>&, bool);                           \
  template SequenceEncoding<S, D> encode<S, D>(const Composition&, ElementSet);               \
  template ElementSet decode(const SequenceEncoding<S, D>&);                                  \
  template std::string pretty(const SequenceEncoding<S, D>&);                                 \
  template std::string to_json(const SequenceEncoding<S, D>&);                                \
  template SequenceEncoding<S, D> make_encoding<S, D>(Composition, std::vector<int>,          \
                                                      std::vector<int>);

FENCES_INSTANTIATE(Shape::gate, Side::ideal)
FENCES_INSTANTIATE(Shape::gate, Side::filter)
FENCES_INSTANTIATE(Shape::fence, Side::ideal)
FENCES_INSTANTIATE(Shape::fence, Side::filter)
FENCES_INSTANTIATE(Shape::circular, Side::ideal)
FENCES_INSTANTIATE(Shape::circular, Side::filter)
FENCES_INSTANTIATE(Shape::narrow_circular, Side::ideal)
FENCES_INSTANTIATE(Shape::narrow_circular, Side::filter)

#undef FENCES_INSTANTIATE

}  // namespace fences
