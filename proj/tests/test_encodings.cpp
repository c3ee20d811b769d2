#include <gtest/gtest.h>

#include "fences/encodings.hpp"
#include "fences/error.hpp"
#include "oracle.hpp"

using namespace fences;

namespace {

const Composition kPhiBeta{6, 2, 1, 2, 3, 1, 6};
const Composition kCircBeta{2, 1, 2, 3, 1, 2, 2, 1};

template <class Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const FenceError& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected a FenceError";
  return ErrorCode::precondition;
}

// Each chain of the layout meets the subset in a bottom segment (ideal) or a
// top segment (filter) of that chain.
bool chains_are_prefixes(const std::vector<std::vector<int>>& chains, ElementSet s, bool from_bottom) {
  for (const auto& chain : chains) {
    int count = 0;
    for (int e : chain) count += s.contains(e);
    for (int j = 0; j < static_cast<int>(chain.size()); ++j) {
      const bool expected = from_bottom ? j < count : j >= static_cast<int>(chain.size()) - count;
      if (s.contains(chain[static_cast<std::size_t>(j)]) != expected) return false;
    }
  }
  return true;
}

template <Shape S>
void round_trip_all(const Composition& comp, const oracle::Relation& rel) {
  const EncodingLayout layout = encoding_layout(S, comp);
  for (std::uint64_t bits : oracle::ideals(rel)) {
    const ElementSet s(bits);
    const auto enc = encode<S, Side::ideal>(comp, s);
    ASSERT_TRUE(validate(enc).ok()) << validate(enc).to_string();
    ASSERT_EQ(decode(enc), s);
    ASSERT_EQ(enc.total(), s.size());
    ASSERT_TRUE(chains_are_prefixes(layout.asc, s, true));
    ASSERT_TRUE(chains_are_prefixes(layout.desc, s, true));
  }
  for (std::uint64_t bits : oracle::filters(rel)) {
    const ElementSet s(bits);
    const auto enc = encode<S, Side::filter>(comp, s);
    ASSERT_TRUE(validate(enc).ok()) << validate(enc).to_string();
    ASSERT_EQ(decode(enc), s);
    ASSERT_TRUE(chains_are_prefixes(layout.asc, s, false));
    ASSERT_TRUE(chains_are_prefixes(layout.desc, s, false));
  }
}

// The condition sets describe exactly the ideals (filters): the number of
// valid encodings equals the number of ideals (filters).
template <Shape S>
void conditions_are_exact(const Composition& comp, const oracle::Relation& rel) {
  std::size_t ideals = 0, filters = 0;
  for_each_encoding<S, Side::ideal>(comp, -1, false, [&](const auto&) { ++ideals; });
  for_each_encoding<S, Side::filter>(comp, -1, false, [&](const auto&) { ++filters; });
  ASSERT_EQ(ideals, oracle::ideals(rel).size()) << comp.to_string();
  ASSERT_EQ(filters, oracle::filters(rel).size()) << comp.to_string();
}

std::vector<int> narrow_beta(const std::vector<int>& delta) {
  std::vector<int> out;
  for (int d : delta) {
    out.push_back(1);
    out.push_back(d);
  }
  return out;
}

}  // namespace

TEST(Encoding, FenceWorkedExample) {
  const auto enc = encode<Shape::fence, Side::ideal>(
      kPhiBeta, ElementSet::from_labels({9, 10, 11, 12, 13, 16}));
  EXPECT_EQ(enc.asc, (std::vector<int>{0, 0, 1, 0}));
  EXPECT_EQ(enc.desc, (std::vector<int>{1, 3, 1}));
  const ValidationReport report = validate(enc);
  EXPECT_TRUE(report.ok()) << report.to_string();
  EXPECT_EQ(pretty(enc), "ideal  a: 0   0   1   0\n       d:   1   3   1\n");
}

TEST(Encoding, CircularWorkedExample) {
  const auto enc = encode<Shape::circular, Side::ideal>(
      kCircBeta, ElementSet::from_labels({1, 2, 3, 4, 5, 9, 12}));
  EXPECT_EQ(enc.asc, (std::vector<int>{1, 1, 0, 0}));
  EXPECT_EQ(enc.desc, (std::vector<int>{2, 1, 1, 1}));
  EXPECT_TRUE(validate(enc).ok());
}

TEST(Encoding, EmptySetIsAllZero) {
  const auto fi = encode<Shape::fence, Side::ideal>(kPhiBeta, ElementSet{});
  EXPECT_EQ(fi.asc, std::vector<int>(4, 0));
  EXPECT_EQ(fi.desc, std::vector<int>(3, 0));
  const auto cf = encode<Shape::circular, Side::filter>(kCircBeta, ElementSet{});
  EXPECT_EQ(cf.asc, std::vector<int>(4, 0));
  EXPECT_EQ(cf.desc, std::vector<int>(4, 0));
}

TEST(Encoding, RejectsNonIdeals) {
  EXPECT_EQ(code_of([] { encode<Shape::fence, Side::ideal>(kPhiBeta, ElementSet::from_labels({2})); }),
            ErrorCode::not_an_ideal);
  EXPECT_EQ(code_of([] { encode<Shape::fence, Side::filter>(kPhiBeta, ElementSet::from_labels({1})); }),
            ErrorCode::not_a_filter);
}

TEST(Validation, GateRestrictedLastEntry) {
  const GateIdeal enc{Composition{2, 3, 1}, {}, {0, 0, 1}};
  EXPECT_TRUE(validate(enc).ok());
  const ValidationReport r = validate(enc, true);
  EXPECT_TRUE(r.violates("I3"));
  EXPECT_EQ(r.labels(), (std::vector<std::string>{"I3"}));
  EXPECT_FALSE(validate(GateIdeal{Composition{2, 3, 1}, {}, {2, 1, 0}}, true).violates("I3"));
}

TEST(Validation, FenceBounds) {
  const FenceIdeal enc{kPhiBeta, {7, 0, 0, 0}, {0, 0, 0}};
  const ValidationReport r = validate(enc);
  EXPECT_TRUE(r.violates("IF1"));
  EXPECT_NE(r.to_string().find("IF1[1]"), std::string::npos);
}

TEST(Validation, LengthMismatch) {
  EXPECT_EQ(code_of([] { validate(FenceIdeal{kPhiBeta, {0, 0, 0}, {0, 0, 0}}); }),
            ErrorCode::length_mismatch);
  EXPECT_EQ(code_of([] { make_encoding<Shape::gate, Side::ideal>(Composition{1, 2}, {}, {0}); }),
            ErrorCode::length_mismatch);
  EXPECT_EQ(code_of([] { validate(FenceIdeal{Composition{1, 1}, {}, {}}); }), ErrorCode::parity);
}

TEST(Validation, RequireValidThrows) {
  EXPECT_EQ(code_of([] { require_valid(GateIdeal{Composition{2, 3, 1}, {}, {0, 0, 1}}, true); }),
            ErrorCode::invalid_encoding);
  EXPECT_EQ(code_of([] { decode(GateIdeal{Composition{2}, {}, {4}}); }), ErrorCode::invalid_encoding);
}

TEST(Reverse, FenceExample) {
  const FenceIdeal enc{kPhiBeta, {0, 0, 1, 0}, {1, 3, 1}};
  const FenceFilter r = reverse(enc);
  EXPECT_EQ(r.composition, Composition({6, 1, 3, 2, 1, 2, 6}));
  EXPECT_EQ(r.asc, (std::vector<int>{0, 1, 0, 0}));
  EXPECT_EQ(r.desc, (std::vector<int>{1, 3, 1}));
  EXPECT_EQ(reverse(r), enc);
}

TEST(Reverse, GateAndCircular) {
  const GateFilter g = reverse(GateIdeal{Composition{1, 2}, {}, {2, 0}});
  EXPECT_EQ(g.composition, Composition({2, 1}));
  EXPECT_EQ(g.desc, (std::vector<int>{0, 2}));
  const CircularIdeal c{kCircBeta, {1, 1, 0, 0}, {2, 1, 1, 1}};
  const CircularFilter rc = reverse(c);
  EXPECT_EQ(rc.composition, Composition({2, 1, 2, 2, 1, 3, 2, 1}));
  EXPECT_EQ(rc.asc, (std::vector<int>{1, 0, 0, 1}));
  EXPECT_EQ(rc.desc, (std::vector<int>{1, 1, 1, 2}));
  EXPECT_EQ(reverse(rc), c);
}

// Reversal maps valid ideals to valid filters of the mirrored poset.
TEST(Reverse, PreservesValidity) {
  for (int m = 1; m <= 9; ++m) {
    for (const Composition& beta : compositions_of(m)) {
      if (beta.has_even_parts()) {
        for_each_encoding<Shape::circular, Side::ideal>(beta, -1, false, [](const CircularIdeal& e) {
          ASSERT_TRUE(validate(reverse(e)).ok());
          ASSERT_EQ(reverse(reverse(e)), e);
        });
      } else {
        for (bool restricted : {false, true}) {
          for_each_encoding<Shape::fence, Side::ideal>(beta, -1, restricted, [&](const FenceIdeal& e) {
            ASSERT_TRUE(validate(reverse(e), restricted).ok());
          });
        }
      }
    }
  }
}

TEST(Encoding, RoundTripAgainstOracle) {
  for (int m = 1; m <= 10; ++m) {
    for (const auto& parts : oracle::compositions(m)) {
      const Composition comp(parts);
      if (parts.size() % 2 == 1) {
        round_trip_all<Shape::fence>(comp, oracle::fence(parts));
      } else {
        round_trip_all<Shape::circular>(comp, oracle::circular_fence(parts));
      }
      if (m <= 7) {
        round_trip_all<Shape::gate>(comp, oracle::gate(parts));
        round_trip_all<Shape::narrow_circular>(comp, oracle::circular_fence(narrow_beta(parts)));
      }
    }
  }
}

TEST(Validation, ConditionSetsMatchOracleCounts) {
  for (int m = 1; m <= 10; ++m) {
    for (const auto& parts : oracle::compositions(m)) {
      const Composition comp(parts);
      if (parts.size() % 2 == 1) {
        conditions_are_exact<Shape::fence>(comp, oracle::fence(parts));
      } else {
        conditions_are_exact<Shape::circular>(comp, oracle::circular_fence(parts));
      }
      if (m <= 7) {
        conditions_are_exact<Shape::gate>(comp, oracle::gate(parts));
        conditions_are_exact<Shape::narrow_circular>(comp, oracle::circular_fence(narrow_beta(parts)));
      }
    }
  }
}

TEST(Validation, RestrictedGateIdealsAndFiltersEquinumerous) {
  for (int m = 1; m <= 7; ++m) {
    for (const auto& delta : oracle::compositions(m)) {
      std::size_t gate = 0;
      for_each_encoding<Shape::gate, Side::ideal>(Composition(delta), -1, true,
                                                  [&](const GateIdeal&) { ++gate; });
      std::size_t gate_filters = 0;
      for_each_encoding<Shape::gate, Side::filter>(Composition(delta), -1, true,
                                                   [&](const GateFilter&) { ++gate_filters; });
      EXPECT_EQ(gate, gate_filters) << Composition(delta).to_string();
    }
  }
}

TEST(Encoding, JsonShape) {
  EXPECT_EQ(to_json(FenceIdeal{kPhiBeta, {0, 0, 1, 0}, {1, 3, 1}}), R"({"a":[0,0,1,0],"d":[1,3,1]})");
  EXPECT_EQ(to_json(FenceFilter{kPhiBeta, {0, 0, 0, 1}, {2, 2, 1}}), R"({"b":[0,0,0,1],"e":[2,2,1]})");
  EXPECT_EQ(to_json(GateFilter{Composition{1, 2}, {}, {0, 2}}), R"({"e":[0,2]})");
}

TEST(Encoding, LayoutSizes) {
  const EncodingLayout layout = encoding_layout(Shape::fence, kPhiBeta);
  ASSERT_EQ(layout.asc.size(), 4u);
  ASSERT_EQ(layout.desc.size(), 3u);
  // #Ã_i = α_i - 1 and #D_i = δ_i + 1
  EXPECT_EQ(layout.asc[0].size(), 6u);
  EXPECT_EQ(layout.asc[1].size(), 0u);
  EXPECT_EQ(layout.asc[2].size(), 2u);
  EXPECT_EQ(layout.asc[3].size(), 6u);
  EXPECT_EQ(layout.desc[0].size(), 3u);
  EXPECT_EQ(layout.desc[1].size(), 3u);
  EXPECT_EQ(layout.desc[2].size(), 2u);
}
