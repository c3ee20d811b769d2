#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "fences/composition.hpp"
#include "fences/error.hpp"
#include "fences/poset.hpp"
#include "oracle.hpp"

using namespace fences;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const FenceError& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected a FenceError";
  return ErrorCode::precondition;
}

std::vector<std::pair<int, int>> covers_of(const Poset& p) {
  std::vector<std::pair<int, int>> out;
  for (const Cover& c : p.covers()) out.emplace_back(c.lower, c.upper);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<int, int>> sorted_unique(std::vector<std::pair<int, int>> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

TEST(Composition, ParsesAndRejects) {
  EXPECT_EQ(Composition::parse("6,2,1,2,3,1,6"), Composition({6, 2, 1, 2, 3, 1, 6}));
  EXPECT_EQ(Composition::parse(" 1 , 2 "), Composition({1, 2}));
  EXPECT_EQ(code_of([] { Composition::parse(""); }), ErrorCode::invalid_composition);
  EXPECT_EQ(code_of([] { Composition::parse("1,0"); }), ErrorCode::invalid_composition);
  EXPECT_EQ(code_of([] { Composition::parse("1,-2"); }), ErrorCode::invalid_composition);
  EXPECT_EQ(code_of([] { Composition::parse("1,,2"); }), ErrorCode::invalid_composition);
  EXPECT_EQ(code_of([] { Composition::parse("x"); }), ErrorCode::invalid_composition);
  EXPECT_EQ(code_of([] { Composition(std::vector<int>{}); }), ErrorCode::invalid_composition);
}

TEST(Composition, Basics) {
  const Composition c{2, 4, 1};
  EXPECT_EQ(c.total(), 7);
  EXPECT_FALSE(c.has_even_parts());
  EXPECT_EQ(c.reversed(), Composition({1, 4, 2}));
  EXPECT_EQ(c.slice(1, 2), Composition({4, 1}));
  EXPECT_EQ(c.to_string(), "2,4,1");
}

TEST(Composition, EnumerationCountsAndOrder) {
  for (int m = 1; m <= 10; ++m) {
    const auto all = compositions_of(m);
    EXPECT_EQ(all.size(), std::size_t{1} << (m - 1));
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    for (const auto& c : all) EXPECT_EQ(c.total(), m);
  }
}

TEST(Poset, FenceFromFigure) {
  const Poset p = build_fence({2, 4, 1});
  EXPECT_EQ(p.size(), 8);
  // x1<x2<x3, x3>x4>x5>x6>x7, x7<x8
  const std::vector<std::pair<int, int>> expected{{0, 1}, {1, 2}, {3, 2}, {4, 3},
                                                  {5, 4}, {6, 5}, {6, 7}};
  EXPECT_EQ(covers_of(p), sorted_unique(expected));
  EXPECT_EQ(to_edge_list(p), "1 2\n2 3\n4 3\n5 4\n6 5\n7 6\n7 8\n");
}

TEST(Poset, SmallCases) {
  const Poset chain = build_fence({1});
  EXPECT_EQ(chain.size(), 2);
  EXPECT_EQ(covers_of(chain), (std::vector<std::pair<int, int>>{{0, 1}}));
  EXPECT_EQ(build_fence({6, 2, 1, 2, 3, 1, 6}).size(), 22);
  EXPECT_EQ(build_circular_fence({2, 1, 1, 2}).size(), 6);
  EXPECT_EQ(build_circular_fence({2, 1, 2, 3, 1, 2, 2, 1}).size(), 14);
  EXPECT_EQ(build_gate({2, 3, 1}).size(), 9);
  EXPECT_EQ(build_gate({1}).size(), 2);
}

TEST(Poset, CircularParityAndDegenerate) {
  EXPECT_EQ(code_of([] { build_circular_fence({1, 2, 3}); }), ErrorCode::parity);
  const Poset p = build_circular_fence({1, 1});
  EXPECT_TRUE(p.degenerate());
  EXPECT_EQ(p.size(), 2);
  EXPECT_FALSE(build_circular_fence({1, 2}).degenerate());
}

TEST(Poset, CoversMatchOracle) {
  for (int m = 1; m <= 12; ++m) {
    for (const auto& parts : oracle::compositions(m)) {
      const Composition beta(parts);
      EXPECT_EQ(covers_of(build_fence(beta)), sorted_unique(oracle::fence(parts).covers));
      EXPECT_EQ(covers_of(build_gate(beta)), sorted_unique(oracle::gate(parts).covers));
      if (parts.size() % 2 == 0) {
        EXPECT_EQ(covers_of(build_circular_fence(beta)),
                  sorted_unique(oracle::circular_fence(parts).covers));
      }
    }
  }
}

TEST(Poset, PathAndCycleDegrees) {
  for (int m = 1; m <= 12; ++m) {
    for (const Composition& beta : compositions_of(m)) {
      const Poset f = build_fence(beta);
      EXPECT_EQ(f.size(), m + 1);
      std::map<int, int> degree;
      for (const Cover& c : f.covers()) ++degree[c.lower], ++degree[c.upper];
      EXPECT_EQ(std::count_if(degree.begin(), degree.end(), [](auto& kv) { return kv.second == 1; }), 2);
      EXPECT_TRUE(std::all_of(degree.begin(), degree.end(), [](auto& kv) { return kv.second <= 2; }));
      if (beta.has_even_parts() && m > 2) {
        const Poset c = build_circular_fence(beta);
        EXPECT_EQ(c.size(), m);
        std::map<int, int> cdeg;
        for (const Cover& cv : c.covers()) ++cdeg[cv.lower], ++cdeg[cv.upper];
        EXPECT_EQ(static_cast<int>(cdeg.size()), m);
        EXPECT_TRUE(std::all_of(cdeg.begin(), cdeg.end(), [](auto& kv) { return kv.second == 2; }));
      }
    }
  }
}

TEST(Poset, AlphaDelta) {
  const auto lin = alpha_delta(Composition{6, 2, 1, 2, 3, 1, 6}, false);
  EXPECT_EQ(lin.alpha, (std::vector<int>{7, 1, 3, 7}));
  EXPECT_EQ(lin.delta, (std::vector<int>{2, 2, 1}));
  const auto circ = alpha_delta(build_circular_fence({2, 1, 2, 3, 1, 2, 2, 1}));
  EXPECT_EQ(circ.alpha, (std::vector<int>{2, 2, 1, 2}));
  EXPECT_EQ(circ.delta, (std::vector<int>{1, 3, 2, 1}));
  const auto small = alpha_delta(Composition{1, 1, 1}, false);
  EXPECT_EQ(small.alpha, (std::vector<int>{2, 2}));
  EXPECT_EQ(small.delta, (std::vector<int>{1}));
  EXPECT_EQ(code_of([] { alpha_delta(Composition{1, 1}, false); }), ErrorCode::parity);
  EXPECT_EQ(code_of([] { alpha_delta(Composition{1, 1, 1}, true); }), ErrorCode::parity);
}

TEST(Poset, IdealsAndFilters) {
  const Poset p = build_fence({2, 4, 1});
  EXPECT_TRUE(is_ideal(p, p.subset(std::vector<int>{1, 6, 7, 8})));
  EXPECT_TRUE(is_ideal(p, ElementSet{}));
  EXPECT_TRUE(is_filter(p, ElementSet{}));
  EXPECT_FALSE(is_ideal(p, p.subset(std::vector<int>{2})));
  EXPECT_EQ(code_of([&] { p.subset(std::vector<int>{9}); }), ErrorCode::element_out_of_range);
  EXPECT_EQ(code_of([&] { p.subset(std::vector<int>{0}); }), ErrorCode::element_out_of_range);
}

TEST(Poset, IdealIffFilterOfDual) {
  for (int m = 1; m <= 9; ++m) {
    for (const Composition& beta : compositions_of(m)) {
      for (const Poset& p : {build_fence(beta), build_gate(beta)}) {
        const Poset d = dual(p);
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << p.size()); ++s) {
          // dual relabels i -> n-1-i, so mirror the subset as well
          ElementSet mirrored;
          for (int i = 0; i < p.size(); ++i) {
            if ((s >> i) & 1U) mirrored.insert(p.size() - 1 - i);
          }
          ASSERT_EQ(is_ideal(p, ElementSet(s)), is_filter(d, mirrored));
        }
      }
    }
  }
}

TEST(Poset, Dual) {
  EXPECT_EQ(dual(build_gate({2, 3, 1})), build_gate({1, 3, 2}));
  EXPECT_EQ(dual(build_fence({1})), build_fence({1}));
  EXPECT_EQ(dual(build_fence({2, 4, 1})), build_fence({1, 4, 2}));
  for (const Poset& p : {build_fence({2, 4, 2}), build_circular_fence({2, 1, 1, 2}), build_gate({3, 1})}) {
    EXPECT_EQ(dual(dual(p)), p);
  }
}

TEST(Poset, Closures) {
  const Poset p = build_fence({2, 4, 1});
  const ElementSet top = p.subset(std::vector<int>{3});
  EXPECT_EQ(down_closure(p, top), p.subset(std::vector<int>{1, 2, 3, 4, 5, 6, 7}));
  EXPECT_EQ(up_closure(p, p.subset(std::vector<int>{7})), p.subset(std::vector<int>{3, 4, 5, 6, 7, 8}));
  EXPECT_EQ(maximal_elements(p, p.ground_set()), p.subset(std::vector<int>{3, 8}));
  EXPECT_EQ(minimal_elements(p, p.ground_set()), p.subset(std::vector<int>{1, 7}));
}

TEST(Poset, CapacityGuard) {
  const Poset big = build_fence(Composition(std::vector<int>(70, 1)));
  EXPECT_EQ(big.size(), 71);
  EXPECT_EQ(code_of([&] { big.require_subset_capacity(); }), ErrorCode::cap_exceeded);
}

TEST(Poset, JsonExport) {
  const std::string json = to_json(build_fence({1, 1}));
  EXPECT_NE(json.find("\"family\":\"fence\""), std::string::npos);
  EXPECT_NE(json.find("\"covers\":[[1,2],[3,2]]"), std::string::npos);
}
