#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "fences/bijections.hpp"
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

Composition gate_delta_for(const std::vector<int>& d) {
  // Smallest δ for which d satisfies the bounds d_i <= δ_i + 1.
  std::vector<int> delta;
  for (int v : d) delta.push_back(std::max(1, v));
  return Composition(delta);
}

std::vector<Block> blocks_of(std::vector<int> seq, bool circular) {
  return block_structure(seq, circular).blocks;
}

// Per size k: forward map is injective into valid outputs of the same size
// and hits every valid output; inverse undoes it.
template <Shape S, class Fwd, class Inv>
void check_bijection(const Composition& comp, bool restricted, int max_k, Fwd fwd, Inv inv) {
  for (int k = 0; k <= max_k; ++k) {
    std::set<std::pair<std::vector<int>, std::vector<int>>> images;
    std::size_t inputs = 0;
    for_each_encoding<S, Side::ideal>(comp, k, restricted, [&](const auto& in) {
      const auto out = fwd(in, MapOptions{nullptr, true});
      ASSERT_EQ(out.total(), k);
      ASSERT_TRUE(validate(out, restricted).ok()) << validate(out, restricted).to_string();
      ASSERT_EQ(inv(out, MapOptions{nullptr, true}), in);
      images.emplace(out.asc, out.desc);
      ++inputs;
    });
    ASSERT_EQ(images.size(), inputs) << "not injective at k=" << k << " on " << comp.to_string();
    std::size_t targets = 0;
    for_each_encoding<S, Side::filter>(comp, k, restricted, [&](const auto& out) {
      ++targets;
      ASSERT_EQ(fwd(inv(out, {}), {}), out);
    });
    ASSERT_EQ(targets, inputs) << "not onto at k=" << k << " on " << comp.to_string();
  }
}

}  // namespace

TEST(Blocks, LinearExample) {
  const auto b = blocks_of({6, 1, 1, 1, 0, 4, 5, 1, 1, 0, 0, 3, 1, 2}, false);
  ASSERT_EQ(b.size(), 3u);
  EXPECT_EQ(b[0], (Block{0, 3, 4, 3}));
  EXPECT_EQ(b[1], (Block{5, 8, 4, 2}));
  EXPECT_EQ(b[2], (Block{11, 13, 3, 0}));
}

TEST(Blocks, CircularExampleWraps) {
  const auto b = blocks_of({7, 1, 1, 0, 5, 1, 0, 0, 3}, true);
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b[0], (Block{4, 5, 2, 1}));
  EXPECT_EQ(b[1], (Block{8, 2, 4, 2}));
}

TEST(Blocks, EdgeCases) {
  EXPECT_TRUE(blocks_of({0, 0, 0}, false).empty());
  EXPECT_TRUE(blocks_of({0, 0, 0}, true).empty());
  const BlockStructure positive = block_structure(std::vector<int>{2, 1, 3}, true);
  EXPECT_TRUE(positive.positive);
  EXPECT_TRUE(positive.blocks.empty());
  EXPECT_EQ(code_of([] { block_structure(std::vector<int>{1, -1}, false); }), ErrorCode::negative_entry);
}

TEST(GateMap, WorkedExample) {
  const std::vector<int> d{6, 1, 1, 1, 0, 4, 5, 1, 1, 0, 0, 3, 1, 2};
  const GateIdeal in{gate_delta_for(d), {}, d};
  Trace trace;
  const GateFilter out = gate_bijection(in, {&trace, true});
  EXPECT_EQ(out.desc, (std::vector<int>{6, 0, 1, 1, 1, 5, 4, 0, 1, 1, 0, 4, 1, 1}));
  ASSERT_EQ(trace.size(), 2u);
  EXPECT_EQ(trace[0].step, "P1");
  EXPECT_EQ(trace[0].desc, (std::vector<int>{6, 0, 1, 1, 1, 4, 5, 0, 1, 1, 0, 3, 1, 2}));
  EXPECT_EQ(trace[1].step, "P2");
  EXPECT_EQ(gate_bijection_inverse(out), in);
}

TEST(GateMap, IndependentOfDelta) {
  const std::vector<int> d{6, 1, 1, 1, 0, 4, 5, 1, 1, 0, 0, 3, 1, 2};
  const Composition tight = gate_delta_for(d);
  std::vector<int> wide(tight.parts().begin(), tight.parts().end());
  for (int& v : wide) v += 3;
  const GateFilter a = gate_bijection(GateIdeal{tight, {}, d});
  const GateFilter b = gate_bijection(GateIdeal{Composition(wide), {}, d});
  EXPECT_EQ(a.desc, b.desc);
}

TEST(GateMap, ZeroSequence) {
  const GateFilter out = gate_bijection(GateIdeal{Composition{2, 2, 2}, {}, {0, 0, 0}});
  EXPECT_EQ(out.desc, (std::vector<int>{0, 0, 0}));
  EXPECT_EQ(gate_bijection_inverse(out).desc, (std::vector<int>{0, 0, 0}));
}

TEST(GateMap, RejectsUnrestricted) {
  EXPECT_EQ(code_of([] { gate_bijection(GateIdeal{Composition{2, 3, 1}, {}, {0, 0, 1}}); }),
            ErrorCode::invalid_encoding);
}

TEST(GateMap, ExhaustiveSmallDelta) {
  for (int m = 1; m <= 8; ++m) {
    for (const Composition& delta : compositions_of(m)) {
      check_bijection<Shape::gate>(
          delta, true, m + static_cast<int>(delta.size()),
          [](const GateIdeal& e, const MapOptions& o) { return gate_bijection(e, o); },
          [](const GateFilter& e, const MapOptions& o) { return gate_bijection_inverse(e, o); });
    }
  }
}

TEST(FenceMap, WorkedExample) {
  const FenceIdeal in{kPhiBeta, {0, 0, 1, 0}, {1, 3, 1}};
  Trace trace;
  const FenceFilter out = fence_bijection(in, {&trace, true});
  EXPECT_EQ(out.asc, (std::vector<int>{0, 0, 0, 1}));
  EXPECT_EQ(out.desc, (std::vector<int>{2, 2, 1}));
  ASSERT_EQ(trace.size(), 3u);
  EXPECT_EQ(trace[0].step, "PH1");
  EXPECT_EQ(trace[0].asc, (std::vector<int>{0, 0, 1, 1}));
  EXPECT_EQ(trace[0].desc, (std::vector<int>{1, 3, 0}));
  EXPECT_EQ(trace[1].step, "PH2");
  EXPECT_EQ(trace[1].asc, (std::vector<int>{0, 0, 1, 1}));
  EXPECT_EQ(trace[1].desc, (std::vector<int>{2, 2, 0}));
  EXPECT_EQ(trace[1].note, "factors 1,3 | 0");
  EXPECT_EQ(trace[2].step, "PH3");
  EXPECT_EQ(decode(out), ElementSet::from_labels({7, 8, 10, 11, 15, 22}));
  EXPECT_EQ(fence_bijection_inverse(out), in);
}

TEST(FenceMap, EmptyIdeal) {
  const FenceIdeal in{kPhiBeta, {0, 0, 0, 0}, {0, 0, 0}};
  const FenceFilter out = fence_bijection(in);
  EXPECT_EQ(out.total(), 0);
  EXPECT_EQ(fence_bijection_inverse(out), in);
}

TEST(FenceMap, Domains) {
  EXPECT_EQ(fence_domain(FenceIdeal{kPhiBeta, {0, 0, 1, 0}, {1, 3, 1}}), FenceDomain::bounded_size);
  // size 8 > min(6, 6), accepted through the restricted conditions
  const FenceIdeal big{kPhiBeta, {6, 0, 0, 0}, {2, 0, 0}};
  EXPECT_EQ(fence_domain(big), FenceDomain::restricted);
  EXPECT_EQ(fence_bijection(big).total(), 8);
  const FenceIdeal outside{Composition{1, 1, 1}, {1, 0}, {2}};
  ASSERT_TRUE(validate(outside).ok());
  EXPECT_TRUE(validate(outside, true).violates("IF5"));
  EXPECT_EQ(fence_domain(outside), FenceDomain::outside);
  EXPECT_EQ(code_of([&] { fence_bijection(outside); }), ErrorCode::precondition);
  EXPECT_EQ(fence_domain(FenceIdeal{Composition{1, 2, 1}, {0, 1}, {1}}), FenceDomain::outside);
}

TEST(FenceMap, SmallFenceAllSizes) {
  // F(2,1,2): every ideal of size k <= 2 goes to a distinct filter of size k.
  check_bijection<Shape::fence>(
      Composition{2, 1, 2}, false, 2,
      [](const FenceIdeal& e, const MapOptions& o) { return fence_bijection(e, o); },
      [](const FenceFilter& e, const MapOptions& o) { return fence_bijection_inverse(e, o); });
}

TEST(FenceMap, ExhaustiveBoundedAndRestricted) {
  for (int m = 1; m <= 10; ++m) {
    for (const Composition& beta : compositions_of(m)) {
      if (beta.has_even_parts()) continue;
      auto fwd = [](const FenceIdeal& e, const MapOptions& o) { return fence_bijection(e, o); };
      auto inv = [](const FenceFilter& e, const MapOptions& o) { return fence_bijection_inverse(e, o); };
      check_bijection<Shape::fence>(beta, false, std::min(beta.front(), beta.back()), fwd, inv);
      check_bijection<Shape::fence>(beta, true, m + 1, fwd, inv);
    }
  }
}

// PH1 reads d_i and a_{i+1} before any update. Updating in place left to
// right gives the same result because each move touches only d_i and a_{i+1}.
TEST(FenceMap, PushSingleOnesMatchesSimultaneousUpdate) {
  auto simultaneous = [](std::vector<int> asc, std::vector<int> desc, const std::vector<int>& alpha,
                         bool circular) {
    const std::vector<int> a0 = asc, d0 = desc;
    const std::size_t ell = desc.size();
    for (std::size_t i = 0; i < ell; ++i) {
      const std::size_t next = circular ? (i + 1) % ell : i + 1;
      if (d0[i] == 1 && a0[next] < alpha[next] - 1) {
        desc[i] = 0;
        ++asc[next];
      }
    }
    return std::pair{asc, desc};
  };
  for (int m = 1; m <= 10; ++m) {
    for (const Composition& beta : compositions_of(m)) {
      const bool circular = beta.has_even_parts();
      const std::vector<int> alpha = alpha_delta(beta, circular).alpha;
      auto visit = [&](const auto& e) {
        std::vector<int> asc = e.asc, desc = e.desc;
        steps::push_single_ones(asc, desc, alpha, circular);
        ASSERT_EQ((std::pair{asc, desc}), simultaneous(e.asc, e.desc, alpha, circular));
      };
      if (circular) {
        for_each_encoding<Shape::circular, Side::ideal>(beta, -1, false, visit);
      } else {
        for_each_encoding<Shape::fence, Side::ideal>(beta, -1, false, visit);
      }
    }
  }
}

TEST(FenceMap, CutPoints) {
  const std::vector<int> alpha{7, 1, 3, 7};
  EXPECT_EQ(steps::fence_cut_points(std::vector<int>{0, 0, 1, 1}, alpha), (std::vector<int>{2}));
  EXPECT_EQ(steps::circular_cut_points(std::vector<int>{0, 0, 2, 6}, alpha), (std::vector<int>{0}));
}

TEST(NarrowMap, WorkedExample) {
  const NarrowIdeal in{Composition{7, 1, 1, 1, 5, 1, 1, 1, 3}, {}, {7, 1, 1, 0, 5, 1, 0, 0, 3}};
  ASSERT_TRUE(validate(in).ok());
  Trace trace;
  const NarrowFilter out = narrow_circular_bijection(in, {&trace, true});
  EXPECT_EQ(out.desc, (std::vector<int>{6, 0, 1, 1, 5, 0, 1, 0, 4}));
  EXPECT_EQ(out.total(), 18);
  ASSERT_FALSE(trace.empty());
  EXPECT_EQ(trace[0].desc, (std::vector<int>{7, 0, 1, 1, 5, 0, 1, 0, 3}));
  EXPECT_EQ(narrow_circular_bijection_inverse(out), in);
}

TEST(NarrowMap, PositiveIsFixed) {
  const NarrowIdeal in{Composition{2, 1, 3}, {}, {2, 1, 3}};
  ASSERT_TRUE(validate(in).ok());
  EXPECT_EQ(narrow_circular_bijection(in).desc, (std::vector<int>{2, 1, 3}));
}

TEST(NarrowMap, ExhaustiveSmall) {
  for (int l = 1; l <= 3; ++l) {
    std::vector<int> delta(static_cast<std::size_t>(l), 1);
    for (;;) {
      check_bijection<Shape::narrow_circular>(
          Composition(delta), false, std::accumulate(delta.begin(), delta.end(), 0) + l,
          [](const NarrowIdeal& e, const MapOptions& o) { return narrow_circular_bijection(e, o); },
          [](const NarrowFilter& e, const MapOptions& o) {
            return narrow_circular_bijection_inverse(e, o);
          });
      std::size_t i = 0;
      while (i < delta.size() && delta[i] == 3) delta[i++] = 1;
      if (i == delta.size()) break;
      ++delta[i];
    }
  }
}

TEST(CircularMap, WorkedExamples) {
  const auto first = encode<Shape::circular, Side::ideal>(
      kCircBeta, ElementSet::from_labels({1, 2, 3, 4, 5, 9, 12}));
  Trace trace;
  const CircularFilter out1 = circular_bijection(first, {&trace, true});
  EXPECT_EQ(out1.asc, (std::vector<int>{1, 0, 0, 1}));
  EXPECT_EQ(out1.desc, (std::vector<int>{1, 1, 1, 2}));
  EXPECT_EQ(decode(out1), ElementSet::from_labels({1, 2, 3, 6, 10, 13, 14}));
  ASSERT_EQ(trace.size(), 3u);
  EXPECT_EQ(trace[1].desc, (std::vector<int>{1, 0, 1, 2}));

  const auto second =
      encode<Shape::circular, Side::ideal>(kCircBeta, ElementSet::from_labels({1, 2, 3, 4, 9, 12}));
  const CircularFilter out2 = circular_bijection(second);
  EXPECT_EQ(out2.asc, (std::vector<int>{1, 0, 0, 1}));
  EXPECT_EQ(out2.desc, (std::vector<int>{1, 0, 1, 2}));
  EXPECT_EQ(decode(out2), ElementSet::from_labels({1, 2, 3, 10, 13, 14}));
  EXPECT_EQ(circular_bijection_inverse(out1), first);
  EXPECT_EQ(circular_bijection_inverse(out2), second);
}

TEST(CircularMap, ExhaustiveSmall) {
  for (int m = 2; m <= 10; ++m) {
    for (const Composition& beta : compositions_of(m)) {
      if (!beta.has_even_parts()) continue;
      check_bijection<Shape::circular>(
          beta, false, m,
          [](const CircularIdeal& e, const MapOptions& o) { return circular_bijection(e, o); },
          [](const CircularFilter& e, const MapOptions& o) { return circular_bijection_inverse(e, o); });
    }
  }
}

TEST(Trace, Json) {
  Trace trace;
  fence_bijection(FenceIdeal{kPhiBeta, {0, 0, 1, 0}, {1, 3, 1}}, {&trace, false});
  const std::string json = to_json(trace);
  EXPECT_NE(json.find(R"({"step":"PH1","asc":[0,0,1,1],"desc":[1,3,0]})"), std::string::npos) << json;
}
