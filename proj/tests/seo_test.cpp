#include <gtest/gtest.h>

#include <numeric>

#include "signelim/characterize.hpp"
#include "signelim/oracle.hpp"
#include "signelim/seo.hpp"
#include "support/fixtures.hpp"

namespace signelim {
namespace {

using testing::M;
using testing::P;

Ordering ord(std::vector<VertexId> seq) { return Ordering{std::move(seq)}; }

TEST(OrderingTest, TextForm) {
  EXPECT_EQ(format_ordering(ord({2, 1, 3, 0})), "2 1 3 0");
  EXPECT_EQ(parse_ordering("2 1  3 0"), ord({2, 1, 3, 0}));
  EXPECT_EQ(parse_ordering("2,1,3,0"), ord({2, 1, 3, 0}));
  EXPECT_EQ(ord({2, 0, 1}).positions(), (std::vector<int>{1, 2, 0}));
  EXPECT_THROW(ord({0, 0, 1}).validate(3), GraphError);
  EXPECT_THROW(ord({0, 1}).validate(3), GraphError);
  EXPECT_THROW(parse_ordering("0 x"), GraphError);
}

TEST(IsSeoTest, Examples) {
  EXPECT_FALSE(is_seo(testing::g_ex(), Ordering::identity(4)));
  EXPECT_FALSE(is_seo(SignedGraph::edgeless(1), Ordering::identity(1)));
  const auto v = is_seo(testing::m3(), Ordering::identity(4));
  ASSERT_TRUE(v);
  EXPECT_EQ(format_violation(*v), "violation E2 - u=0 v=1 w=3");
  EXPECT_THROW(is_seo(testing::g_ex(), ord({0, 1, 2})), GraphError);
}

TEST(IsSeoTest, ScanOrderPicksEarliestApex) {
  // 0 ~+ 2 ~+ 1 with 0, 1 non-adjacent: E1 at w = 2, u = 0, v = 1.
  const auto g = SignedGraph::from_edges(3, {{0, 2, P}, {1, 2, P}});
  EXPECT_EQ(*is_seo(g, Ordering::identity(3)), (SeoViolation{SeoRule::E1, 0, 1, 2, P}));
  EXPECT_EQ(all_seo_violations(g, Ordering::identity(3)).size(), 2u);  // (0,1) and (1,0)
  // u ~- v ~+ w but u not ~- w: E2 with sign minus.
  const auto h = SignedGraph::from_edges(3, {{0, 1, M}, {1, 2, P}});
  EXPECT_EQ(*is_seo(h, Ordering::identity(3)), (SeoViolation{SeoRule::E2, 0, 1, 2, M}));
}

TEST(WeightsTest, Examples) {
  EXPECT_TRUE(is_seo_via_weights(testing::g_ex(), Ordering::identity(4)));
  EXPECT_FALSE(is_seo_via_weights(testing::m3(), Ordering::identity(4)));
  EXPECT_TRUE(is_seo_via_weights(SignedGraph::edgeless(4), ord({3, 1, 0, 2})));
}

TEST(SimplicialTest, Examples) {
  EXPECT_FALSE(is_signed_simplicial(testing::g_ex(), 3));
  for (VertexId v = 0; v < 4; ++v) EXPECT_TRUE(is_signed_simplicial(testing::m3(), v)) << v;
  const auto g = SignedGraph::from_edges(3, {{0, 1, P}});
  EXPECT_FALSE(is_signed_simplicial(g, 2));
  EXPECT_THROW(is_signed_simplicial(g, 3), GraphError);
}

TEST(SimplicialTest, Set) {
  EXPECT_EQ(signed_simplicial_set(testing::g_ex()), (VertexSet{0, 3}));
  EXPECT_TRUE(signed_simplicial_set(testing::m3()).empty());
  EXPECT_EQ(signed_simplicial_set(SignedGraph::edgeless(3)), (VertexSet{0, 1, 2}));
}

TEST(GreedyTest, Examples) {
  EXPECT_EQ(greedy_seo(testing::g_ex()), ord({2, 1, 3, 0}));
  EXPECT_FALSE(greedy_seo(testing::m3()));
  const auto nu = greedy_seo(testing::cm3());
  ASSERT_TRUE(nu);
  EXPECT_FALSE(is_seo(testing::cm3(), *nu));
  EXPECT_FALSE(is_seo(testing::cm3(), ord({3, 0, 1, 2})));
  EXPECT_EQ(greedy_seo(SignedGraph::edgeless(0)), ord({}));
}

TEST(EnumerateSeosTest, Examples) {
  EXPECT_EQ(enumerate_seos(SignedGraph::edgeless(1)), (std::vector<Ordering>{ord({0})}));
  EXPECT_TRUE(enumerate_seos(testing::m3()).empty());
  EXPECT_EQ(enumerate_seos(testing::g_ex()).size(), 8u);
  EXPECT_EQ(enumerate_seos(testing::cm3()).size(), 2u);
  EXPECT_EQ(enumerate_seos(testing::ch2()).size(), 4u);
  EXPECT_THROW(enumerate_seos(SignedGraph::edgeless(9)), CapError);
}

TEST(EnumerateSeosTest, RestartReplaysStream) {
  SeoEnumerator en(testing::g_ex());
  std::vector<Ordering> first;
  while (auto nu = en.next()) first.push_back(*nu);
  en.restart();
  std::vector<Ordering> second;
  while (auto nu = en.next()) second.push_back(*nu);
  EXPECT_EQ(first, second);
}

// ---------------------------------------------------------------------------
// Exhaustive properties

TEST(SeoPropertyTest, FormulationsAgreeWithReferenceOnFourVertices) {
  SignedGraphEnumerator en(4);
  while (auto g = en.next()) {
    Ordering nu = Ordering::identity(4);
    do {
      const bool ref = testing::naive_is_seo(*g, nu.sequence);
      EXPECT_EQ(!is_seo(*g, nu), ref) << serialize_sg(*g) << format_ordering(nu);
      EXPECT_EQ(is_seo_via_weights(*g, nu), ref) << serialize_sg(*g) << format_ordering(nu);
      EXPECT_EQ(all_seo_violations(*g, nu).empty(), ref);
    } while (std::next_permutation(nu.sequence.begin(), nu.sequence.end()));
  }
}

TEST(SeoPropertyTest, PrefixEnumerationMatchesPermutationFilter) {
  for (int n = 0; n <= 4; ++n) {
    SignedGraphEnumerator en(n);
    while (auto g = en.next()) EXPECT_EQ(enumerate_seos(*g), testing::naive_all_seos(*g)) << serialize_sg(*g);
  }
}

TEST(SeoPropertyTest, SimplicialSetMatchesLastPositions) {
  // v is signed-simplicial iff every pair of other vertices satisfies E1/E2
  // with v in the role of w.
  SignedGraphEnumerator en(4);
  while (auto g = en.next()) {
    VertexSet expected;
    for (VertexId v = 0; v < 4; ++v) {
      std::vector<VertexId> seq;
      for (VertexId x = 0; x < 4; ++x) {
        if (x != v) seq.push_back(x);
      }
      seq.push_back(v);
      bool ok = true;
      for (int i = 0; i < 3 && ok; ++i) {
        for (int j = 0; j < 3 && ok; ++j) {
          if (i == j) continue;
          for (Sign s : kSigns) {
            const VertexId u = seq[i], x = seq[j];
            if (testing::has(*g, u, v, s) && testing::has(*g, v, x, s) && !testing::has(*g, u, x, s)) ok = false;
            if (testing::has(*g, u, x, s) && testing::has(*g, x, v, -s) && !testing::has(*g, u, v, s)) ok = false;
          }
        }
      }
      if (ok) expected.push_back(v);
    }
    EXPECT_EQ(signed_simplicial_set(*g), expected) << serialize_sg(*g);
  }
}

TEST(SeoPropertyTest, GreedySoundAndCompleteOnFiveVertices) {
  SignedGraphEnumerator en(5);
  std::uint64_t se = 0;
  while (auto g = en.next()) {
    const auto nu = greedy_seo(*g);
    EXPECT_EQ(nu.has_value(), testing::naive_se(*g)) << serialize_sg(*g);
    if (nu) {
      ++se;
      EXPECT_TRUE(testing::naive_is_seo(*g, nu->sequence)) << serialize_sg(*g);
    }
  }
  EXPECT_EQ(se, 13403u);
}

TEST(SeoPropertyTest, SeCountsOnSmallGraphs) {
  auto count = [](int n) {
    SignedGraphEnumerator en(n);
    std::uint64_t se = 0;
    while (auto g = en.next()) se += is_signed_eliminable(*g);
    return se;
  };
  EXPECT_EQ(count(3), 27u);
  EXPECT_EQ(count(4), 471u);
}

TEST(SeoPropertyTest, ChoiceFreedom) {
  SignedGraphEnumerator en(5);
  while (auto g = en.next()) {
    if (!is_signed_eliminable(*g)) continue;
    const auto seos = enumerate_seos(*g);
    for (VertexId v : signed_simplicial_set(*g)) {
      const bool last = std::any_of(seos.begin(), seos.end(), [&](const Ordering& nu) {
        return nu.sequence.back() == v;
      });
      EXPECT_TRUE(last) << serialize_sg(*g) << "v=" << v;
    }
  }
}

TEST(SeoPropertyTest, HereditaryClosure) {
  SignedGraphEnumerator en(5);
  while (auto g = en.next()) {
    if (!is_signed_eliminable(*g)) continue;
    testing::for_each_subset(5, [&](const VertexSet& keep) {
      EXPECT_TRUE(is_signed_eliminable(g->induced_subgraph(keep).first)) << serialize_sg(*g);
    });
  }
}

TEST(SeoPropertyTest, ComponentDecomposition) {
  SignedGraphEnumerator en(5);
  while (auto g = en.next()) {
    bool all = true;
    for (const auto& comp : connected_components(*g)) all = all && is_signed_eliminable(g->induced_subgraph(comp).first);
    EXPECT_EQ(is_signed_eliminable(*g), all) << serialize_sg(*g);
  }
}

TEST(SeoPropertyTest, SingleSignDegeneratesToChordality) {
  for (int n = 1; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
      std::vector<SignedEdge> edges;
      int bit = 0;
      for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v, ++bit) {
          if (mask & (1u << bit)) edges.push_back({u, v, P});
        }
      }
      const auto g = SignedGraph::from_edges(n, edges);
      const bool chordal = testing::naive_chordal(g.sign_restriction(P));
      EXPECT_EQ(is_signed_eliminable(g), chordal) << serialize_sg(g);
      EXPECT_EQ(is_signed_eliminable(g.flipped()), chordal) << serialize_sg(g);
    }
  }
}

TEST(SeoPropertyTest, SignFlipPreservesSeos) {
  SignedGraphEnumerator en(4);
  while (auto g = en.next()) EXPECT_EQ(enumerate_seos(*g), enumerate_seos(g->flipped()));
}

}  // namespace
}  // namespace signelim
