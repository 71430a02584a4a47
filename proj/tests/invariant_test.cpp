#include <gtest/gtest.h>

#include <random>

#include "signelim/invariant.hpp"
#include "support/fixtures.hpp"

namespace signelim {
namespace {

DegreeProfile profile(std::initializer_list<std::pair<int, int>> pairs) {
  DegreeProfile p;
  for (auto [a, b] : pairs) p.push_back({a, b});
  return p;
}

TEST(DegreeProfileTest, WorkedExample) {
  EXPECT_EQ(degree_profile(testing::g_ex(), Ordering::identity(4)), profile({{0, 0}, {0, 0}, {1, 0}, {1, 1}}));
  EXPECT_EQ(degree_sequence(testing::g_ex(), Ordering::identity(4)),
            (std::vector<DegreePair>{{0, 0}, {1, 0}, {0, 0}, {1, 1}}));
  EXPECT_EQ(format_profile(degree_profile(testing::g_ex(), Ordering::identity(4))),
            "profile: (0,0) (0,0) (1,0) (1,1)");
}

TEST(DegreeProfileTest, EdgelessAndCapped) {
  EXPECT_EQ(degree_profile(SignedGraph::edgeless(3), Ordering{{2, 0, 1}}), profile({{0, 0}, {0, 0}, {0, 0}}));
  EXPECT_EQ(degree_profile(testing::cm3(), Ordering{{3, 0, 1, 2}}), profile({{0, 0}, {0, 0}, {1, 1}, {1, 1}}));
  EXPECT_THROW(degree_profile(testing::g_ex(), Ordering{{0, 1}}), GraphError);
}

TEST(DegTildeTest, Examples) {
  EXPECT_EQ(deg_tilde(testing::g_ex()), (std::vector<int>{0, 0, 0, 1}));
  EXPECT_EQ(deg_tilde(SignedGraph::edgeless(3)), (std::vector<int>{0, 0, 0}));
  EXPECT_EQ(deg_tilde(testing::cm3()), (std::vector<int>{0, 0, 0, 0}));
  EXPECT_EQ(format_deg_tilde({0, 0, 0, 1}), "degt: 0 0 0 1");
  EXPECT_THROW(deg_tilde(testing::m3()), GraphError);
}

TEST(InvarianceTest, Examples) {
  EXPECT_TRUE(invariance_check(testing::g_ex()));
  EXPECT_TRUE(invariance_check(testing::cm3()));
  EXPECT_THROW(invariance_check(testing::m3()), GraphError);
  EXPECT_THROW(invariance_check(SignedGraph::edgeless(9)), CapError);
}

TEST(InvarianceTest, NonSeoOrderingsCanDiffer) {
  // Not an invariant for arbitrary orderings: path 0 - 1 - 2 in plus.
  const auto g = SignedGraph::from_edges(3, {{0, 1, testing::P}, {1, 2, testing::P}});
  EXPECT_NE(degree_profile(g, Ordering{{0, 2, 1}}), degree_profile(g, Ordering{{0, 1, 2}}));
}

// ---------------------------------------------------------------------------

// Reference profile straight from the definition.
DegreeProfile naive_profile(const SignedGraph& g, const std::vector<VertexId>& seq) {
  DegreeProfile p;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    DegreePair d;
    for (std::size_t j = 0; j < i; ++j) {
      d.plus += testing::has(g, seq[i], seq[j], testing::P);
      d.minus += testing::has(g, seq[i], seq[j], testing::M);
    }
    p.push_back(d);
  }
  std::sort(p.begin(), p.end());
  return p;
}

TEST(InvariantPropertyTest, ConservationAndFirstPosition) {
  SignedGraphEnumerator en(4);
  while (auto g = en.next()) {
    Ordering nu = Ordering::identity(4);
    do {
      const auto seq = degree_sequence(*g, nu);
      EXPECT_EQ(seq.front(), (DegreePair{0, 0}));
      int plus = 0, minus = 0;
      for (const auto& d : seq) {
        plus += d.plus;
        minus += d.minus;
      }
      EXPECT_EQ(plus, static_cast<int>(g->edge_count(testing::P)));
      EXPECT_EQ(minus, static_cast<int>(g->edge_count(testing::M)));
      EXPECT_EQ(degree_profile(*g, nu), naive_profile(*g, nu.sequence));
    } while (std::next_permutation(nu.sequence.begin(), nu.sequence.end()));
  }
}

TEST(InvariantPropertyTest, AllSeosShareOneProfileUpToFiveVertices) {
  for (int n = 1; n <= 5; ++n) {
    SignedGraphEnumerator en(n);
    while (auto g = en.next()) {
      const auto seos = testing::naive_all_seos(*g);
      if (seos.empty()) continue;
      const auto first = naive_profile(*g, seos.front().sequence);
      for (const auto& nu : seos) EXPECT_EQ(naive_profile(*g, nu.sequence), first) << serialize_sg(*g);
      EXPECT_TRUE(invariance_check(*g));
    }
  }
}

TEST(InvariantPropertyTest, SignFlipSwapsPairs) {
  SignedGraphEnumerator en(4);
  while (auto g = en.next()) {
    const auto nu = greedy_seo(*g);
    if (!nu) continue;
    DegreeProfile swapped;
    for (const auto& d : degree_profile(*g, *nu)) swapped.push_back({d.minus, d.plus});
    std::sort(swapped.begin(), swapped.end());
    const auto f = g->flipped();
    EXPECT_EQ(degree_profile(f, *greedy_seo(f)), swapped);
  }
}

TEST(InvariantPropertyTest, RelabelingLeavesProfileUnchanged) {
  std::mt19937 rng(20240917);
  SignedGraphEnumerator en(4);
  while (auto g = en.next()) {
    const auto nu = greedy_seo(*g);
    if (!nu) continue;
    const auto base = degree_profile(*g, *nu);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<VertexId> perm{0, 1, 2, 3};
      std::shuffle(perm.begin(), perm.end(), rng);
      const auto h = g->relabeled(perm);
      const auto mu = greedy_seo(h);
      ASSERT_TRUE(mu) << serialize_sg(*g);
      EXPECT_EQ(degree_profile(h, *mu), base);
      EXPECT_EQ(deg_tilde(h), deg_tilde(*g));
    }
  }
}

}  // namespace
}  // namespace signelim
