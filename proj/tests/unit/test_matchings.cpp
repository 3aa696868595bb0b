#include <gtest/gtest.h>

#include <random>

#include "dimer/errors.hpp"
#include "dimer/matchings.hpp"
#include "oracles.hpp"

using namespace dimer;
using oracle::fixture;

namespace {

const std::vector<std::string> kSmall = {"hexagonal", "conifold", "nonminimal_conifold", "three_rhombi", "balwnopm",
                                         "degenerate", "examplestp", "memeg", "nonalgebraic"};

std::vector<std::vector<int>> supports(const std::vector<PerfectMatching>& ms) {
  std::vector<std::vector<int>> out;
  for (const auto& m : ms) out.push_back(m.edges);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Matchings, EnumerationAgreesWithSubsetScan) {
  for (const auto& name : kSmall) {
    auto g = fixture(name);
    auto ms = enumerate_matchings(g);
    EXPECT_EQ(supports(ms), oracle::brute_matchings(g)) << name;
  }
}

TEST(Matchings, KnownCounts) {
  EXPECT_EQ(enumerate_matchings(fixture("hexagonal")).size(), 3u);
  EXPECT_EQ(enumerate_matchings(fixture("conifold")).size(), 4u);
  EXPECT_EQ(enumerate_matchings(fixture("balwnopm")).size(), 0u);
}

TEST(Matchings, CoboundaryIsOneOnEveryFace) {
  for (const auto& name : kSmall) {
    auto g = fixture(name);
    auto q = dualize(g);
    for (const auto& m : enumerate_matchings(g, q)) {
      auto ind = m.indicator(q.num_arrows());
      for (const auto& f : q.faces) {
        int s = 0;
        for (int a : f.boundary) s += ind[a];
        EXPECT_EQ(s, 1) << name;
      }
    }
  }
}

TEST(Matchings, ReferenceIsFirstAndHasZeroClass) {
  for (const auto& name : kSmall) {
    auto g = fixture(name);
    auto q = dualize(g);
    auto ms = enumerate_matchings(g, q);
    if (ms.empty()) continue;
    EXPECT_EQ(ms.front().cls, Vec2(0, 0));
    EXPECT_EQ(pm_class(ms.front().edges, ms.front().edges, q), Vec2(0, 0));
    EXPECT_EQ(ms.front().edges, supports(ms).front());
  }
}

TEST(Hall, AgreesWithSubsetScan) {
  for (const auto& name : kSmall) {
    auto g = fixture(name);
    auto h = hall_check(g);
    std::vector<int> witness;
    bool brute = oracle::brute_hall(g, &witness);
    EXPECT_EQ(h.pass(), brute) << name;
    if (h.kind == HallVerdict::Kind::Deficient) {
      std::set<int> nb;
      for (int b : h.subset)
        for (int e : g.rotation(b)) nb.insert(g.edge(e).white);
      EXPECT_LT(nb.size(), h.subset.size()) << name;
    }
  }
}

TEST(Hall, BalwnopmWitnessIsTwoBlacksOnOneWhite) {
  auto h = hall_check(fixture("balwnopm"));
  ASSERT_EQ(h.kind, HallVerdict::Kind::Deficient);
  EXPECT_EQ(h.subset.size(), 2u);
  EXPECT_EQ(h.neighbours.size(), 1u);
}

TEST(Hall, ThreeRhombiIsUnbalanced) {
  EXPECT_EQ(hall_check(fixture("three_rhombi")).kind, HallVerdict::Kind::Imbalance);
}

TEST(Nondegeneracy, AgreesWithEnumerationAndStrongMarriage) {
  for (const auto& name : kSmall) {
    auto g = fixture(name);
    auto nd = nondegeneracy_check(g);
    std::vector<bool> used(g.num_edges(), false);
    for (const auto& m : oracle::brute_matchings(g))
      for (int e : m) used[e] = true;
    EXPECT_EQ(nd.edge_ok, used) << name;
    auto sm = strong_marriage_check(g);
    ASSERT_TRUE(sm.has_value());
    EXPECT_EQ(*sm, nd.pass) << name;
  }
}

TEST(Nondegeneracy, DegenerateModelNamesForcedEdge) {
  auto g = fixture("degenerate");
  auto nd = nondegeneracy_check(g);
  EXPECT_FALSE(nd.pass);
  ASSERT_EQ(nd.forced_edges.size(), 1u);
  const int forced = nd.forced_edges.front();
  for (const auto& m : oracle::brute_matchings(g)) EXPECT_TRUE(std::binary_search(m.begin(), m.end(), forced));
  // Every other edge at the forced edge's ends lies in no matching.
  const auto& fe = g.edge(forced);
  for (int v : {fe.black, fe.white})
    for (int e : g.rotation(v))
      if (e != forced) {
        EXPECT_TRUE(std::find(nd.unmatched_edges.begin(), nd.unmatched_edges.end(), e) != nd.unmatched_edges.end());
      }
}

TEST(Nondegeneracy, NoMatchingMeansNoEdgeFlagged) {
  auto nd = nondegeneracy_check(fixture("balwnopm"));
  EXPECT_FALSE(nd.has_matching);
  for (bool b : nd.edge_ok) EXPECT_FALSE(b);
}

TEST(Polygon, HexagonalIsUnimodularTriangle) {
  auto P = polygon(enumerate_matchings(fixture("hexagonal")));
  EXPECT_EQ(P.points.size(), 3u);
  EXPECT_EQ(P.vertices.size(), 3u);
  EXPECT_EQ(P.twice_area(), 1);
  WeightedPoints want{{{0, 0}, 1}, {{0, 1}, 1}, {{1, 0}, 1}};
  EXPECT_EQ(normal_form(P.points), want);
}

TEST(Polygon, ConifoldIsUnitSquare) {
  auto ms = enumerate_matchings(fixture("conifold"));
  auto P = polygon(ms);
  WeightedPoints want{{{0, 0}, 1}, {{0, 1}, 1}, {{1, 0}, 1}, {{1, 1}, 1}};
  EXPECT_EQ(normal_form(P.points), want);
  EXPECT_EQ(P.twice_area(), 2);
}

TEST(Polygon, VerticesAndMultiplicitiesAgreeWithBruteForce) {
  for (const auto& name : kSmall) {
    auto ms = enumerate_matchings(fixture(name));
    if (ms.empty()) {
      EXPECT_THROW(polygon(ms), PreconditionError);
      continue;
    }
    auto P = polygon(ms);
    std::vector<Vec2> pts;
    for (const auto& m : ms) pts.push_back(m.cls);
    int total = 0;
    for (const auto& [p, k] : P.points) {
      total += k;
      EXPECT_EQ(k, std::count(pts.begin(), pts.end(), p));
      EXPECT_EQ(P.is_vertex(p), oracle::brute_is_vertex(p, pts)) << name << " " << p;
    }
    EXPECT_EQ(total, static_cast<int>(ms.size()));
    EXPECT_EQ(P.twice_area(), oracle::brute_twice_hull_area(pts)) << name;
  }
}

TEST(Polygon, SingleMatchingIsAPoint) {
  auto ms = enumerate_matchings(fixture("memeg"));
  auto P = polygon({ms[2]});
  ASSERT_EQ(P.points.size(), 1u);
  EXPECT_EQ(P.points.begin()->second, 1);
}

TEST(Polygon, NormalFormIsInvariantUnderUnimodularMaps) {
  auto P = polygon(enumerate_matchings(fixture("memeg")));
  for (auto [a, b, c, d] : {std::array<long, 4>{1, 1, 0, 1}, {0, -1, 1, 0}, {2, 1, 1, 1}, {-1, 0, 0, 1}}) {
    std::map<Vec2, int> moved;
    for (const auto& [p, k] : P.points) moved[{a * p.x + b * p.y + 3, c * p.x + d * p.y - 5}] = k;
    EXPECT_EQ(normal_form(moved), normal_form(P.points));
  }
}

TEST(Polygon, SplitPreservesPolygon) {
  auto a = polygon(enumerate_matchings(fixture("conifold")));
  auto b = polygon(enumerate_matchings(fixture("nonminimal_conifold")));
  EXPECT_EQ(normal_form(a.points), normal_form(b.points));
}

TEST(BvN, RoundTripOfRandomSums) {
  std::mt19937 rng(2024);
  for (const auto& name : {"hexagonal", "conifold", "memeg", "examplestp", "degenerate"}) {
    auto g = fixture(name);
    auto ms = enumerate_matchings(g);
    std::uniform_int_distribution<std::size_t> pick(0, ms.size() - 1);
    for (int trial = 0; trial < 50; ++trial) {
      const int k = trial % 6;
      std::vector<long> v(g.num_edges(), 0);
      for (int i = 0; i < k; ++i)
        for (int e : ms[pick(rng)].edges) ++v[e];
      auto parts = bvn_decompose(g, v);
      ASSERT_EQ(static_cast<int>(parts.size()), k);
      std::vector<long> sum(g.num_edges(), 0);
      for (const auto& p : parts) {
        EXPECT_TRUE(is_perfect_matching(g, p.edges));
        for (int e : p.edges) ++sum[e];
      }
      EXPECT_EQ(sum, v) << name;
    }
  }
}

TEST(BvN, EdgeCases) {
  auto g = fixture("hexagonal");
  EXPECT_TRUE(bvn_decompose(g, std::vector<long>(3, 0)).empty());
  auto ms = enumerate_matchings(g);
  auto one = bvn_decompose(g, [&] {
    std::vector<long> v(3, 0);
    for (int e : ms[1].edges) v[e] = 1;
    return v;
  }());
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].edges, ms[1].edges);
}
