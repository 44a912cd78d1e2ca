// Copyright 2026 The crcgrid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "crcgrid/lattice.hpp"

using namespace crcgrid;

namespace {

// Breadth-first walk from 0 in Z^n, truncated at distance R.
std::set<Word> bfs_ball(int n, int radius) {
  std::set<Word> seen{Word::zero(n)};
  std::queue<std::pair<Word, int>> q;
  q.push({Word::zero(n), 0});
  while (!q.empty()) {
    auto [w, d] = q.front();
    q.pop();
    if (d == radius) continue;
    for (int i = 0; i < n; ++i)
      for (int s : {1, -1}) {
        Word u = w + Word::unit(n, i, s);
        if (seen.insert(u).second) q.push({u, d + 1});
      }
  }
  return seen;
}

bool symmetric_irreflexive(const Graph& g) {
  for (int v = 0; v < g.size(); ++v)
    for (int u : g.adjacency[static_cast<std::size_t>(v)]) {
      if (u == v) return false;
      const auto& back = g.adjacency[static_cast<std::size_t>(u)];
      if (std::count(back.begin(), back.end(), v) != 1) return false;
    }
  return true;
}

int cyclic_distance(const Word& x, const Word& y, const std::vector<int>& periods) {
  int d = 0;
  for (int i = 0; i < x.dim(); ++i) {
    const int q = periods[static_cast<std::size_t>(i)];
    const int t = ((x[i] - y[i]) % q + q) % q;
    d += std::min(t, q - t);
  }
  return d;
}

}  // namespace

TEST(Weight, Examples) {
  EXPECT_EQ(weight(Word{0, 0, 0}), 0);
  EXPECT_EQ(weight(Word{1, 0, 0, 0, -2, 1}), 4);
  EXPECT_EQ(weight(Word{3, -1}), 4);
  EXPECT_EQ(manhattan(Word{1, 2}, Word{-1, 0}), 4);
}

TEST(WordType, Examples) {
  EXPECT_EQ(word_type(Word{1, 0, 0, 0, -2, 1}), "2110");
  EXPECT_EQ(word_type(Word{0, 0, 0}), "0000");
  EXPECT_EQ(word_type(Word{3, 1, 0, 0}), "3100");
  EXPECT_EQ(word_type(Word{-1, 1, -1, 1}), "1111");
}

TEST(WordType, RejectsHeavyWords) {
  try {
    word_type(Word{3, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::unsupported_weight);
  }
}

TEST(Cap, Examples) {
  const auto c = cap(3, 1, 1);
  const std::set<Word> got(c.begin(), c.end());
  const std::set<Word> want{{3, 1, 0}, {3, -1, 0}, {3, 0, 1}, {3, 0, -1}};
  EXPECT_EQ(got, want);

  const auto c2 = cap(2, 2, -1);
  EXPECT_EQ(std::set<Word>(c2.begin(), c2.end()), (std::set<Word>{{1, -3}, {-1, -3}}));
  EXPECT_EQ(cap(4, 1, 1).size(), 6u);
  for (const Word& w : cap(4, 3, -1)) EXPECT_EQ(weight(w), 4);
}

TEST(Cap, RejectsDimensionOne) {
  try {
    cap(1, 1, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::empty_cap);
  }
}

TEST(IntervalGraph, SizesForWeightFourTypes) {
  const std::map<std::string, int> want{{"4000", 5}, {"3100", 8}, {"2200", 9}, {"2110", 12}, {"1111", 16}};
  const std::map<std::string, Word> reps{
      {"4000", {4, 0, 0, 0}}, {"3100", {3, 1, 0, 0}}, {"2200", {2, 2, 0, 0}}, {"2110", {2, 1, 1, 0}}, {"1111", {1, 1, 1, 1}}};
  for (const auto& [type, x] : reps) {
    const Graph g = interval_graph(x);
    EXPECT_EQ(g.size(), want.at(type)) << type;
    EXPECT_TRUE(symmetric_irreflexive(g));
  }
}

TEST(IntervalGraph, MatchesMetricIntervalOracle) {
  for (const Word& x : {Word{2, -1, 1, 0}, Word{-3, 1, 0, 0}, Word{1, -1, 1, -1}}) {
    std::set<Word> oracle;
    for (const Word& y : bfs_ball(4, 4))
      if (manhattan(y, x) + weight(y) == weight(x)) oracle.insert(y);
    const Graph g = interval_graph(x);
    EXPECT_EQ(std::set<Word>(g.vertices.begin(), g.vertices.end()), oracle);
    for (int v = 0; v < g.size(); ++v)
      for (int u : g.adjacency[static_cast<std::size_t>(v)])
        EXPECT_EQ(manhattan(g.vertices[static_cast<std::size_t>(v)], g.vertices[static_cast<std::size_t>(u)]), 1);
  }
}

TEST(IntervalGraph, FourCubeForAllOnes) {
  const Graph g = interval_graph(Word{1, 1, 1, 1});
  EXPECT_EQ(g.edge_count(), 32);
  for (int v = 0; v < g.size(); ++v) EXPECT_EQ(g.degree(v), 4);
}

TEST(BallGraph, Examples) {
  const BallGraph b1 = ball_graph(1, 6);
  EXPECT_EQ(b1.size(), 13);
  EXPECT_EQ(std::count(b1.interior.begin(), b1.interior.end(), 1), 11);

  const BallGraph b3 = ball_graph(3, 6);
  EXPECT_EQ(b3.size(), 377);
  EXPECT_EQ(std::count(b3.interior.begin(), b3.interior.end(), 1), 231);

  EXPECT_EQ(ball_graph(4, 6).size(), 1289);
}

TEST(BallGraph, AgreesWithBreadthFirstWalk) {
  for (int n = 1; n <= 4; ++n)
    for (int r = 0; r <= 7; ++r) {
      if (n == 4 && r == 7) continue;
      const BallGraph b = ball_graph(n, r);
      const auto oracle = bfs_ball(n, r);
      ASSERT_EQ(b.size(), static_cast<int>(oracle.size())) << n << " " << r;
      EXPECT_EQ(std::set<Word>(b.vertices.begin(), b.vertices.end()), oracle);
    }
}

TEST(BallGraph, StructuralInvariants) {
  for (int n = 1; n <= 4; ++n)
    for (int r = 1; r <= 5; ++r) {
      const BallGraph b = ball_graph(n, r);
      EXPECT_EQ(b.vertices[0], Word::zero(n));
      EXPECT_TRUE(symmetric_irreflexive(b));
      for (int v = 0; v < b.size(); ++v) {
        const Word& w = b.vertices[static_cast<std::size_t>(v)];
        int leaving = 0;
        for (int i = 0; i < n; ++i)
          for (int s : {1, -1})
            if (weight(w + Word::unit(n, i, s)) > r) ++leaving;
        EXPECT_EQ(b.degree(v), 2 * n - leaving);
        EXPECT_EQ(b.interior[static_cast<std::size_t>(v)] != 0, b.degree(v) == 2 * n);
        EXPECT_EQ(b.interior[static_cast<std::size_t>(v)] != 0, weight(w) <= r - 1);
        EXPECT_EQ(b.index_of(w), v);
        if (v > 0) {
          const Word& p = b.vertices[static_cast<std::size_t>(v - 1)];
          EXPECT_TRUE(weight(p) < weight(w) || (weight(p) == weight(w) && p < w));
        }
      }
    }
}

TEST(Quotients, Examples) {
  const auto t33 = torus_graph(3, 3);
  EXPECT_EQ(t33.size(), 27);
  for (int v = 0; v < t33.size(); ++v) EXPECT_EQ(t33.degree(v), 6);

  const auto t24 = torus_graph(2, 4);
  EXPECT_EQ(t24.size(), 16);
  for (int v = 0; v < t24.size(); ++v) EXPECT_EQ(t24.degree(v), 4);

  const auto tri = triangular_torus(4);
  EXPECT_EQ(tri.size(), 16);
  for (int v = 0; v < tri.size(); ++v) EXPECT_EQ(tri.degree(v), 6);
  EXPECT_TRUE(symmetric_irreflexive(tri));

  for (auto [n, q] : {std::pair{3, 3}, {2, 4}, {4, 2}, {2, 5}}) {
    const auto h = hamming_graph(n, q);
    for (int v = 0; v < h.size(); ++v) EXPECT_EQ(h.degree(v), n * (q - 1));
  }
}

TEST(Quotients, TorusEdgesHaveCyclicDistanceOne) {
  for (auto [n, q] : {std::pair{2, 3}, {3, 4}, {2, 7}}) {
    const auto t = torus_graph(n, q);
    const std::vector<int> per(static_cast<std::size_t>(n), q);
    int pairs = 0;
    for (int v = 0; v < t.size(); ++v)
      for (int u = 0; u < t.size(); ++u) {
        const bool adj = std::count(t.adjacency[static_cast<std::size_t>(v)].begin(),
                                    t.adjacency[static_cast<std::size_t>(v)].end(), u) > 0;
        const bool near = cyclic_distance(t.vertices[static_cast<std::size_t>(v)], t.vertices[static_cast<std::size_t>(u)], per) == 1;
        EXPECT_EQ(adj, near);
        pairs += adj;
      }
    EXPECT_EQ(pairs, t.size() * 2 * n);
  }
}

TEST(Quotients, TernaryTorusIsHamming) {
  for (int n = 1; n <= 3; ++n) {
    const auto t = torus_graph(n, 3);
    const auto h = hamming_graph(n, 3);
    ASSERT_EQ(t.size(), h.size());
    for (int v = 0; v < t.size(); ++v) {
      auto a = t.adjacency[static_cast<std::size_t>(v)];
      const int hv = h.index_of(t.vertices[static_cast<std::size_t>(v)]);
      std::vector<int> b;
      for (int u : h.adjacency[static_cast<std::size_t>(hv)]) b.push_back(t.index_of(h.vertices[static_cast<std::size_t>(u)]));
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      EXPECT_EQ(a, b);
    }
  }
}

TEST(Quotients, RejectsSmallPeriods) {
  EXPECT_THROW(torus_graph(2, 2), Error);
  EXPECT_THROW(triangular_torus(2), Error);
  EXPECT_THROW(hamming_graph(2, 1), Error);
}

TEST(Gray, Examples) {
  EXPECT_EQ(gray_word(std::vector<int>{0, 3}), (std::vector<int>{0, 0, 0, 1}));
  EXPECT_EQ(gray_word(std::vector<int>{2}), (std::vector<int>{1, 1}));
  EXPECT_EQ(gray_word(std::vector<int>{1}), (std::vector<int>{1, 0}));
  EXPECT_THROW(gray_word(std::vector<int>{4}), Error);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const std::vector<int> x{a, b};
      EXPECT_EQ(gray_inverse(gray_word(x)), x);
    }
}

TEST(Gray, IsomorphismTorusToHypercube) {
  for (int n = 1; n <= 3; ++n) {
    const auto t = torus_graph(n, 4);
    const auto h = hamming_graph(2 * n, 2);
    std::set<std::vector<int>> images;
    for (int v = 0; v < t.size(); ++v) images.insert(gray_word(t.vertices[static_cast<std::size_t>(v)].coords()));
    ASSERT_EQ(static_cast<int>(images.size()), h.size());
    for (int v = 0; v < t.size(); ++v)
      for (int u = 0; u < t.size(); ++u) {
        const auto gv = gray_word(t.vertices[static_cast<std::size_t>(v)].coords());
        const auto gu = gray_word(t.vertices[static_cast<std::size_t>(u)].coords());
        int ham = 0;
        for (std::size_t i = 0; i < gv.size(); ++i) ham += gv[i] != gu[i];
        const auto& adj = t.adjacency[static_cast<std::size_t>(v)];
        EXPECT_EQ(std::count(adj.begin(), adj.end(), u) > 0, ham == 1);
      }
  }
}

TEST(TriangularCovering, Examples) {
  EXPECT_EQ(triangular_covering(Word{1, 0, 0}), (Word{1, 0}));
  EXPECT_EQ(triangular_covering(Word{0, 1, 0}), (Word{-1, -1}));
  EXPECT_EQ(triangular_covering(Word{0, 0, 0}), (Word{0, 0}));
}

TEST(TriangularCovering, MapsNeighbourhoodsBijectively) {
  const std::set<Word> gens{{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}};
  for (const Word& x : bfs_ball(3, 3)) {
    const Word fx = triangular_covering(x);
    std::set<Word> steps;
    for (int i = 0; i < 3; ++i)
      for (int s : {1, -1}) steps.insert(triangular_covering(x + Word::unit(3, i, s)) - fx);
    EXPECT_EQ(steps, gens);
  }
}

TEST(DistancePartition, Examples) {
  const BallGraph b = ball_graph(1, 2);
  const auto labels = distance_partition(b, std::vector<int>{0});
  std::map<int, int> by_coord;
  for (int v = 0; v < b.size(); ++v) by_coord[b.vertices[static_cast<std::size_t>(v)][0]] = labels[static_cast<std::size_t>(v)];
  EXPECT_EQ(by_coord, (std::map<int, int>{{-2, 2}, {-1, 1}, {0, 0}, {1, 1}, {2, 2}}));

  const auto t = torus_graph(3, 4);
  std::vector<int> even;
  for (int v = 0; v < t.size(); ++v)
    if (weight(t.vertices[static_cast<std::size_t>(v)]) % 2 == 0) even.push_back(v);
  const auto parity = distance_partition(t, even);
  EXPECT_EQ(*std::max_element(parity.begin(), parity.end()), 1);

  const auto t5 = torus_graph(2, 5);
  std::vector<int> gw;
  for (int v = 0; v < t5.size(); ++v) {
    const Word& w = t5.vertices[static_cast<std::size_t>(v)];
    if ((w[0] + 2 * w[1]) % 5 == 0) gw.push_back(v);
  }
  const auto lab = distance_partition(t5, gw);
  EXPECT_EQ(*std::max_element(lab.begin(), lab.end()), 1);
  // Brute-force: every vertex is within distance one of exactly one code word.
  for (int v = 0; v < t5.size(); ++v) {
    int near = 0;
    for (int c : gw) near += cyclic_distance(t5.vertices[static_cast<std::size_t>(v)], t5.vertices[static_cast<std::size_t>(c)], {5, 5}) <= 1;
    EXPECT_EQ(near, 1);
  }
}

TEST(DistancePartition, RejectsEmptySeed) {
  try {
    distance_partition(ball_graph(2, 2), std::vector<int>{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::empty_seed);
  }
}

TEST(GraphJson, HasDocumentedKeys) {
  const auto j = graph_json(ball_graph(2, 1));
  for (const char* k : {"kind", "n", "R", "vertices", "adjacency"}) EXPECT_TRUE(j.contains(k)) << k;
  const auto t = graph_json(torus_graph(2, 3));
  for (const char* k : {"kind", "n", "q", "vertices", "adjacency"}) EXPECT_TRUE(t.contains(k)) << k;
}
