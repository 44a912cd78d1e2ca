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

#include <set>

#include "crcgrid/classify.hpp"

using namespace crcgrid;

namespace {

std::set<std::string> strings(const std::vector<PartialMatrix>& ps) {
  std::set<std::string> out;
  for (const auto& p : ps) out.insert(format_partial(p));
  return out;
}

// Counts neighbour colours directly, without the constraint encoding.
bool colouring_fits(const BallGraph& ball, const std::vector<int>& col, const ParamMatrix& a) {
  for (int v = 0; v < ball.size(); ++v) {
    std::vector<int> cnt(static_cast<std::size_t>(a.rho() + 1), 0);
    for (int u : ball.adjacency[static_cast<std::size_t>(v)]) ++cnt[static_cast<std::size_t>(col[static_cast<std::size_t>(u)])];
    for (int j = 0; j <= a.rho(); ++j) {
      const int want = a.entry(col[static_cast<std::size_t>(v)], j);
      const int got = cnt[static_cast<std::size_t>(j)];
      if (ball.interior[static_cast<std::size_t>(v)] ? got != want : got > want) return false;
    }
  }
  return true;
}

ClassifyOptions quick(int radius = 6) {
  ClassifyOptions o;
  o.radius = radius;
  o.budget = Budget{};
  return o;
}

}  // namespace

TEST(Enumerate, RadiusOneCandidates) {
  const CandidateSet s = enumerate_partial(3, 1, 1);
  EXPECT_EQ(strings(s.partials), (std::set<std::string>{"[0|1]", "[0|2]", "[0|3]", "[0|4]", "[0|5]", "[0|6]"}));
}

TEST(Enumerate, MatchesDirectFilter) {
  for (int n = 1; n <= 3; ++n) {
    const int k = 2 * n;
    std::set<std::string> oracle;
    for (int c1 = 1; c1 <= k; ++c1)
      for (int a1 = 0; a1 <= k; ++a1)
        for (int c2 = 1; c2 <= k; ++c2) {
          const int b1 = k - c1 - a1;
          if (b1 < 1 || b1 > k || c2 < c1) continue;
          oracle.insert(format_partial(partial_from_rows(k, {{0, k}, {c1, a1}, {0, c2}})));
        }
    const CandidateSet s = enumerate_partial(n, 2, 1);
    EXPECT_EQ(strings(s.partials), oracle) << n;
    for (const auto& p : s.partials) {
      EXPECT_TRUE(monotonicity_check(p));
      EXPECT_EQ(p.a[0], 0);
      EXPECT_TRUE(admissible(p));
    }
  }
  EXPECT_TRUE(strings(enumerate_partial(3, 2, 1).partials).count("[0,6|1,0|0,5]"));
}

TEST(Enumerate, NullPrefix) {
  const CandidateSet s = enumerate_partial(1, 2, 2);
  std::set<std::string> oracle;
  for (int c2 = 1; c2 <= 2; ++c2) oracle.insert(format_partial(partial_from_rows(2, {{0, 2}, {1, 0}, {0, c2}})));
  EXPECT_EQ(strings(s.partials), oracle);
  for (const auto& p : enumerate_partial(3, 3, 2).partials) {
    EXPECT_EQ(p.a[0], 0);
    EXPECT_EQ(p.a[1], 0);
  }
  EXPECT_THROW(enumerate_partial(3, 2, 3), Error);
}

TEST(Descendants, ExampleBlock) {
  const PartialMatrix b = partial_from_rows(6, {{0, 6}, {1, 0}, {0, 5}});
  const auto ds = descendants(b);
  EXPECT_EQ(strings(ds), (std::set<std::string>{"[0,6|1,0,5|5,0|0,5]", "[0,6|1,0,5|5,0|0,6]", "[0,6|1,0,5|5,1|0,5]",
                                                 "[0,6|1,0,5|5,1|0,6]"}));
  std::set<std::string> kept;
  for (const auto& d : ds) {
    EXPECT_EQ(parent(d), b);
    if (admissible(d)) kept.insert(format_partial(d));
  }
  EXPECT_EQ(kept, (std::set<std::string>{"[0,6|1,0,5|5,0|0,5]", "[0,6|1,0,5|5,0|0,6]"}));
}

TEST(Descendants, FullLastRowHasNone) {
  EXPECT_TRUE(descendants(partial_from_rows(6, {{0, 6}, {2, 0}, {0, 6}})).empty());
  EXPECT_TRUE(descendants(parse_partial("[0,6|1,0,5|5,0|0,6]", 6)).empty());
}

TEST(Descendants, KeepUpperBlockAndDiagonal) {
  const PartialMatrix b = parse_partial("[0,2|1,0|0,1]", 2);
  for (const auto& d : descendants(b)) {
    EXPECT_EQ(parent(d), b);
    EXPECT_EQ(d.a[0], 0);
    EXPECT_EQ(d.a[1], 0);
    EXPECT_EQ(d.b.back(), 1);
  }
  EXPECT_THROW(parent(parse_partial("[0|1]", 2)), Error);
}

TEST(Blocks, ImpliedAndRepeatedRows) {
  EXPECT_EQ(implied_b(parse_partial("[0,6|1,0|0,5]", 6)), 5);
  EXPECT_EQ(implied_b(parse_partial("[0,6|3,0,3|3,0|0,3]", 6)), 3);
  EXPECT_TRUE(repeated_interior_rows(parse_partial("[0,6|3,0,3|3,0|0,3]", 6)));
  EXPECT_FALSE(repeated_interior_rows(parse_partial("[0,6|1,0,5|5,0|0,6]", 6)));
  EXPECT_FALSE(repeated_interior_rows(parse_partial("[0,6|3,0|0,3]", 6)));
  EXPECT_FALSE(admissible(parse_partial("[0,6|1,0,5|5,1|0,5]", 6)));
}

TEST(Canonical, Examples) {
  EXPECT_EQ(format_compact(canonicalize(parse_compact("[0,6|4,0,2|5,0,1|6,0]"))), "[0,6|1,0,5|2,0,4|6,0]");
  const ParamMatrix self = parse_compact("[0,6|1,0,5|5,0,1|6,0]");
  EXPECT_EQ(canonicalize(self), self);
  for (const std::string s : {"[0,6|1,5]", "[0,6|1,2,3|2,4]", "[0,6|1,1,4|2,2,2|3,3]", "[0,6|2,0,4|4,0,2|6,0]",
                              "[0,6|3,0,3|3,3]", "[0,6|1,0,5|2,0,4|3,0,3|4,0,2|5,0,1|6,0]"}) {
    const ParamMatrix c = canonicalize(parse_compact(s));
    EXPECT_EQ(canonicalize(c), c);
    EXPECT_TRUE(c == parse_compact(s) || c == opposite_matrix(parse_compact(s)));
  }
}

TEST(Canonical, LineFamily) {
  for (int q = 4; q <= 12; ++q) EXPECT_TRUE(is_scaled_line_family(scaled(line_matrix(q), 3), 3)) << q;
  EXPECT_FALSE(is_scaled_line_family(parse_compact("[0,6|1,0,5|6,0]"), 3));
  EXPECT_FALSE(is_scaled_line_family(parse_compact("[0,6|3,3]"), 3));
  EXPECT_TRUE(is_scaled_line_family(parse_compact("[0,6|3,0,3|6,0]"), 3));
}

TEST(Catalog, EntriesVerify) {
  for (const auto& e : realization_catalog(3)) {
    const Construction c = construct(e.kind, e.params);
    const Verdict v = verify_periodic(c.code, e.matrix);
    EXPECT_TRUE(v.is_crc && *v.matches_expected) << e.id;
  }
}

TEST(RadiusOne, DimensionThree) {
  const ClassificationReport rep = classify_rho1(3, quick());
  std::set<int> feasible, excluded;
  for (const auto& v : rep.verdicts) {
    const int c = v.matrix->c[1];
    ASSERT_NE(v.kind, VerdictKind::undecided);
    (v.kind == VerdictKind::excluded ? excluded : feasible).insert(c);
    if (v.kind == VerdictKind::excluded) {
      ASSERT_EQ(v.runs.size(), 1u);
      EXPECT_EQ(v.runs[0].status, SolveStatus::infeasible);
    }
  }
  EXPECT_EQ(feasible, (std::set<int>{1, 2, 3, 6}));
  EXPECT_EQ(excluded, (std::set<int>{4, 5}));
  EXPECT_FALSE(rep.has_timeout());
}

TEST(RadiusOne, DimensionOneAgreesWithExhaustiveColourings) {
  const BallGraph ball = ball_graph(1, 6);
  std::set<int> oracle;
  for (int c = 1; c <= 2; ++c) {
    const ParamMatrix a = make_matrix(2, {0, 2 - c}, {2}, {c});
    for (unsigned mask = 0; mask < (1u << ball.size()); ++mask) {
      std::vector<int> col(static_cast<std::size_t>(ball.size()));
      for (int v = 0; v < ball.size(); ++v) col[static_cast<std::size_t>(v)] = (mask >> v) & 1u;
      if (col[0] != 0) continue;
      if (colouring_fits(ball, col, a)) {
        oracle.insert(c);
        break;
      }
    }
  }
  std::set<int> got;
  for (const auto& v : classify_rho1(1, quick()).verdicts)
    if (v.kind != VerdictKind::excluded) got.insert(v.matrix->c[1]);
  EXPECT_EQ(got, oracle);
  EXPECT_EQ(got, (std::set<int>{1, 2}));
}

TEST(RadiusOne, DimensionTwoKnownCodes) {
  const ClassificationReport rep = classify_rho1(2, quick());
  for (const auto& v : rep.verdicts) {
    const int c = v.matrix->c[1];
    if (c == 1 || c == 4) EXPECT_EQ(v.kind, VerdictKind::realized) << c;
  }
}

TEST(RadiusOne, ExclusionsReproduce) {
  const ClassifyOptions o = quick();
  const ClassificationReport rep = classify_rho1(3, o);
  for (const auto& v : rep.verdicts) {
    if (v.kind != VerdictKind::excluded) continue;
    const auto& run = v.runs[0];
    const auto p = build_lp_partial(ball_graph(3, run.radius), parse_partial(v.candidate, 6), run.mode);
    EXPECT_EQ(problem_hash(p), run.problem_hash);
    EXPECT_EQ(solve(p).status, SolveStatus::infeasible);
  }
}

TEST(Report, TimeoutsStayUndecided) {
  ClassifyOptions o = quick(4);
  o.budget.node_limit = 1;
  o.fallback_radii = false;
  const ClassificationReport rep = classify_rho1(3, o);
  EXPECT_TRUE(rep.has_timeout());
  for (const auto& v : rep.verdicts)
    if (v.kind == VerdictKind::excluded)
      for (const auto& r : v.runs) EXPECT_EQ(r.status, SolveStatus::infeasible);
}

TEST(Report, DeterministicJson) {
  ClassifyOptions o = quick(5);
  const auto a = report_json(classify_rho1(3, o), false).dump();
  o.jobs = 3;
  const auto b = report_json(classify_rho1(3, o), false).dump();
  EXPECT_EQ(a, b);
  const auto j = nlohmann::json::parse(a);
  for (const char* k : {"scope", "n", "radius", "has_timeout", "verdicts", "environment"}) EXPECT_TRUE(j.contains(k));
  EXPECT_FALSE(j["environment"].contains("timestamp"));
  EXPECT_TRUE(report_json(classify_rho1(1, o))["environment"].contains("timestamp"));
}

TEST(Report, TableHasProvenance) {
  const std::string t = report_table(classify_rho1(3, quick()));
  EXPECT_NE(t.find("[0,6|1,5]"), std::string::npos);
  EXPECT_NE(t.find("perfect n=3"), std::string::npos);
  EXPECT_EQ(t.find("[0,6|4,2]"), std::string::npos);
}

TEST(Report, HashDistinguishesProblems) {
  const BallGraph b = ball_graph(2, 3);
  const auto p = build_lp_partial(b, parse_partial("[0,4|1,0|0,3]", 4), LpMode::at_least);
  const auto q = build_lp_partial(b, parse_partial("[0,4|1,0|0,3]", 4), LpMode::exactly);
  EXPECT_EQ(problem_hash(p), problem_hash(p));
  EXPECT_NE(problem_hash(p), problem_hash(q));
  EXPECT_EQ(problem_hash(p).size(), 16u);
}

TEST(Buckets, DecisionTable) {
  using S = SolveStatus;
  EXPECT_EQ(root_bucket(S::infeasible, S::feasible, S::feasible, true), "excluded");
  EXPECT_EQ(root_bucket(S::feasible, S::feasible, S::infeasible, false), "A1");
  EXPECT_EQ(root_bucket(S::feasible, S::feasible, S::feasible, false), "A2");
  EXPECT_EQ(root_bucket(S::feasible, S::feasible, S::feasible, true), "A3");
  EXPECT_EQ(root_bucket(S::feasible, S::infeasible, S::feasible, true), "B");
  EXPECT_EQ(root_bucket(S::feasible, S::timeout, S::feasible, true), "undecided");
}

TEST(Buckets, Routes) {
  EXPECT_EQ(g3_route(parse_partial("[0,6|1,1|0,2]", 6)), "ternary-route");
  EXPECT_EQ(g3_route(parse_partial("[0,6|1,0|0,2]", 6)), "binary-route");
  EXPECT_EQ(g3_route(parse_partial("[0,6|1,0|0,3]", 6)), "");
}

TEST(Roots, ExampleBlockIsCaseB) {
  const Classifier cl(3, quick());
  const auto vs = classify_root(cl, partial_from_rows(6, {{0, 6}, {1, 0}, {0, 5}}));
  ASSERT_FALSE(vs.empty());
  EXPECT_EQ(vs.front().bucket, "B");
  std::set<std::string> realized;
  for (const auto& v : vs)
    if (v.kind == VerdictKind::realized) realized.insert(format_compact(*v.matrix));
  EXPECT_EQ(realized, (std::set<std::string>{"[0,6|1,0,5|5,0,1|6,0]"}));
}

TEST(Roots, RepeatingFamilyReducesToTheLine) {
  const Classifier cl(3, quick());
  const auto vs = classify_root(cl, partial_from_rows(6, {{0, 6}, {3, 0}, {0, 3}}));
  EXPECT_EQ(vs.front().bucket, "A3");
  std::set<std::string> reduced;
  for (const auto& v : vs)
    if (v.kind == VerdictKind::reduced_to_g1) reduced.insert(v.candidate);
  EXPECT_EQ(reduced, (std::set<std::string>{"[0,6|3,0,3|3,0|0,3]", "[0,6|3,0,3|3,0|0,6]"}));
}

TEST(Roots, TwoNullC3BlockIsExcluded) {
  const Classifier cl(3, quick());
  const auto vs = classify_root(cl, partial_from_rows(6, {{0, 6}, {2, 0}, {0, 3}}));
  ASSERT_EQ(vs.size(), 1u);
  EXPECT_EQ(vs.front().kind, VerdictKind::excluded);
}

TEST(Summary, FoldsLeaves) {
  ClassificationReport rep;
  rep.verdicts.push_back({"x", 2, "c2=5", VerdictKind::excluded, std::nullopt, "", "", {}});
  rep.verdicts.push_back({"y", 2, "c2=7", VerdictKind::feasible_not_excluded, std::nullopt, "", "", {}});
  rep.verdicts.push_back({"z", 3, "c2=7", VerdictKind::realized, parse_compact("[0,8|1,0,7|7,0,1|8,0]"), "halved-perfect n=4", "", {}});
  rep.verdicts.push_back({"w", 2, "c2=6", VerdictKind::undecided, std::nullopt, "", "", {}});
  EXPECT_TRUE(summarize_c2(rep, 5).excluded);
  const C2Summary s7 = summarize_c2(rep, 7);
  EXPECT_FALSE(s7.excluded);
  EXPECT_EQ(s7.survivors, (std::set<std::string>{"[0,8|1,0,7|7,0,1|8,0]"}));
  EXPECT_TRUE(summarize_c2(rep, 6).undecided);
  EXPECT_FALSE(summarize_c2(rep, 6).excluded);
  EXPECT_THROW(classify_g4_2null({1}), Error);
}
