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

// Candidate enumeration and the classification drivers.
//
// Exclusions are only ever backed by an Infeasible solver result. A feasible
// ball problem says nothing about existence; such candidates are reported as
// feasible-not-excluded unless a catalog construction realizes them.

#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <ctime>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "crcgrid/codes.hpp"
#include "crcgrid/constructions.hpp"
#include "crcgrid/error.hpp"
#include "crcgrid/feasibility.hpp"
#include "crcgrid/lattice.hpp"

namespace crcgrid {

// ---------------------------------------------------------------------------
// Candidates

struct CandidateSet {
  int n = 0;
  int rho = 0;
  int r = 0;
  std::vector<PartialMatrix> partials;
};

/// b_{rho-1} of any completion of B.
inline int implied_b(const PartialMatrix& p) {
  const auto k = static_cast<std::size_t>(p.rho() - 1);
  return p.valency - p.c[k] - p.a[k];
}

/// All (rho+1) x rho blocks with zero a-prefix of length r, nondecreasing c,
/// nonincreasing b (including the implied b_{rho-1}), complete rows summing to
/// 2n and every b_i >= 1.
inline CandidateSet enumerate_partial(int n, int rho, int r) {
  if (rho < 1 || r < 1 || r > rho) throw Error(Errc::domain, "need 1 <= r <= rho");
  const int k = 2 * n;
  CandidateSet set{n, rho, r, {}};
  PartialMatrix cur;
  cur.valency = k;
  cur.c.push_back(0);

  // Row i gets (c_i, a_i); for i <= rho-2 b_i is forced by the row sum.
  auto rec = [&](auto&& self, int i) -> void {
    if (i == rho) {
      const int lo = cur.c.back();
      for (int c = std::max(1, lo); c <= k; ++c) {
        cur.c.push_back(c);
        set.partials.push_back(cur);
        cur.c.pop_back();
      }
      return;
    }
    const int prev_c = i == 0 ? 0 : cur.c.back();
    const int prev_b = i == 0 ? k + 1 : (i == 1 ? k - cur.a[0] : cur.b.back());
    for (int c = (i == 0 ? 0 : std::max(1, prev_c)); c <= (i == 0 ? 0 : k); ++c) {
      for (int a = 0; c + a <= k - 1; ++a) {
        if (i < r && a != 0) break;
        const int b = k - c - a;
        if (i > 0 && b > prev_b) continue;
        if (i > 0) cur.c.push_back(c);
        cur.a.push_back(a);
        if (i + 1 < rho) cur.b.push_back(b);
        self(self, i + 1);
        if (i + 1 < rho) cur.b.pop_back();
        cur.a.pop_back();
        if (i > 0) cur.c.pop_back();
      }
    }
  };
  rec(rec, 0);
  return set;
}

/// (rho+2) x (rho+1) blocks containing B: b_{rho-1} fixed by the row sum, any
/// a_rho and c_{rho+1} keeping the monotone conditions and row sums <= 2n.
/// A block ending in c_rho = 2n has none.
inline std::vector<PartialMatrix> descendants(const PartialMatrix& p) {
  std::vector<PartialMatrix> out;
  const int k = p.valency;
  const int rho = p.rho();
  const int c_last = p.c[static_cast<std::size_t>(rho)];
  if (c_last >= k) return out;
  const int b_new = implied_b(p);
  if (b_new < 0) return out;
  if (!p.b.empty() && b_new > p.b.back()) return out;
  if (p.b.empty() && b_new > k - p.a[0]) return out;
  for (int a = 0; c_last + a <= k; ++a)
    for (int c = c_last; c <= k; ++c) {
      PartialMatrix d = p;
      d.b.push_back(b_new);
      d.a.push_back(a);
      d.c.push_back(c);
      out.push_back(std::move(d));
    }
  return out;
}

/// The upper-left block one level up.
inline PartialMatrix parent(const PartialMatrix& p) {
  if (p.rho() < 2) throw Error(Errc::domain, "a rho = 1 block has no parent");
  PartialMatrix q = p;
  q.a.pop_back();
  q.b.pop_back();
  q.c.pop_back();
  return q;
}

/// A block can sit inside a CRC of covering radius >= rho only if C_rho is
/// reachable from C_{rho-1}: the implied b_{rho-1} is positive and monotone.
inline bool admissible(const PartialMatrix& p) {
  const int b = implied_b(p);
  if (b < 1) return false;
  if (!p.b.empty() && b > p.b.back()) return false;
  for (int x : p.b)
    if (x < 1) return false;
  return monotonicity_check(p);
}

/// Two equal interior rows among 1..rho-1, the last one using the implied b.
inline bool repeated_interior_rows(const PartialMatrix& p) {
  const int rho = p.rho();
  auto row = [&](int i) {
    const auto k = static_cast<std::size_t>(i);
    const int b = i + 1 < rho ? p.b[k] : implied_b(p);
    return std::array<int, 3>{p.c[k], p.a[k], b};
  };
  for (int i = 1; i < rho; ++i)
    for (int j = i + 1; j < rho; ++j)
      if (row(i) == row(j)) return true;
  return false;
}

/// Lexicographically smaller compact string of A and its opposite.
inline ParamMatrix canonicalize(const ParamMatrix& m) {
  const ParamMatrix o = opposite_matrix(m);
  return format_compact(o) < format_compact(m) ? o : m;
}

/// m = n * (matrix of qZ on the line) for some q >= 4.
inline bool is_scaled_line_family(const ParamMatrix& m, int n) {
  if (m.rho() < 2 || m.valency != 2 * n) return false;
  const int q = m.a.back() == 0 ? 2 * m.rho() : 2 * m.rho() + 1;
  return m == scaled(line_matrix(q), n);
}

// ---------------------------------------------------------------------------
// Realizations

struct CatalogEntry {
  std::string id;
  std::string kind;
  nlohmann::json params;
  ParamMatrix matrix;
};

/// Constructions whose claimed matrices are used to label realized candidates.
inline std::vector<CatalogEntry> realization_catalog(int n) {
  std::vector<std::pair<std::string, nlohmann::json>> specs = {
      {"perfect", {{"n", n}}},          {"halved-perfect", {{"n", n}}}, {"distance", {{"n", n}}},
      {"distance-anticode", {{"n", n}}}, {"all-ones", {{"n", n}}},      {"even-weight", {{"n", n}}},
  };
  for (int t = 1; t < 2 * n; ++t) specs.push_back({"diameter", {{"n", n}, {"t", t}}});
  for (int q = 3; q <= 6; ++q) specs.push_back({"multiply", {{"k", n}, {"source", "g1-" + std::to_string(q)}}});
  if (n == 3) {
    for (const auto& [name, src] : ternary_sources()) specs.push_back({"ternary", {{"source", name}}});
    for (const auto& [name, src] : binary_sources()) specs.push_back({"binary", {{"source", name}}});
  }
  std::vector<CatalogEntry> out;
  for (auto& [kind, params] : specs) {
    const Construction c = construct(kind, params);
    if (!c.claimed) continue;
    std::string id = kind;
    for (const auto& [key, val] : params.items())
      id += " " + key + "=" + (val.is_string() ? val.get<std::string>() : val.dump());
    out.push_back({id, kind, params, *c.claimed});
  }
  return out;
}

/// Matrices realized only by codes from the triangular grid that are cited,
/// not shipped.
inline const std::vector<std::string>& cited_realizations(int n) {
  static const std::vector<std::string> g3 = {"[0,6|1,2,3|2,4]", "[0,6|1,2,3|3,3]"};
  static const std::vector<std::string> none;
  return n == 3 ? g3 : none;
}

// ---------------------------------------------------------------------------
// Reports

enum class VerdictKind { excluded, feasible_not_excluded, realized, reduced_to_g1, theorem_backed, undecided };

inline const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::excluded: return "excluded";
    case VerdictKind::feasible_not_excluded: return "feasible-not-excluded";
    case VerdictKind::realized: return "realized-by-construction";
    case VerdictKind::reduced_to_g1: return "reduced-to-G1";
    case VerdictKind::theorem_backed: return "theorem-backed";
    case VerdictKind::undecided: return "undecided";
  }
  return "?";
}

struct LpRun {
  std::string candidate;
  LpMode mode = LpMode::full;
  int radius = 0;
  SolveStatus status = SolveStatus::timeout;
  SolveStats stats;
  std::string problem_hash;
};

struct CandidateVerdict {
  std::string candidate;
  int rho = 0;
  std::string bucket;
  VerdictKind kind = VerdictKind::undecided;
  std::optional<ParamMatrix> matrix;
  std::string construction;
  std::string note;
  std::vector<LpRun> runs;
};

struct ClassificationReport {
  std::string scope;
  int n = 0;
  int radius = 0;
  Budget budget;
  std::vector<CandidateVerdict> verdicts;

  bool has_timeout() const {
    for (const auto& v : verdicts) {
      if (v.kind == VerdictKind::undecided) return true;
      for (const auto& r : v.runs)
        if (r.status == SolveStatus::timeout) return true;
    }
    return false;
  }

  std::vector<const CandidateVerdict*> in_bucket(const std::string& bucket) const {
    std::vector<const CandidateVerdict*> out;
    for (const auto& v : verdicts)
      if (v.bucket == bucket) out.push_back(&v);
    return out;
  }

  /// Canonical matrices that are realized or feasible-not-excluded.
  std::set<std::string> surviving_matrices() const {
    std::set<std::string> out;
    for (const auto& v : verdicts)
      if (v.matrix && (v.kind == VerdictKind::realized || v.kind == VerdictKind::feasible_not_excluded))
        out.insert(format_compact(canonicalize(*v.matrix)));
    return out;
  }
};

/// 64-bit FNV-1a of the OPB text, in hex.
inline std::string problem_hash(const FeasibilityProblem& p) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : export_opb(p)) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

inline nlohmann::json run_json(const LpRun& r) {
  return {{"candidate", r.candidate},
          {"mode", to_string(r.mode)},
          {"radius", r.radius},
          {"status", to_string(r.status)},
          {"nodes", r.stats.nodes},
          {"propagations", r.stats.propagations},
          {"conflicts", r.stats.conflicts},
          {"problem_hash", r.problem_hash}};
}

/// Deterministic JSON; `elapsed` and `timestamp` are the only varying fields.
inline nlohmann::json report_json(const ClassificationReport& rep, bool with_timing = true) {
  nlohmann::json vs = nlohmann::json::array();
  for (const auto& v : rep.verdicts) {
    nlohmann::json runs = nlohmann::json::array();
    for (const auto& r : v.runs) {
      auto j = run_json(r);
      if (with_timing) j["elapsed"] = r.stats.elapsed;
      runs.push_back(std::move(j));
    }
    vs.push_back({{"candidate", v.candidate},
                  {"rho", v.rho},
                  {"bucket", v.bucket},
                  {"verdict", to_string(v.kind)},
                  {"matrix", v.matrix ? format_compact(*v.matrix) : ""},
                  {"construction", v.construction},
                  {"note", v.note},
                  {"runs", runs}});
  }
  nlohmann::json env = {{"compiler", __VERSION__},
                        {"budget_nodes", rep.budget.node_limit},
                        {"budget_seconds", rep.budget.seconds}};
  if (with_timing) env["timestamp"] = static_cast<long long>(std::time(nullptr));
  return {{"scope", rep.scope},
          {"n", rep.n},
          {"radius", rep.radius},
          {"has_timeout", rep.has_timeout()},
          {"verdicts", vs},
          {"environment", env}};
}

/// Two-column table: parameters and provenance, one row per canonical matrix.
inline std::string report_table(const ClassificationReport& rep) {
  std::vector<std::pair<std::string, std::string>> rows;
  std::set<std::string> seen;
  for (const auto& v : rep.verdicts) {
    if (v.kind == VerdictKind::reduced_to_g1) {
      const std::string key = "n x (1-null CRC in G1), rho >= " + std::to_string(v.rho);
      if (seen.insert(key).second) rows.push_back({key, "reduced to G1 from " + v.candidate});
      continue;
    }
    if (!v.matrix || (v.kind != VerdictKind::realized && v.kind != VerdictKind::feasible_not_excluded)) continue;
    const std::string key = format_compact(canonicalize(*v.matrix));
    if (!seen.insert(key).second) continue;
    std::string prov = v.kind == VerdictKind::realized ? v.construction : "feasible, not excluded";
    if (!v.note.empty() && v.kind != VerdictKind::realized) prov += " (" + v.note + ")";
    rows.push_back({key, prov});
  }
  std::size_t w = 10;
  for (const auto& r : rows) w = std::max(w, r.first.size());
  std::ostringstream os;
  os << rep.scope << " (n=" << rep.n << ", radius " << rep.radius << ")\n";
  os << std::string(w - 10, ' ') << "Parameters | Provenance\n";
  os << std::string(w, '-') << "-+-" << std::string(30, '-') << "\n";
  for (const auto& [m, p] : rows) os << std::string(w - m.size(), ' ') << m << " | " << p << "\n";
  std::map<std::string, int> counts;
  for (const auto& v : rep.verdicts) ++counts[to_string(v.kind)];
  os << "\n";
  for (const auto& [k, c] : counts) os << k << ": " << c << "\n";
  if (rep.has_timeout()) os << "WARNING: some problems hit the budget; see undecided verdicts\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Drivers

/// Default per-problem budget: CRCGRID_BUDGET seconds if set, else unlimited.
inline Budget default_budget() {
  Budget b;
  if (const char* env = std::getenv("CRCGRID_BUDGET")) b.seconds = std::atof(env);
  return b;
}

struct ClassifyOptions {
  int radius = 6;
  Budget budget = default_budget();
  int jobs = 1;
  /// Smaller radii to try when a monotone (ge/eq) problem times out.
  bool fallback_radii = true;
};

class Classifier {
 public:
  Classifier(int n, ClassifyOptions opts) : n_(n), opts_(opts), catalog_(realization_catalog(n)) {
    for (int r = 1; r <= opts_.radius; ++r) balls_.push_back(ball_graph(n, r));
  }

  int n() const { return n_; }
  const ClassifyOptions& options() const { return opts_; }

  /// Solves B at the configured radius; monotone modes fall back to smaller
  /// radii on timeout, looking for an Infeasible certificate.
  LpRun run(const PartialMatrix& b, LpMode mode) const {
    LpRun out = run_at(b, mode, opts_.radius);
    if (out.status != SolveStatus::timeout || mode == LpMode::more_than || !opts_.fallback_radii) return out;
    for (int r = opts_.radius - 1; r >= 2; --r) {
      LpRun alt = run_at(b, mode, r);
      if (alt.status == SolveStatus::infeasible) return alt;
    }
    return out;
  }

  LpRun run_at(const PartialMatrix& b, LpMode mode, int radius) const {
    const BallGraph& ball = balls_[static_cast<std::size_t>(radius - 1)];
    const FeasibilityProblem p = build_lp_partial(ball, b, mode);
    const SolveResult r = solve(p, opts_.budget);
    return {format_partial(b), mode, radius, r.status, r.stats, problem_hash(p)};
  }

  /// Label for a matrix the ball problem did not exclude.
  void label(CandidateVerdict& v) const {
    const ParamMatrix& m = *v.matrix;
    const ParamMatrix o = opposite_matrix(m);
    for (const auto& e : catalog_)
      if (e.matrix == m) {
        v.kind = VerdictKind::realized;
        v.construction = e.id;
        return;
      }
    for (const auto& e : catalog_)
      if (e.matrix == o) {
        v.kind = VerdictKind::realized;
        v.construction = "opposite of " + e.id;
        return;
      }
    v.kind = VerdictKind::feasible_not_excluded;
    for (const auto& s : cited_realizations(n_))
      if (format_compact(m) == s || format_compact(o) == s) v.note = "realized per cited reference (triangular grid)";
  }

  /// Expands a block whose LP>= is known feasible. Appends verdicts for its
  /// extension and every descendant; returns whether any descendant was
  /// LP>= feasible.
  bool expand(const PartialMatrix& b, const std::string& bucket, std::vector<CandidateVerdict>& out) const {
    const int rho = b.rho();
    CandidateVerdict ext;
    ext.candidate = format_partial(b);
    ext.rho = rho;
    ext.bucket = bucket;
    ext.matrix = extension(b);
    const LpRun eq = run(b, LpMode::exactly);
    ext.runs.push_back(eq);
    if (eq.status == SolveStatus::infeasible) ext.kind = VerdictKind::excluded;
    else if (eq.status == SolveStatus::timeout) ext.kind = VerdictKind::undecided;
    else label(ext);
    const LpRun gt = run(b, LpMode::more_than);
    ext.runs.push_back(gt);
    out.push_back(ext);
    if (gt.status == SolveStatus::infeasible) return false;
    if (gt.status == SolveStatus::timeout) {
      out.push_back({format_partial(b), rho, bucket, VerdictKind::undecided, std::nullopt, "", "LP> hit the budget", {gt}});
      return false;
    }
    bool any = false;
    for (const PartialMatrix& d : descendants(b)) {
      if (!admissible(d)) continue;
      CandidateVerdict dv;
      dv.candidate = format_partial(d);
      dv.rho = d.rho();
      dv.bucket = bucket;
      const LpRun ge = run(d, LpMode::at_least);
      dv.runs.push_back(ge);
      if (ge.status == SolveStatus::infeasible) {
        dv.kind = VerdictKind::excluded;
        out.push_back(std::move(dv));
        continue;
      }
      if (ge.status == SolveStatus::timeout) {
        dv.kind = VerdictKind::undecided;
        out.push_back(std::move(dv));
        continue;
      }
      any = true;
      if (repeated_interior_rows(d)) {
        dv.kind = VerdictKind::reduced_to_g1;
        dv.note = "two equal interior rows; lifted from a CRC in G1";
        out.push_back(std::move(dv));
        continue;
      }
      if (d.rho() >= 2 * n_ + 1) {
        dv.kind = VerdictKind::undecided;
        dv.note = "covering radius cap reached";
        out.push_back(std::move(dv));
        continue;
      }
      expand(d, bucket, out);
    }
    return any;
  }

  /// Runs `work(i, verdicts)` for i in [0, count) on opts.jobs threads and
  /// concatenates the results in index order.
  template <class Work>
  std::vector<CandidateVerdict> parallel(std::size_t count, Work work) const {
    std::vector<std::vector<CandidateVerdict>> parts(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < count; i = next++) work(i, parts[i]);
    };
    const int jobs = std::max(1, opts_.jobs);
    if (jobs == 1) worker();
    else {
      std::vector<std::thread> pool;
      for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    std::vector<CandidateVerdict> out;
    for (auto& p : parts)
      for (auto& v : p) out.push_back(std::move(v));
    return out;
  }

 private:
  int n_;
  ClassifyOptions opts_;
  std::vector<CatalogEntry> catalog_;
  std::vector<BallGraph> balls_;
};

/// LP= over the 1-null rho = 1 candidates (0; c), c = 1..2n.
inline ClassificationReport classify_rho1(int n, const ClassifyOptions& opts = {}) {
  Classifier cl(n, opts);
  ClassificationReport rep{"rho1", n, opts.radius, opts.budget, {}};
  const CandidateSet set = enumerate_partial(n, 1, 1);
  rep.verdicts = cl.parallel(set.partials.size(), [&](std::size_t i, std::vector<CandidateVerdict>& out) {
    const PartialMatrix& b = set.partials[i];
    CandidateVerdict v;
    v.candidate = format_partial(b);
    v.rho = 1;
    v.bucket = "rho1";
    v.matrix = extension(b);
    const LpRun eq = cl.run(b, LpMode::exactly);
    v.runs.push_back(eq);
    if (eq.status == SolveStatus::infeasible) v.kind = VerdictKind::excluded;
    else if (eq.status == SolveStatus::timeout) v.kind = VerdictKind::undecided;
    else cl.label(v);
    out.push_back(std::move(v));
  });
  return rep;
}

/// Bucket of a rho >= 2 root block from its three LP results and whether any
/// descendant survived.
inline std::string root_bucket(SolveStatus ge, SolveStatus eq, SolveStatus gt, bool feasible_descendant) {
  if (ge == SolveStatus::infeasible) return "excluded";
  if (ge == SolveStatus::timeout || eq == SolveStatus::timeout || gt == SolveStatus::timeout) return "undecided";
  if (eq == SolveStatus::feasible) {
    if (gt == SolveStatus::infeasible) return "A1";
    return feasible_descendant ? "A3" : "A2";
  }
  return "B";
}

/// Runs LP>= on a root block and, if feasible, the full expansion.
inline std::vector<CandidateVerdict> classify_root(const Classifier& cl, const PartialMatrix& b) {
  std::vector<CandidateVerdict> out;
  CandidateVerdict root;
  root.candidate = format_partial(b);
  root.rho = b.rho();
  const LpRun ge = cl.run(b, LpMode::at_least);
  root.runs.push_back(ge);
  if (ge.status != SolveStatus::feasible) {
    root.bucket = ge.status == SolveStatus::infeasible ? "excluded" : "undecided";
    root.kind = ge.status == SolveStatus::infeasible ? VerdictKind::excluded : VerdictKind::undecided;
    out.push_back(std::move(root));
    return out;
  }
  std::vector<CandidateVerdict> sub;
  const bool feasible_descendant = cl.expand(b, "", sub);
  const LpRun& eq = sub.front().runs[0];
  const LpRun& gt = sub.front().runs[1];
  root.bucket = root_bucket(ge.status, eq.status, gt.status, feasible_descendant);
  root.kind = VerdictKind::feasible_not_excluded;
  root.note = "LP>= feasible, case " + root.bucket;
  out.push_back(std::move(root));
  for (auto& v : sub) {
    v.bucket = out.front().bucket;
    out.push_back(std::move(v));
  }
  return out;
}

/// Routed candidates for 1-null codes in G3: a_1 = 1 lifts from
/// H(3,3); 2-null with c_1 = 1, c_2 = 2 lifts from H(6,2).
inline std::string g3_route(const PartialMatrix& b) {
  if (b.a[1] == 1) return "ternary-route";
  if (b.c[1] == 1 && b.c[2] == 2 && b.a[1] == 0) return "binary-route";
  return "";
}

inline ClassificationReport classify_g3_1null(const ClassifyOptions& opts = {}) {
  const int n = 3;
  Classifier cl(n, opts);
  ClassificationReport rep = classify_rho1(n, opts);
  rep.scope = "g3-1null";

  // Known classifications in the Hamming graphs the routes lead to.
  const std::vector<std::pair<std::string, std::vector<std::string>>> routes = {
      {"ternary-route", {"[0,6|1,1,4|2,2,2|3,3]"}},
      {"binary-route", {"[0,6|1,0,5|2,0,4|3,0,3|4,0,2|5,0,1|6,0]", "[0,6|1,0,5|2,0,4|6,0]"}},
  };

  const CandidateSet set = enumerate_partial(n, 2, 1);
  std::vector<PartialMatrix> roots;
  for (const auto& b : set.partials) {
    const std::string route = g3_route(b);
    if (route.empty()) {
      roots.push_back(b);
      continue;
    }
    CandidateVerdict v;
    v.candidate = format_partial(b);
    v.rho = 2;
    v.bucket = route;
    v.kind = VerdictKind::theorem_backed;
    v.note = route == "ternary-route" ? "a_1 = 1: lifted from a CRC in H(3,3)" : "c_1 = 1, c_2 = 2: lifted from a CRC in H(6,2)";
    rep.verdicts.push_back(std::move(v));
  }
  for (const auto& [route, matrices] : routes)
    for (const auto& s : matrices) {
      CandidateVerdict v;
      v.candidate = s;
      v.matrix = parse_compact(s);
      v.rho = v.matrix->rho();
      v.bucket = route;
      cl.label(v);
      v.note = "known classification of the source graph";
      rep.verdicts.push_back(std::move(v));
    }

  auto tree = cl.parallel(roots.size(), [&](std::size_t i, std::vector<CandidateVerdict>& out) {
    out = classify_root(cl, roots[i]);
  });
  for (auto& v : tree) rep.verdicts.push_back(std::move(v));
  return rep;
}

/// Canonical extensions of the root blocks in a bucket.
inline std::set<std::string> bucket_matrices(const ClassificationReport& rep, const std::string& bucket) {
  std::set<std::string> out;
  for (const auto* v : rep.in_bucket(bucket))
    if (v->matrix && v->rho == 2 && v->kind != VerdictKind::excluded) out.insert(format_compact(canonicalize(*v->matrix)));
  return out;
}

/// Root blocks in a bucket, as partial strings.
inline std::set<std::string> bucket_roots(const ClassificationReport& rep, const std::string& bucket) {
  std::set<std::string> out;
  for (const auto* v : rep.in_bucket(bucket))
    if (!v->matrix && v->rho == 2) out.insert(v->candidate);
  return out;
}

/// 2-null codes in G4 with c_1 = 1 and the given c_2 values.
inline ClassificationReport classify_g4_2null(const std::vector<int>& c2_values, const ClassifyOptions& opts = {}) {
  const int n = 4;
  const int k = 2 * n;
  for (int c2 : c2_values)
    if (c2 < 2 || c2 > k) throw Error(Errc::domain, "c_2 must lie in 2..8");
  Classifier cl(n, opts);
  ClassificationReport rep{"g4-2null", n, opts.radius, opts.budget, {}};
  auto tree = cl.parallel(c2_values.size(), [&](std::size_t i, std::vector<CandidateVerdict>& out) {
    const int c2 = c2_values[i];
    const PartialMatrix b = partial_from_rows(k, {{0, k}, {1, 0}, {0, c2}});
    const std::string bucket = "c2=" + std::to_string(c2);
    if (c2 == 2) {
      out.push_back({format_partial(b), 2, bucket, VerdictKind::theorem_backed, std::nullopt, "",
                     "c_1 = 1, c_2 = 2: lifted from a CRC in H(8,2)", {}});
      for (const std::string kind : {"distance", "distance-anticode"}) {
        CandidateVerdict v{format_partial(b), 0, bucket, VerdictKind::realized, *construct(kind, {{"n", n}}).claimed,
                           "", "known classification of H(8,2)", {}};
        v.rho = v.matrix->rho();
        cl.label(v);
        out.push_back(std::move(v));
      }
      return;
    }
    out = classify_root(cl, b);
    for (auto& v : out) v.bucket = bucket;
    if (c2 == 3 && out.front().kind == VerdictKind::undecided) {
      out.front().kind = VerdictKind::theorem_backed;
      out.front().note = "c_1 = 1, c_2 = 3 is impossible for n != 2";
    }
  });
  rep.verdicts = std::move(tree);
  return rep;
}

/// Summary for one c_2 value: excluded when every leaf is excluded,
/// otherwise the canonical surviving matrices.
struct C2Summary {
  bool excluded = false;
  bool undecided = false;
  std::set<std::string> survivors;
  std::set<std::string> constructions;
  int max_radius_used = 0;
};

inline C2Summary summarize_c2(const ClassificationReport& rep, int c2) {
  C2Summary s;
  bool any_leaf_open = false;
  for (const auto* v : rep.in_bucket("c2=" + std::to_string(c2))) {
    for (const auto& r : v->runs) s.max_radius_used = std::max(s.max_radius_used, r.radius);
    switch (v->kind) {
      case VerdictKind::undecided: s.undecided = true; break;
      case VerdictKind::realized:
        if (v->matrix) s.survivors.insert(format_compact(*v->matrix));
        s.constructions.insert(v->construction);
        any_leaf_open = true;
        break;
      case VerdictKind::feasible_not_excluded:
      case VerdictKind::reduced_to_g1:
      case VerdictKind::theorem_backed:
        if (v->matrix) {
          s.survivors.insert(format_compact(*v->matrix));
          any_leaf_open = true;
        }
        if (v->kind == VerdictKind::reduced_to_g1) any_leaf_open = true;
        break;
      case VerdictKind::excluded: break;
    }
  }
  s.excluded = !any_leaf_open && !s.undecided;
  return s;
}

}  // namespace crcgrid
