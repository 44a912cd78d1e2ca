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

// 0-1 feasibility problems for ball colourings and an exact solver for them.
//
// A colouring of a ball with colours 0..rho (plus an optional slack colour F)
// is encoded with one binary variable per (vertex, colour). Full-degree
// vertices must see exactly the prescribed neighbour counts; boundary
// vertices must not exceed them.

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "crcgrid/codes.hpp"
#include "crcgrid/error.hpp"
#include "crcgrid/lattice.hpp"

namespace crcgrid {

enum class Relation { eq, le, ge };

inline const char* to_string(Relation r) {
  switch (r) {
    case Relation::eq: return "=";
    case Relation::le: return "<=";
    case Relation::ge: return ">=";
  }
  return "?";
}

struct Term {
  int var;
  int coef;
  bool operator==(const Term&) const = default;
};

struct LinearConstraint {
  std::vector<Term> terms;
  Relation rel = Relation::eq;
  int bound = 0;
  bool operator==(const LinearConstraint&) const = default;
};

/// Which of the four ball problems a FeasibilityProblem encodes.
/// `full` uses a complete matrix; the others use a partial matrix plus the
/// slack colour F with sum F >= 0, = 0 or >= 1 respectively.
enum class LpMode { full, at_least, exactly, more_than };

inline std::string to_string(LpMode m) {
  switch (m) {
    case LpMode::full: return "full";
    case LpMode::at_least: return "ge";
    case LpMode::exactly: return "eq";
    case LpMode::more_than: return "gt";
  }
  return "?";
}

inline LpMode parse_mode(const std::string& s) {
  if (s == "full") return LpMode::full;
  if (s == "ge" || s == ">=") return LpMode::at_least;
  if (s == "eq" || s == "=") return LpMode::exactly;
  if (s == "gt" || s == ">") return LpMode::more_than;
  throw Error(Errc::domain, "unknown mode '" + s + "' (expected full, ge, eq or gt)");
}

/// (vertex, colour) <-> variable id; variable = vertex * colours + colour.
struct VarMap {
  int vertices = 0;
  int colors = 0;
  int slack_color = -1;

  int var(int vertex, int color) const { return vertex * colors + color; }
  int vertex_of(int var) const { return var / colors; }
  int color_of(int var) const { return var % colors; }
};

struct FeasibilityProblem {
  int num_vars = 0;
  std::vector<LinearConstraint> constraints;
  std::vector<std::pair<int, bool>> anchors;
  VarMap var_map;
  LpMode mode = LpMode::full;
  std::string label;
};

using Assignment = std::vector<std::uint8_t>;

namespace detail {

inline void add_partition_rows(FeasibilityProblem& p) {
  const VarMap& m = p.var_map;
  for (int v = 0; v < m.vertices; ++v) {
    LinearConstraint row;
    for (int c = 0; c < m.colors; ++c) row.terms.push_back({m.var(v, c), 1});
    row.rel = Relation::eq;
    row.bound = 1;
    p.constraints.push_back(std::move(row));
  }
}

// For each vertex v and each constrained colour j:
//   sum_{u ~ v} x[u][j] - sum_i coef(i, j) x[v][i]  (= on J, <= elsewhere)  0
template <class Coef>
void add_count_rows(FeasibilityProblem& p, const BallGraph& ball, int constrained_colors, int row_colors, Coef coef) {
  const VarMap& m = p.var_map;
  for (int v = 0; v < ball.size(); ++v) {
    for (int j = 0; j < constrained_colors; ++j) {
      LinearConstraint row;
      for (int u : ball.adjacency[static_cast<std::size_t>(v)]) row.terms.push_back({m.var(u, j), 1});
      for (int i = 0; i < row_colors; ++i) {
        const int a = coef(i, j);
        if (a != 0) row.terms.push_back({m.var(v, i), -a});
      }
      row.rel = ball.interior[static_cast<std::size_t>(v)] ? Relation::eq : Relation::le;
      row.bound = 0;
      if (!row.terms.empty()) p.constraints.push_back(std::move(row));
    }
  }
}

}  // namespace detail

/// The ball problem for a complete matrix A.
inline FeasibilityProblem build_lp_full(const BallGraph& ball, const ParamMatrix& a) {
  if (a.valency != ball.valency()) throw Error(Errc::valency_mismatch, "matrix valency differs from 2n");
  for (int i = 0; i <= a.rho(); ++i)
    if (a.row_sum(i) != a.valency) throw Error(Errc::inconsistent_row_sum, "matrix rows must sum to the valency");
  FeasibilityProblem p;
  p.mode = LpMode::full;
  p.var_map = {ball.size(), a.rho() + 1, -1};
  p.num_vars = p.var_map.vertices * p.var_map.colors;
  detail::add_partition_rows(p);
  detail::add_count_rows(p, ball, a.rho() + 1, a.rho() + 1, [&](int i, int j) { return a.entry(i, j); });
  p.anchors.push_back({p.var_map.var(0, 0), true});
  p.label = "full " + format_compact(a) + " n=" + std::to_string(ball.n) + " R=" + std::to_string(ball.radius);
  return p;
}

/// The ball problem for a partial matrix B with slack colour F = rho+1.
inline FeasibilityProblem build_lp_partial(const BallGraph& ball, const PartialMatrix& b, LpMode mode) {
  if (mode == LpMode::full) throw Error(Errc::domain, "partial problems use modes ge, eq or gt");
  if (b.valency != ball.valency()) throw Error(Errc::valency_mismatch, "matrix valency differs from 2n");
  for (int i = 0; i <= b.rho(); ++i)
    if (b.row_sum(i) > b.valency) throw Error(Errc::inconsistent_row_sum, "partial row exceeds the valency");
  const int rho = b.rho();
  FeasibilityProblem p;
  p.mode = mode;
  p.var_map = {ball.size(), rho + 2, rho + 1};
  p.num_vars = p.var_map.vertices * p.var_map.colors;
  detail::add_partition_rows(p);
  detail::add_count_rows(p, ball, rho, rho + 1, [&](int i, int j) { return b.entry(i, j); });
  p.anchors.push_back({p.var_map.var(0, 0), true});

  LinearConstraint slack;
  for (int v = 0; v < ball.size(); ++v) slack.terms.push_back({p.var_map.var(v, rho + 1), 1});
  switch (mode) {
    case LpMode::at_least: slack.rel = Relation::ge; slack.bound = 0; break;
    case LpMode::exactly: slack.rel = Relation::eq; slack.bound = 0; break;
    case LpMode::more_than: slack.rel = Relation::ge; slack.bound = 1; break;
    case LpMode::full: break;
  }
  p.constraints.push_back(std::move(slack));
  p.label = to_string(mode) + " " + format_partial(b) + " n=" + std::to_string(ball.n) + " R=" +
            std::to_string(ball.radius);
  return p;
}

/// Re-checks every constraint and anchor.
inline bool verify_assignment(const FeasibilityProblem& p, const Assignment& x) {
  if (static_cast<int>(x.size()) != p.num_vars) return false;
  for (auto v : x)
    if (v > 1) return false;
  for (const auto& [var, val] : p.anchors)
    if ((x[static_cast<std::size_t>(var)] != 0) != val) return false;
  for (const auto& row : p.constraints) {
    long s = 0;
    for (const Term& t : row.terms) s += static_cast<long>(t.coef) * x[static_cast<std::size_t>(t.var)];
    const bool ok = row.rel == Relation::eq ? s == row.bound : row.rel == Relation::le ? s <= row.bound : s >= row.bound;
    if (!ok) return false;
  }
  return true;
}

struct Budget {
  std::uint64_t node_limit = 0;  // 0: unlimited
  double seconds = 0;            // 0: unlimited
};

struct SolveStats {
  std::uint64_t nodes = 0;
  std::uint64_t propagations = 0;
  std::uint64_t conflicts = 0;
  double elapsed = 0;
};

enum class SolveStatus { feasible, infeasible, timeout };

inline const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::feasible: return "feasible";
    case SolveStatus::infeasible: return "infeasible";
    case SolveStatus::timeout: return "timeout";
  }
  return "?";
}

struct SolveResult {
  SolveStatus status = SolveStatus::timeout;
  Assignment assignment;  // set when feasible
  SolveStats stats;
};

/// Complete depth-first search with bound propagation on linear rows.
///
/// Branching takes the lowest-index unassigned variable and tries 1 before 0;
/// with the (vertex, colour) layout this visits vertices in canonical order
/// and colours in ascending order. No learning, so the search (and its
/// statistics) is a deterministic function of the problem.
class Solver {
 public:
  explicit Solver(const FeasibilityProblem& problem) : problem_(problem) {
    const auto nv = static_cast<std::size_t>(problem.num_vars);
    value_.assign(nv, kUnassigned);
    occurs_.assign(nv, {});
    for (const auto& c : problem.constraints) {
      Row row;
      row.terms = c.terms;
      row.lo = c.rel == Relation::le ? kNegInf : c.bound;
      row.hi = c.rel == Relation::ge ? kPosInf : c.bound;
      for (const Term& t : c.terms) {
        if (t.var < 0 || t.var >= problem.num_vars) throw Error(Errc::domain, "constraint refers to an unknown variable");
        if (t.coef > 0) row.max_act += t.coef;
        else row.min_act += t.coef;
        row.max_abs = std::max(row.max_abs, std::abs(t.coef));
      }
      const int id = static_cast<int>(rows_.size());
      for (const Term& t : c.terms) occurs_[static_cast<std::size_t>(t.var)].push_back({id, t.coef});
      rows_.push_back(std::move(row));
    }
    queued_.assign(rows_.size(), 0);
  }

  SolveResult solve(const Budget& budget = {}) {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    SolveResult result;
    auto finish = [&](SolveStatus s) {
      result.status = s;
      result.stats = stats_;
      result.stats.elapsed = std::chrono::duration<double>(clock::now() - start).count();
      if (s == SolveStatus::feasible) {
        result.assignment.resize(value_.size());
        for (std::size_t i = 0; i < value_.size(); ++i) result.assignment[i] = static_cast<std::uint8_t>(value_[i]);
      }
      return result;
    };

    bool ok = true;
    for (const auto& [var, val] : problem_.anchors) {
      const auto k = static_cast<std::size_t>(var);
      if (value_[k] == kUnassigned) ok = assign(var, val ? 1 : 0) && ok;
      else if (value_[k] != (val ? 1 : 0)) ok = false;
      if (!ok) break;
    }
    if (ok)
      for (std::size_t r = 0; r < rows_.size(); ++r) enqueue(static_cast<int>(r));
    if (!ok || !propagate()) return finish(SolveStatus::infeasible);

    struct Decision {
      int var;
      int val;
      std::size_t trail_size;
    };
    std::vector<Decision> stack;
    std::size_t cursor = 0;

    for (;;) {
      while (cursor < value_.size() && value_[cursor] != kUnassigned) ++cursor;
      if (cursor == value_.size()) return finish(SolveStatus::feasible);

      if (out_of_budget(budget, start)) return finish(SolveStatus::timeout);
      ++stats_.nodes;
      const int var = static_cast<int>(cursor);
      stack.push_back({var, 1, trail_.size()});
      if (assign(var, 1) && propagate()) continue;

      // Conflict: undo to the deepest decision that still has value 0 to try.
      for (;;) {
        ++stats_.conflicts;
        if (stack.empty()) return finish(SolveStatus::infeasible);
        const Decision d = stack.back();
        stack.pop_back();
        undo_to(d.trail_size, cursor);
        if (d.val == 0) continue;
        ++stats_.nodes;
        stack.push_back({d.var, 0, trail_.size()});
        if (assign(d.var, 0) && propagate()) break;
      }
    }
  }

 private:
  static constexpr std::int8_t kUnassigned = -1;
  static constexpr int kNegInf = std::numeric_limits<int>::min() / 4;
  static constexpr int kPosInf = std::numeric_limits<int>::max() / 4;

  struct Row {
    std::vector<Term> terms;
    int lo = 0, hi = 0;
    int min_act = 0, max_act = 0;
    int max_abs = 0;
  };
  struct Occurrence {
    int row;
    int coef;
  };

  bool out_of_budget(const Budget& b, std::chrono::steady_clock::time_point start) const {
    if (b.node_limit != 0 && stats_.nodes >= b.node_limit) return true;
    if (b.seconds > 0 && (stats_.nodes & 1023) == 0)
      return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() > b.seconds;
    return false;
  }

  void enqueue(int r) {
    if (queued_[static_cast<std::size_t>(r)]) return;
    queued_[static_cast<std::size_t>(r)] = 1;
    queue_.push_back(r);
  }

  // Fixes a variable and updates row activities. Returns false on a row
  // violation; the assignment stays on the trail either way.
  bool assign(int var, int val) {
    value_[static_cast<std::size_t>(var)] = static_cast<std::int8_t>(val);
    trail_.push_back(var);
    bool ok = true;
    for (const Occurrence& o : occurs_[static_cast<std::size_t>(var)]) {
      Row& row = rows_[static_cast<std::size_t>(o.row)];
      shift(row, o.coef, val, +1);
      if (row.min_act > row.hi || row.max_act < row.lo) ok = false;
      enqueue(o.row);
    }
    return ok;
  }

  // Activity bounds move when a variable with coefficient `coef` is fixed to
  // `val` (dir = +1) or released (dir = -1).
  static void shift(Row& row, int coef, int val, int dir) {
    if (coef > 0) {
      if (val == 0) row.max_act -= dir * coef;
      else row.min_act += dir * coef;
    } else {
      if (val == 0) row.min_act -= dir * coef;
      else row.max_act += dir * coef;
    }
  }

  void undo_to(std::size_t size, std::size_t& cursor) {
    while (trail_.size() > size) {
      const int var = trail_.back();
      trail_.pop_back();
      const int val = value_[static_cast<std::size_t>(var)];
      for (const Occurrence& o : occurs_[static_cast<std::size_t>(var)]) shift(rows_[static_cast<std::size_t>(o.row)], o.coef, val, -1);
      value_[static_cast<std::size_t>(var)] = kUnassigned;
      cursor = std::min(cursor, static_cast<std::size_t>(var));
    }
    for (int r : queue_) queued_[static_cast<std::size_t>(r)] = 0;
    queue_.clear();
  }

  bool propagate() {
    while (!queue_.empty()) {
      const int r = queue_.back();
      queue_.pop_back();
      queued_[static_cast<std::size_t>(r)] = 0;
      const Row& row = rows_[static_cast<std::size_t>(r)];
      if (row.min_act > row.hi || row.max_act < row.lo) return clear_queue();
      if (row.max_abs <= std::min(row.hi - row.min_act, row.max_act - row.lo)) continue;
      for (const Term& t : row.terms) {
        if (value_[static_cast<std::size_t>(t.var)] != kUnassigned) continue;
        const int mag = std::abs(t.coef);
        int forced = -1;
        if (mag > row.hi - row.min_act) forced = t.coef > 0 ? 0 : 1;
        else if (mag > row.max_act - row.lo) forced = t.coef > 0 ? 1 : 0;
        if (forced < 0) continue;
        ++stats_.propagations;
        if (!assign(t.var, forced)) return clear_queue();
      }
    }
    return true;
  }

  bool clear_queue() {
    for (int r : queue_) queued_[static_cast<std::size_t>(r)] = 0;
    queue_.clear();
    return false;
  }

  const FeasibilityProblem& problem_;
  std::vector<Row> rows_;
  std::vector<std::vector<Occurrence>> occurs_;
  std::vector<std::int8_t> value_;
  std::vector<int> trail_;
  std::vector<int> queue_;
  std::vector<char> queued_;
  SolveStats stats_;
};

inline SolveResult solve(const FeasibilityProblem& problem, const Budget& budget = {}) {
  return Solver(problem).solve(budget);
}

/// Exhaustive enumeration; only for problems with at most 24 variables.
inline SolveResult brute_force(const FeasibilityProblem& p) {
  if (p.num_vars > 24) throw Error(Errc::size_guard, "brute force is limited to 24 variables");
  SolveResult r;
  const auto start = std::chrono::steady_clock::now();
  const std::uint32_t total = 1u << p.num_vars;
  Assignment x(static_cast<std::size_t>(p.num_vars));
  r.status = SolveStatus::infeasible;
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    for (int i = 0; i < p.num_vars; ++i) x[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
    ++r.stats.nodes;
    if (verify_assignment(p, x)) {
      r.status = SolveStatus::feasible;
      r.assignment = x;
      break;
    }
  }
  r.stats.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

/// Colour of each vertex in a (vertex, colour) assignment.
inline std::vector<int> coloring_of(const FeasibilityProblem& p, const Assignment& x) {
  const VarMap& m = p.var_map;
  std::vector<int> colors(static_cast<std::size_t>(m.vertices), -1);
  for (int v = 0; v < m.vertices; ++v)
    for (int c = 0; c < m.colors; ++c)
      if (x[static_cast<std::size_t>(m.var(v, c))]) colors[static_cast<std::size_t>(v)] = c;
  return colors;
}

/// Restricts an assignment on a larger ball to the vertices of `small`.
inline Assignment restrict_assignment(const Assignment& x, const VarMap& big_map, const BallGraph& big,
                                      const BallGraph& small) {
  Assignment out(static_cast<std::size_t>(small.size() * big_map.colors));
  for (int v = 0; v < small.size(); ++v) {
    const int u = big.index_of(small.vertices[static_cast<std::size_t>(v)]);
    if (u < 0) throw Error(Errc::domain, "small ball is not contained in the big one");
    for (int c = 0; c < big_map.colors; ++c)
      out[static_cast<std::size_t>(v * big_map.colors + c)] = x[static_cast<std::size_t>(big_map.var(u, c))];
  }
  return out;
}

/// Linear pseudo-Boolean text: one constraint per line, variables x1..xN.
inline std::string export_opb(const FeasibilityProblem& p) {
  std::ostringstream os;
  os << "* #variable= " << p.num_vars << " #constraint= " << p.constraints.size() + p.anchors.size() << "\n";
  if (!p.label.empty()) os << "* " << p.label << "\n";
  auto line = [&](const std::vector<Term>& terms, Relation rel, int bound) {
    for (const Term& t : terms) os << (t.coef >= 0 ? "+" : "") << t.coef << " x" << t.var + 1 << ' ';
    os << to_string(rel) << ' ' << bound << " ;\n";
  };
  for (const auto& [var, val] : p.anchors) line({{var, 1}}, Relation::eq, val ? 1 : 0);
  for (const auto& c : p.constraints) line(c.terms, c.rel, c.bound);
  return os.str();
}

/// Reads the subset of OPB that export_opb writes. Anchors come back as
/// ordinary single-variable equalities.
inline FeasibilityProblem parse_opb(const std::string& text) {
  FeasibilityProblem p;
  std::istringstream in(text);
  std::string line;
  int max_var = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '*') {
      const auto pos = line.find("#variable=");
      if (pos != std::string::npos) max_var = std::max(max_var, std::stoi(line.substr(pos + 10)));
      continue;
    }
    std::istringstream tok(line);
    LinearConstraint c;
    std::string s;
    bool closed = false;
    while (tok >> s) {
      if (s == "=" || s == ">=" || s == "<=") {
        c.rel = s == "=" ? Relation::eq : s == ">=" ? Relation::ge : Relation::le;
        if (!(tok >> c.bound)) throw Error(Errc::io, "missing bound in OPB line");
        std::string end;
        if (!(tok >> end) || end != ";") throw Error(Errc::io, "OPB line must end with ';'");
        closed = true;
        break;
      }
      std::string var;
      if (!(tok >> var) || var.size() < 2 || var[0] != 'x') throw Error(Errc::io, "bad OPB term near '" + s + "'");
      const int id = std::stoi(var.substr(1));
      max_var = std::max(max_var, id);
      c.terms.push_back({id - 1, std::stoi(s)});
    }
    if (!closed) throw Error(Errc::io, "unterminated OPB line");
    p.constraints.push_back(std::move(c));
  }
  p.num_vars = max_var;
  p.var_map = {max_var, 1, -1};
  return p;
}

inline std::string stats_line(const SolveResult& r) {
  std::ostringstream os;
  os << to_string(r.status) << " nodes=" << r.stats.nodes << " propagations=" << r.stats.propagations
     << " conflicts=" << r.stats.conflicts << " elapsed=" << r.stats.elapsed << "s";
  return os.str();
}

}  // namespace crcgrid
