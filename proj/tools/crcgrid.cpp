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

// crcgrid command-line tool.
//
// Exit codes: 0 ok, 1 usage or input error, 2 contradiction (claimed and
// verified matrices differ, or the code is not completely regular),
// 3 a solver budget ran out.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "crcgrid/classify.hpp"
#include "crcgrid/codes.hpp"
#include "crcgrid/constructions.hpp"
#include "crcgrid/feasibility.hpp"
#include "crcgrid/lattice.hpp"

namespace {

using namespace crcgrid;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kContradiction = 2;
constexpr int kTimeout = 3;

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(Errc::io, "cannot write " + path);
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(Errc::io, "cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

struct ProblemArgs {
  int n = 3;
  int radius = 6;
  std::string matrix;
  std::string partial;
  std::string mode = "ge";
};

void add_problem_options(CLI::App* cmd, ProblemArgs& a) {
  cmd->add_option("--n", a.n, "grid dimension")->check(CLI::Range(1, 8));
  cmd->add_option("--radius", a.radius, "ball radius")->check(CLI::Range(1, 64));
  cmd->add_option("--matrix", a.matrix, "full matrix, e.g. \"[0,6|1,5]\"");
  cmd->add_option("--partial", a.partial, "partial matrix, e.g. \"[0,6|2,0|0,3]\"");
  cmd->add_option("--mode", a.mode, "ge, eq or gt (partial matrices)");
}

FeasibilityProblem build_problem(const ProblemArgs& a) {
  if (a.matrix.empty() == a.partial.empty()) throw Error(Errc::domain, "give exactly one of --matrix and --partial");
  const BallGraph ball = ball_graph(a.n, a.radius);
  if (!a.matrix.empty()) return build_lp_full(ball, parse_compact(a.matrix, 2 * a.n));
  return build_lp_partial(ball, parse_partial(a.partial, 2 * a.n), parse_mode(a.mode));
}

struct BudgetArgs {
  double seconds = -1;
  std::uint64_t nodes = 0;
};

void add_budget_options(CLI::App* cmd, BudgetArgs& b) {
  cmd->add_option("--seconds", b.seconds, "wall-clock limit per solve (default: CRCGRID_BUDGET or none)");
  cmd->add_option("--nodes", b.nodes, "search node limit per solve (0: none)");
}

Budget to_budget(const BudgetArgs& b) {
  Budget out = default_budget();
  if (b.seconds >= 0) out.seconds = b.seconds;
  out.node_limit = b.nodes;
  return out;
}

json construct_params(int n, int t, int q, int k, const std::string& source) {
  json p = json::object();
  if (n > 0) p["n"] = n;
  if (t > 0) p["t"] = t;
  if (q > 0) p["q"] = q;
  if (k > 0) p["k"] = k;
  if (!source.empty()) p["source"] = source;
  return p;
}

std::vector<std::string> matrix_diff(const ParamMatrix& want, const ParamMatrix& got) {
  std::vector<std::string> out;
  out.push_back("expected " + format_compact(want));
  out.push_back("verified " + format_compact(got));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Completely regular codes in the grid Z^n"};
  app.require_subcommand(1);

  // construct
  std::string kind, source, out_path;
  int cn = 0, ct = 0, cq = 0, ck = 0;
  auto* construct_cmd = app.add_subcommand("construct", "build a catalog code and verify its matrix");
  construct_cmd->add_option("kind", kind, "perfect, halved-perfect, diameter, distance, distance-anticode, all-ones, "
                                          "even-weight, line, multiply, ternary, binary")
      ->required();
  construct_cmd->add_option("--n", cn, "dimension");
  construct_cmd->add_option("--t", ct, "number of cosets (diameter)");
  construct_cmd->add_option("--q", cq, "period (line)");
  construct_cmd->add_option("--k", ck, "multiplier (multiply)");
  construct_cmd->add_option("--source", source, "source code (multiply, ternary, binary)");
  construct_cmd->add_option("--out", out_path, "write the code JSON here");
  bool construct_json = false;
  construct_cmd->add_flag("--json", construct_json, "print the full result as JSON");

  // verify
  std::string code_path, expected;
  auto* verify_cmd = app.add_subcommand("verify", "verify a periodic code file");
  verify_cmd->add_option("code", code_path, "code JSON {n, periods, residues}")->required();
  verify_cmd->add_option("--expected", expected, "expected compact matrix");

  // solve / export-opb
  ProblemArgs solve_args, opb_args;
  BudgetArgs solve_budget;
  std::string solve_out;
  auto* solve_cmd = app.add_subcommand("solve", "solve a ball feasibility problem");
  add_problem_options(solve_cmd, solve_args);
  add_budget_options(solve_cmd, solve_budget);
  solve_cmd->add_option("--coloring", solve_out, "write the colouring of a feasible result as JSON");

  std::string opb_out;
  auto* opb_cmd = app.add_subcommand("export-opb", "write a ball problem in OPB format");
  add_problem_options(opb_cmd, opb_args);
  opb_cmd->add_option("--out", opb_out, "output path (default stdout)");

  // classify
  std::string scope, format = "table", report_out;
  int cl_n = 3, cl_radius = 6, jobs = 1;
  std::vector<int> c2_values = {2, 3, 4, 5, 6, 7, 8};
  BudgetArgs cl_budget;
  auto* classify_cmd = app.add_subcommand("classify", "run a classification driver");
  classify_cmd->add_option("scope", scope, "rho1, g3-1null or g4-2null")
      ->required()
      ->check(CLI::IsMember({"rho1", "g3-1null", "g4-2null"}));
  classify_cmd->add_option("--n", cl_n, "dimension (rho1)")->check(CLI::Range(1, 4));
  classify_cmd->add_option("--radius", cl_radius, "ball radius")->check(CLI::Range(2, 12));
  classify_cmd->add_option("--c2", c2_values, "c_2 values (g4-2null)");
  classify_cmd->add_option("--jobs", jobs, "parallel solves")->check(CLI::PositiveNumber);
  classify_cmd->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
  classify_cmd->add_option("--out", report_out, "output path (default stdout)");
  add_budget_options(classify_cmd, cl_budget);

  // ball
  int bn = 3, br = 6;
  bool ball_full = false;
  auto* ball_cmd = app.add_subcommand("ball", "describe a ball subgraph");
  ball_cmd->add_option("--n", bn, "dimension")->check(CLI::Range(1, 8));
  ball_cmd->add_option("--radius", br, "radius")->check(CLI::Range(0, 64));
  ball_cmd->add_flag("--graph", ball_full, "print vertices and adjacency as JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*construct_cmd) {
      const Construction c = construct(kind, construct_params(cn, ct, cq, ck, source));
      const Verdict v = verify_periodic(c.code, c.claimed);
      if (!out_path.empty()) write_output(out_path, code_json(c.code).dump(2));
      json j{{"kind", c.kind},
             {"params", c.params},
             {"description", c.description},
             {"claimed", c.claimed ? format_compact(*c.claimed) : ""},
             {"verdict", verdict_json(v)}};
      if (out_path.empty()) j["code"] = code_json(c.code);
      if (construct_json) std::cout << j.dump(2) << "\n";
      else std::cout << (v.matrix ? format_compact(*v.matrix) : std::string("not completely regular")) << "\n";
      if (!v.is_crc || (c.claimed && !v.matches_expected.value_or(false))) {
        if (c.claimed && v.matrix)
          for (const auto& line : matrix_diff(*c.claimed, *v.matrix)) std::cerr << line << "\n";
        return kContradiction;
      }
      return kOk;
    }

    if (*verify_cmd) {
      const PeriodicCode code = code_from_json(json::parse(read_file(code_path)));
      std::optional<ParamMatrix> want;
      if (!expected.empty()) want = parse_compact(expected);
      const Verdict v = verify_periodic(code, want);
      std::cout << verdict_json(v).dump(2) << "\n";
      if (!v.is_crc) return kContradiction;
      if (want && !v.matches_expected.value_or(false)) {
        for (const auto& line : matrix_diff(*want, *v.matrix)) std::cerr << line << "\n";
        return kContradiction;
      }
      return kOk;
    }

    if (*solve_cmd) {
      const FeasibilityProblem p = build_problem(solve_args);
      const SolveResult r = solve(p, to_budget(solve_budget));
      json j{{"problem", p.label},
             {"variables", p.num_vars},
             {"constraints", p.constraints.size()},
             {"status", to_string(r.status)},
             {"nodes", r.stats.nodes},
             {"propagations", r.stats.propagations},
             {"conflicts", r.stats.conflicts},
             {"elapsed", r.stats.elapsed},
             {"problem_hash", problem_hash(p)}};
      if (r.status == SolveStatus::feasible) j["verified"] = verify_assignment(p, r.assignment);
      std::cout << j.dump(2) << "\n";
      if (!solve_out.empty() && r.status == SolveStatus::feasible) {
        const BallGraph ball = ball_graph(solve_args.n, solve_args.radius);
        const auto colors = coloring_of(p, r.assignment);
        json col = json::array();
        for (int v = 0; v < ball.size(); ++v)
          col.push_back({{"word", ball.vertices[static_cast<std::size_t>(v)]}, {"color", colors[static_cast<std::size_t>(v)]}});
        write_output(solve_out, col.dump());
      }
      return r.status == SolveStatus::timeout ? kTimeout : kOk;
    }

    if (*opb_cmd) {
      write_output(opb_out, export_opb(build_problem(opb_args)));
      return kOk;
    }

    if (*classify_cmd) {
      ClassifyOptions opts;
      opts.radius = cl_radius;
      opts.budget = to_budget(cl_budget);
      opts.jobs = jobs;
      ClassificationReport rep;
      if (scope == "rho1") rep = classify_rho1(cl_n, opts);
      else if (scope == "g3-1null") rep = classify_g3_1null(opts);
      else rep = classify_g4_2null(c2_values, opts);
      write_output(report_out, format == "json" ? report_json(rep).dump(2) : report_table(rep));
      return rep.has_timeout() ? kTimeout : kOk;
    }

    if (*ball_cmd) {
      const BallGraph b = ball_graph(bn, br);
      if (ball_full) {
        std::cout << graph_json(b).dump() << "\n";
        return kOk;
      }
      int interior = 0;
      for (char c : b.interior) interior += c ? 1 : 0;
      std::cout << json{{"n", bn}, {"radius", br}, {"vertices", b.size()}, {"interior", interior},
                        {"boundary", b.size() - interior}, {"edges", b.edge_count()}}
                       .dump(2)
                << "\n";
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kOk;
}
