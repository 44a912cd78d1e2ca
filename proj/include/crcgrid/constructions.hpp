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

// Generators for periodic completely regular codes in Z^n, each paired with
// the parameter matrix it is known to have.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "crcgrid/codes.hpp"
#include "crcgrid/error.hpp"
#include "crcgrid/lattice.hpp"
#include "crcgrid/source_codes.hpp"

namespace crcgrid {

/// Lift of a code in G_{n,q}: x belongs iff x mod q does.
inline PeriodicCode from_quotient(int n, int q, const std::vector<Word>& residues) {
  if (q < 3) throw Error(Errc::domain, "quotient lift needs q >= 3");
  for (const Word& r : residues)
    if (r.dim() != n) throw Error(Errc::residue_out_of_range, "residue has wrong length");
  return PeriodicCode(std::vector<int>(static_cast<std::size_t>(n), q), residues);
}

/// H(n,3) coincides with G_{n,3}.
inline PeriodicCode from_ternary_hamming(int n, const std::vector<Word>& code) { return from_quotient(n, 3, code); }

/// Lift of a binary code of length 2n through the Gray map G_{n,4} ~ H(2n,2).
inline PeriodicCode from_binary_hamming(int n, const std::vector<std::vector<int>>& code) {
  if (code.empty()) throw Error(Errc::domain, "binary source code is empty");
  std::vector<Word> residues;
  for (const auto& bits : code) {
    if (static_cast<int>(bits.size()) != 2 * n) throw Error(Errc::residue_out_of_range, "binary word must have length 2n");
    residues.emplace_back(gray_inverse(bits));
  }
  return PeriodicCode(std::vector<int>(static_cast<std::size_t>(n), 4), residues);
}

/// Lift of a q-periodic set of the triangular grid through
/// (x1, x2, x3) -> (x1 - x2, x3 - x2).
inline PeriodicCode from_triangular(int q, const std::vector<Word>& residues) {
  const PeriodicCode plane(std::vector<int>{q, q}, residues);
  return PeriodicCode::from_predicate({q, q, q}, [&](const Word& x) { return plane.contains(triangular_covering(x)); });
}

/// x in Z^{kn} belongs iff its vector of k-block sums belongs to `code`.
inline PeriodicCode multiply(const PeriodicCode& code, int k) {
  if (k < 1) throw Error(Errc::domain, "multiplier must be >= 1");
  const int n = code.dim();
  std::vector<int> periods;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < k; ++i) periods.push_back(code.periods()[static_cast<std::size_t>(j)]);
  return PeriodicCode::from_predicate(std::move(periods), [&](const Word& x) {
    Word s = Word::zero(n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < k; ++i) s[j] += x[j * k + i];
    return code.contains(s);
  });
}

/// Same block-sum lift inside H(m,q) -> H(km,q).
inline std::vector<std::vector<int>> hamming_multiply(const std::vector<std::vector<int>>& code, int q, int k) {
  if (code.empty()) return {};
  const int m = static_cast<int>(code.front().size());
  std::vector<int> periods(static_cast<std::size_t>(m * k), q);
  std::vector<std::vector<int>> out;
  for (const Word& x : detail::box_words(periods)) {
    std::vector<int> s(static_cast<std::size_t>(m), 0);
    for (int j = 0; j < m; ++j)
      for (int i = 0; i < k; ++i) s[static_cast<std::size_t>(j)] = (s[static_cast<std::size_t>(j)] + x[j * k + i]) % q;
    if (std::find(code.begin(), code.end(), s) != code.end()) out.push_back(x.coords());
  }
  return out;
}

/// mZ on the line.
inline PeriodicCode line_code(int m) {
  return PeriodicCode(std::vector<int>{m}, std::vector<Word>{Word{0}});
}

/// {x : sum i*x_i = 0 mod 2n+1}.
inline PeriodicCode golomb_welch_perfect(int n) {
  if (n < 1) throw Error(Errc::domain, "n must be >= 1");
  const int m = 2 * n + 1;
  return PeriodicCode::from_predicate(std::vector<int>(static_cast<std::size_t>(n), m), [=](const Word& x) {
    long s = 0;
    for (int i = 0; i < n; ++i) s += static_cast<long>(i + 1) * x[i];
    return s % m == 0;
  });
}

/// Even-weight words of the Golomb-Welch code, on periods 2(2n+1).
inline PeriodicCode halved_perfect(int n) {
  if (n < 1) throw Error(Errc::domain, "n must be >= 1");
  const int m = 2 * n + 1;
  return PeriodicCode::from_predicate(std::vector<int>(static_cast<std::size_t>(n), 2 * m), [=](const Word& x) {
    long s = 0, parity = 0;
    for (int i = 0; i < n; ++i) {
      s += static_cast<long>(i + 1) * x[i];
      parity += x[i];
    }
    return s % m == 0 && parity % 2 == 0;
  });
}

inline PeriodicCode even_weight_code(int n) {
  if (n < 1) throw Error(Errc::domain, "n must be >= 1");
  return PeriodicCode::from_predicate(std::vector<int>(static_cast<std::size_t>(n), 2), [=](const Word& x) {
    int s = 0;
    for (int i = 0; i < n; ++i) s += x[i];
    return s % 2 == 0;
  });
}

/// Weight vectors w with {x : w.x = 0 mod 4n} diameter perfect. Found by
/// exhaustive search over w = (1, w_2, ..., w_n) and checked by
/// `is_diameter_perfect`.
inline const std::map<int, std::vector<int>>& diameter_weight_table() {
  static const std::map<int, std::vector<int>> table{
      {1, {1}}, {2, {1, 3}}, {3, {1, 3, 5}}, {4, {1, 3, 5, 7}}};
  return table;
}

namespace detail {

inline PeriodicCode weighted_cosets(int n, int t) {
  const auto& table = diameter_weight_table();
  const auto it = table.find(n);
  if (it == table.end()) throw Error(Errc::no_generator, "no diameter lattice configured for n = " + std::to_string(n));
  const std::vector<int>& w = it->second;
  const int m = 4 * n;
  return PeriodicCode::from_predicate(std::vector<int>(static_cast<std::size_t>(n), m), [&](const Word& x) {
    long s = 0;
    for (int i = 0; i < n; ++i) s += static_cast<long>(w[static_cast<std::size_t>(i)]) * x[i];
    const long r = ((s % m) + m) % m;
    // All weights are odd, so w.x has the parity of the weight of x and the
    // even cosets are w.x = 0, 2, ..., 4n-2.
    return r % 2 == 0 && r / 2 < t;
  });
}

}  // namespace detail

/// Index-4n sublattice of minimum distance 4 whose adjacent-ball unions each
/// meet it once.
inline PeriodicCode diameter_lattice(int n) { return detail::weighted_cosets(n, 1); }

/// Union of t disjoint even-weight cosets of the diameter lattice.
inline PeriodicCode diameter_union(int n, int t) {
  if (t < 1) throw Error(Errc::domain, "t must be >= 1");
  if (t > 2 * n) throw Error(Errc::not_enough_cosets, "only 2n even cosets exist");
  return detail::weighted_cosets(n, t);
}

/// {x : x_i = 0 mod 4 for all i}.
inline PeriodicCode distance_code(int n) {
  if (n < 1) throw Error(Errc::domain, "n must be >= 1");
  return PeriodicCode(std::vector<int>(static_cast<std::size_t>(n), 4), {Word::zero(n)});
}

/// The distance code together with its opposite (all coordinates = 2 mod 4).
inline PeriodicCode distance_anticode(int n) {
  if (n < 1) throw Error(Errc::domain, "n must be >= 1");
  return PeriodicCode(std::vector<int>(static_cast<std::size_t>(n), 4),
                      {Word::zero(n), Word(std::vector<int>(static_cast<std::size_t>(n), 2))});
}

/// {x : x_i = 0 mod 4 for i < n, x_n mod 4 in {0, 3}}.
inline PeriodicCode all_ones_code(int n) {
  if (n < 1) throw Error(Errc::domain, "n must be >= 1");
  Word tail = Word::zero(n);
  tail[n - 1] = 3;
  return PeriodicCode(std::vector<int>(static_cast<std::size_t>(n), 4), {Word::zero(n), tail});
}

// Claimed parameter matrices.

inline ParamMatrix perfect_matrix(int n) { return make_matrix(2 * n, {0, 2 * n - 1}, {2 * n}, {1}); }

inline ParamMatrix halved_perfect_matrix(int n) {
  const int k = 2 * n;
  return make_matrix(k, {0, 0, 0, 0}, {k, k - 1, 1}, {1, k - 1, k});
}

inline ParamMatrix even_weight_matrix(int n) { return make_matrix(2 * n, {0, 0}, {2 * n}, {2 * n}); }

inline ParamMatrix diameter_union_matrix(int n, int t) {
  const int k = 2 * n;
  if (t == k) return even_weight_matrix(n);
  return make_matrix(k, {0, 0, 0}, {k, k - t}, {t, k});
}

inline ParamMatrix distance_matrix(int n) {
  const int k = 2 * n;
  std::vector<int> a(static_cast<std::size_t>(k + 1), 0), b, c;
  for (int i = 0; i < k; ++i) b.push_back(k - i);
  for (int i = 1; i <= k; ++i) c.push_back(i);
  return make_matrix(k, std::move(a), std::move(b), std::move(c));
}

inline ParamMatrix distance_anticode_matrix(int n) {
  const int k = 2 * n;
  std::vector<int> a(static_cast<std::size_t>(n + 1), 0), b, c;
  for (int i = 0; i < n; ++i) b.push_back(k - i);
  for (int i = 1; i < n; ++i) c.push_back(i);
  c.push_back(k);
  return make_matrix(k, std::move(a), std::move(b), std::move(c));
}

inline ParamMatrix all_ones_matrix(int n) {
  const int rho = 2 * n - 1;
  std::vector<int> a(static_cast<std::size_t>(rho + 1), 1), b, c;
  for (int i = 0; i < rho; ++i) b.push_back(rho - i);
  for (int i = 1; i <= rho; ++i) c.push_back(i);
  return make_matrix(2 * n, std::move(a), std::move(b), std::move(c));
}

/// Matrix of mZ on the line, m >= 2.
inline ParamMatrix line_matrix(int m) {
  if (m < 2) throw Error(Errc::domain, "mZ is a proper code only for m >= 2");
  const int rho = m / 2;
  std::vector<int> a(static_cast<std::size_t>(rho + 1), 0), b(static_cast<std::size_t>(rho), 1),
      c(static_cast<std::size_t>(rho), 1);
  b[0] = 2;
  if (m % 2 == 0) c.back() = 2;
  else a.back() = 1;
  return make_matrix(2, std::move(a), std::move(b), std::move(c));
}

/// A generated code with the matrix it is expected to have.
struct Construction {
  std::string kind;
  nlohmann::json params;
  PeriodicCode code;
  std::optional<ParamMatrix> claimed;
  std::string description;
};

namespace detail {

inline int param_int(const nlohmann::json& p, const char* key, std::optional<int> fallback = std::nullopt) {
  if (p.contains(key)) return p.at(key).get<int>();
  if (fallback) return *fallback;
  throw Error(Errc::domain, std::string("missing parameter '") + key + "'");
}

}  // namespace detail

inline Construction construct_source(const std::string& name);

/// Catalog lookup by kind name. Recognized kinds: perfect, halved-perfect,
/// diameter (t), distance, distance-anticode, all-ones, even-weight, line (q),
/// multiply (k, source), ternary (source), binary (source).
inline Construction construct(const std::string& kind, const nlohmann::json& params) {
  Construction out;
  out.kind = kind;
  out.params = params;
  if (kind == "perfect") {
    const int n = detail::param_int(params, "n");
    out.code = golomb_welch_perfect(n);
    out.claimed = perfect_matrix(n);
    out.description = "Golomb-Welch perfect code";
  } else if (kind == "halved-perfect") {
    const int n = detail::param_int(params, "n");
    out.code = halved_perfect(n);
    out.claimed = halved_perfect_matrix(n);
    out.description = "even-weight subcode of a perfect code";
  } else if (kind == "diameter") {
    const int n = detail::param_int(params, "n");
    const int t = detail::param_int(params, "t", 1);
    out.code = diameter_union(n, t);
    out.claimed = diameter_union_matrix(n, t);
    out.description = "union of " + std::to_string(t) + " even cosets of a diameter perfect lattice";
  } else if (kind == "distance") {
    const int n = detail::param_int(params, "n");
    out.code = distance_code(n);
    out.claimed = distance_matrix(n);
    out.description = "all coordinates 0 mod 4";
  } else if (kind == "distance-anticode") {
    const int n = detail::param_int(params, "n");
    out.code = distance_anticode(n);
    out.claimed = distance_anticode_matrix(n);
    out.description = "all coordinates 0 mod 4 or all 2 mod 4";
  } else if (kind == "all-ones") {
    const int n = detail::param_int(params, "n");
    out.code = all_ones_code(n);
    out.claimed = all_ones_matrix(n);
    out.description = "all-ones code from a doubled singleton";
  } else if (kind == "even-weight") {
    const int n = detail::param_int(params, "n");
    out.code = even_weight_code(n);
    out.claimed = even_weight_matrix(n);
    out.description = "even-weight words";
  } else if (kind == "line") {
    const int q = detail::param_int(params, "q");
    out.code = line_code(q);
    if (q >= 2) out.claimed = line_matrix(q);
    out.description = std::to_string(q) + "Z on the line";
  } else if (kind == "multiply") {
    const int k = detail::param_int(params, "k");
    const Construction src = construct_source(params.value("source", std::string("g1-perfect")));
    out.code = multiply(src.code, k);
    if (src.claimed) out.claimed = scaled(*src.claimed, k);
    out.description = std::to_string(k) + "-fold block-sum lift of " + src.description;
  } else if (kind == "ternary") {
    const auto& entry = ternary_source(params.value("source", std::string("h33-singleton")));
    out.code = from_ternary_hamming(entry.n, entry.words);
    out.claimed = parse_compact(entry.matrix);
    out.description = "lift of " + entry.description;
  } else if (kind == "binary") {
    const auto& entry = binary_source(params.value("source", std::string("h62-singleton")));
    out.code = from_binary_hamming(entry.n, entry.words);
    out.claimed = parse_compact(entry.matrix);
    out.description = "Gray lift of " + entry.description;
  } else {
    throw Error(Errc::unknown_kind, "unknown construction '" + kind + "'");
  }
  return out;
}

/// Source names for `multiply`: "g1-perfect" (3Z), "g1-<m>" (mZ) or
/// "<kind>:<n>" for any catalog kind taking only n.
inline Construction construct_source(const std::string& name) {
  if (name == "g1-perfect") return construct("line", {{"q", 3}});
  if (name.rfind("g1-", 0) == 0) return construct("line", {{"q", std::stoi(name.substr(3))}});
  const auto colon = name.find(':');
  if (colon != std::string::npos) return construct(name.substr(0, colon), {{"n", std::stoi(name.substr(colon + 1))}});
  throw Error(Errc::unknown_kind, "unknown multiply source '" + name + "'");
}

/// Exhaustive check on the quotient torus that every union of two adjacent
/// radius-1 balls meets the code in exactly one word.
inline bool is_diameter_perfect(const PeriodicCode& code) {
  const auto periods = detail::inflate(code.periods(), 3);
  const auto torus = torus_graph(periods);
  std::vector<char> in(static_cast<std::size_t>(torus.size()));
  for (int v = 0; v < torus.size(); ++v) in[static_cast<std::size_t>(v)] = code.contains(torus.vertices[static_cast<std::size_t>(v)]);
  for (int v = 0; v < torus.size(); ++v)
    for (int u : torus.adjacency[static_cast<std::size_t>(v)]) {
      if (u < v) continue;
      std::vector<int> members;
      for (int x : {v, u}) {
        if (in[static_cast<std::size_t>(x)]) members.push_back(x);
        for (int y : torus.adjacency[static_cast<std::size_t>(x)])
          if (in[static_cast<std::size_t>(y)]) members.push_back(y);
      }
      std::sort(members.begin(), members.end());
      members.erase(std::unique(members.begin(), members.end()), members.end());
      if (members.size() != 1) return false;
    }
  return true;
}

/// Smallest nonzero Manhattan weight of a code that contains the origin,
/// measured on the quotient (cyclic distance per axis).
inline int minimum_weight(const PeriodicCode& code) {
  int best = -1;
  for (const Word& r : code.residues()) {
    int w = 0;
    for (int i = 0; i < code.dim(); ++i) {
      const int q = code.periods()[static_cast<std::size_t>(i)];
      w += std::min(r[i], q - r[i]);
    }
    if (w > 0 && (best < 0 || w < best)) best = w;
  }
  return best;
}

}  // namespace crcgrid
