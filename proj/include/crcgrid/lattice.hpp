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

// Finite pieces of the grid Z^n: balls, tori, Hamming graphs, the
// triangular torus, and small local-structure helpers (word types, caps,
// interval graphs).

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <queue>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "crcgrid/error.hpp"

namespace crcgrid {

/// A point of Z^n.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> coords) : coords_(std::move(coords)) {}
  Word(std::initializer_list<int> coords) : coords_(coords) {}

  static Word zero(int n) { return Word(std::vector<int>(static_cast<std::size_t>(n), 0)); }

  /// sign * e_axis, axis is 0-based.
  static Word unit(int n, int axis, int sign = 1) {
    Word w = zero(n);
    w.coords_[static_cast<std::size_t>(axis)] = sign;
    return w;
  }

  int dim() const { return static_cast<int>(coords_.size()); }
  int operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return coords_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& coords() const { return coords_; }

  Word operator+(const Word& o) const {
    Word r = *this;
    for (int i = 0; i < dim(); ++i) r[i] += o[i];
    return r;
  }
  Word operator-(const Word& o) const {
    Word r = *this;
    for (int i = 0; i < dim(); ++i) r[i] -= o[i];
    return r;
  }

  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

 private:
  std::vector<int> coords_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int c : w.coords()) {
      h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(c));
      h *= 1099511628211ull;
    }
    return h;
  }
};

inline void to_json(nlohmann::json& j, const Word& w) { j = w.coords(); }
inline void from_json(const nlohmann::json& j, Word& w) { w = Word(j.get<std::vector<int>>()); }

/// Manhattan distance to the origin.
inline int weight(const Word& w) {
  int s = 0;
  for (int c : w.coords()) s += std::abs(c);
  return s;
}

inline int manhattan(const Word& x, const Word& y) { return weight(x - y); }

/// Lee composition of a word of weight at most four, e.g. "2110".
inline std::string word_type(const Word& w) {
  if (weight(w) > 4) throw Error(Errc::unsupported_weight, "word type is defined up to weight 4");
  std::vector<int> mags;
  for (int c : w.coords())
    if (c != 0) mags.push_back(std::abs(c));
  std::sort(mags.rbegin(), mags.rend());
  std::string out;
  for (int m : mags) out += static_cast<char>('0' + m);
  out.resize(4, '0');
  return out;
}

/// The weight-four words 3*sign*e_axis +- e_j, j != axis. Axis is 1-based.
inline std::vector<Word> cap(int n, int axis, int sign) {
  if (n < 2) throw Error(Errc::empty_cap, "caps need n >= 2");
  if (axis < 1 || axis > n || (sign != 1 && sign != -1))
    throw Error(Errc::domain, "cap axis must be in 1..n and sign +-1");
  std::vector<Word> out;
  for (int j = 0; j < n; ++j) {
    if (j == axis - 1) continue;
    for (int s : {1, -1}) {
      Word w = Word::unit(n, axis - 1, 3 * sign);
      w[j] = s;
      out.push_back(std::move(w));
    }
  }
  return out;
}

/// Plain undirected graph on words.
struct Graph {
  std::vector<Word> vertices;
  std::vector<std::vector<int>> adjacency;

  int size() const { return static_cast<int>(vertices.size()); }
  int degree(int v) const { return static_cast<int>(adjacency[static_cast<std::size_t>(v)].size()); }
  int edge_count() const {
    std::size_t s = 0;
    for (const auto& a : adjacency) s += a.size();
    return static_cast<int>(s / 2);
  }
};

/// Subgraph of G_n induced by the metric interval between 0 and x.
inline Graph interval_graph(const Word& x) {
  const int n = x.dim();
  Graph g;
  // Coordinatewise, y_i ranges over the integers between 0 and x_i.
  std::vector<Word> verts{Word::zero(n)};
  for (int i = 0; i < n; ++i) {
    std::vector<Word> next;
    const int step = x[i] >= 0 ? 1 : -1;
    for (const Word& y : verts) {
      for (int t = 0; t != x[i] + step; t += step) {
        Word z = y;
        z[i] = t;
        next.push_back(std::move(z));
      }
    }
    verts = std::move(next);
  }
  std::sort(verts.begin(), verts.end(),
            [](const Word& a, const Word& b) { return std::pair(weight(a), a) < std::pair(weight(b), b); });
  g.vertices = std::move(verts);
  g.adjacency.assign(g.vertices.size(), {});
  for (int a = 0; a < g.size(); ++a)
    for (int b = a + 1; b < g.size(); ++b)
      if (manhattan(g.vertices[static_cast<std::size_t>(a)], g.vertices[static_cast<std::size_t>(b)]) == 1) {
        g.adjacency[static_cast<std::size_t>(a)].push_back(b);
        g.adjacency[static_cast<std::size_t>(b)].push_back(a);
      }
  return g;
}

/// The subgraph of G_n induced by the words of weight at most R. Vertices are
/// ordered by weight, then lexicographically; vertex 0 is the origin.
/// `interior[v]` marks full-degree vertices (weight <= R-1).
struct BallGraph : Graph {
  int n = 0;
  int radius = 0;
  std::vector<char> interior;
  std::unordered_map<Word, int, WordHash> index;

  int valency() const { return 2 * n; }

  int index_of(const Word& w) const {
    auto it = index.find(w);
    return it == index.end() ? -1 : it->second;
  }
};

inline BallGraph ball_graph(int n, int radius) {
  if (n < 1 || radius < 0) throw Error(Errc::domain, "ball needs n >= 1 and R >= 0");
  BallGraph g;
  g.n = n;
  g.radius = radius;

  // Enumerate Z^n words with weight <= radius, one coordinate at a time.
  std::vector<std::pair<Word, int>> partial{{Word::zero(n), 0}};
  for (int i = 0; i < n; ++i) {
    std::vector<std::pair<Word, int>> next;
    for (const auto& [w, used] : partial) {
      const int left = radius - used;
      for (int t = -left; t <= left; ++t) {
        Word z = w;
        z[i] = t;
        next.emplace_back(std::move(z), used + std::abs(t));
      }
    }
    partial = std::move(next);
  }
  std::vector<Word> verts;
  verts.reserve(partial.size());
  for (auto& p : partial) verts.push_back(std::move(p.first));
  std::sort(verts.begin(), verts.end(),
            [](const Word& a, const Word& b) { return std::pair(weight(a), a) < std::pair(weight(b), b); });

  g.vertices = std::move(verts);
  g.index.reserve(g.vertices.size());
  for (int v = 0; v < g.size(); ++v) g.index.emplace(g.vertices[static_cast<std::size_t>(v)], v);

  g.adjacency.assign(g.vertices.size(), {});
  g.interior.assign(g.vertices.size(), 0);
  for (int v = 0; v < g.size(); ++v) {
    const Word& w = g.vertices[static_cast<std::size_t>(v)];
    for (int i = 0; i < n; ++i)
      for (int s : {-1, 1}) {
        Word u = w;
        u[i] += s;
        const int idx = g.index_of(u);
        if (idx >= 0) g.adjacency[static_cast<std::size_t>(v)].push_back(idx);
      }
    std::sort(g.adjacency[static_cast<std::size_t>(v)].begin(), g.adjacency[static_cast<std::size_t>(v)].end());
    g.interior[static_cast<std::size_t>(v)] = g.degree(v) == 2 * n ? 1 : 0;
  }
  return g;
}

enum class QuotientKind { torus, hamming, triangular_torus };

inline std::string to_string(QuotientKind k) {
  switch (k) {
    case QuotientKind::torus: return "torus";
    case QuotientKind::hamming: return "hamming";
    case QuotientKind::triangular_torus: return "triangular-torus";
  }
  return "unknown";
}

/// A finite quotient of the grid (or a Hamming graph). Vertices are the words
/// of the box prod [0, periods[i]) in lexicographic order, so the index of x
/// is its mixed-radix value.
struct QuotientGraph : Graph {
  QuotientKind kind = QuotientKind::torus;
  int n = 0;
  std::vector<int> periods;

  int index_of(const Word& w) const {
    int idx = 0;
    for (int i = 0; i < n; ++i) {
      const int q = periods[static_cast<std::size_t>(i)];
      idx = idx * q + ((w[i] % q) + q) % q;
    }
    return idx;
  }
};

namespace detail {

inline std::vector<Word> box_words(std::span<const int> periods) {
  std::size_t total = 1;
  for (int q : periods) total *= static_cast<std::size_t>(q);
  std::vector<Word> out;
  out.reserve(total);
  const int n = static_cast<int>(periods.size());
  Word w = Word::zero(n);
  for (std::size_t k = 0; k < total; ++k) {
    out.push_back(w);
    for (int i = n - 1; i >= 0; --i) {
      if (++w[i] < periods[static_cast<std::size_t>(i)]) break;
      w[i] = 0;
    }
  }
  return out;
}

inline QuotientGraph cayley_quotient(QuotientKind kind, std::vector<int> periods,
                                     const std::vector<Word>& generators) {
  QuotientGraph g;
  g.kind = kind;
  g.n = static_cast<int>(periods.size());
  g.periods = std::move(periods);
  g.vertices = box_words(g.periods);
  g.adjacency.assign(g.vertices.size(), {});
  for (int v = 0; v < g.size(); ++v) {
    auto& adj = g.adjacency[static_cast<std::size_t>(v)];
    for (const Word& s : generators) adj.push_back(g.index_of(g.vertices[static_cast<std::size_t>(v)] + s));
    std::sort(adj.begin(), adj.end());
  }
  return g;
}

}  // namespace detail

/// G_{n,q} with per-axis cycle lengths; every length must be >= 3.
inline QuotientGraph torus_graph(std::span<const int> periods) {
  if (periods.empty()) throw Error(Errc::domain, "torus needs n >= 1");
  for (int q : periods)
    if (q < 3) throw Error(Errc::domain, "torus cycle length must be >= 3 (use hamming(n,2) for q = 2)");
  const int n = static_cast<int>(periods.size());
  std::vector<Word> gens;
  for (int i = 0; i < n; ++i) {
    gens.push_back(Word::unit(n, i, 1));
    gens.push_back(Word::unit(n, i, -1));
  }
  return detail::cayley_quotient(QuotientKind::torus, {periods.begin(), periods.end()}, gens);
}

inline QuotientGraph torus_graph(int n, int q) {
  if (n < 1) throw Error(Errc::domain, "torus needs n >= 1");
  std::vector<int> periods(static_cast<std::size_t>(n), q);
  return torus_graph(periods);
}

inline QuotientGraph hamming_graph(int n, int q) {
  if (n < 1 || q < 2) throw Error(Errc::domain, "hamming needs n >= 1 and q >= 2");
  std::vector<Word> gens;
  for (int i = 0; i < n; ++i)
    for (int s = 1; s < q; ++s) gens.push_back(Word::unit(n, i, s));
  return detail::cayley_quotient(QuotientKind::hamming, std::vector<int>(static_cast<std::size_t>(n), q), gens);
}

/// Z_q^2 with generators +-(1,0), +-(0,1), +-(1,1).
inline QuotientGraph triangular_torus(int q) {
  if (q < 3) throw Error(Errc::domain, "triangular torus needs q >= 3");
  const std::vector<Word> gens{{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}};
  return detail::cayley_quotient(QuotientKind::triangular_torus, {q, q}, gens);
}

/// Gray map Z_4^n -> {0,1}^{2n}: 0->00, 1->10, 2->11, 3->01.
inline std::vector<int> gray_word(std::span<const int> residues) {
  static constexpr int table[4][2] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  std::vector<int> bits;
  bits.reserve(2 * residues.size());
  for (int r : residues) {
    if (r < 0 || r > 3) throw Error(Errc::residue_out_of_range, "gray map expects residues in 0..3");
    bits.push_back(table[r][0]);
    bits.push_back(table[r][1]);
  }
  return bits;
}

inline std::vector<int> gray_inverse(std::span<const int> bits) {
  if (bits.size() % 2 != 0) throw Error(Errc::domain, "gray inverse needs an even number of bits");
  std::vector<int> out;
  out.reserve(bits.size() / 2);
  for (std::size_t i = 0; i < bits.size(); i += 2) {
    const int a = bits[i], b = bits[i + 1];
    if ((a | b) & ~1) throw Error(Errc::residue_out_of_range, "gray inverse expects bits");
    static constexpr int inv[2][2] = {{0, 3}, {1, 2}};
    out.push_back(inv[a][b]);
  }
  return out;
}

/// Covering G_3 -> triangular grid: (x1, x2, x3) -> (x1 - x2, x3 - x2).
inline Word triangular_covering(const Word& x) {
  if (x.dim() != 3) throw Error(Errc::domain, "triangular covering is defined on Z^3");
  return Word{x[0] - x[1], x[2] - x[1]};
}

/// Multi-source BFS labels; -1 for vertices unreachable from the seeds.
inline std::vector<int> distance_partition(const Graph& g, std::span<const int> seeds) {
  if (seeds.empty()) throw Error(Errc::empty_seed, "distance partition needs a nonempty seed set");
  std::vector<int> label(static_cast<std::size_t>(g.size()), -1);
  std::queue<int> frontier;
  for (int s : seeds) {
    if (s < 0 || s >= g.size()) throw Error(Errc::domain, "seed is not a vertex");
    if (label[static_cast<std::size_t>(s)] == 0) continue;
    label[static_cast<std::size_t>(s)] = 0;
    frontier.push(s);
  }
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    for (int u : g.adjacency[static_cast<std::size_t>(v)]) {
      if (label[static_cast<std::size_t>(u)] >= 0) continue;
      label[static_cast<std::size_t>(u)] = label[static_cast<std::size_t>(v)] + 1;
      frontier.push(u);
    }
  }
  return label;
}

// Debug serialization; the layout is not a stable interchange format.
inline nlohmann::json graph_json(const BallGraph& g) {
  return {{"kind", "ball"}, {"n", g.n}, {"R", g.radius}, {"vertices", g.vertices}, {"adjacency", g.adjacency}};
}

inline nlohmann::json graph_json(const QuotientGraph& g) {
  return {{"kind", to_string(g.kind)}, {"n", g.n},          {"q", g.periods},
          {"vertices", g.vertices},    {"adjacency", g.adjacency}};
}

}  // namespace crcgrid
