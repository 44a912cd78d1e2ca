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

// Intersection arrays, periodic codes on Z^n and exact checks of complete
// regularity on finite quotients.

#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "crcgrid/error.hpp"
#include "crcgrid/lattice.hpp"

namespace crcgrid {

/// Tridiagonal parameter matrix [a0,b0 | c1,a1,b1 | ... | c_rho,a_rho].
///
/// All three sequences have length rho+1 and are indexed by row, with the
/// out-of-band entries c[0] and b[rho] held at zero.
struct ParamMatrix {
  int valency = 0;
  std::vector<int> a;
  std::vector<int> b;
  std::vector<int> c;

  int rho() const { return static_cast<int>(a.size()) - 1; }

  int entry(int i, int j) const {
    if (j == i) return a[static_cast<std::size_t>(i)];
    if (j == i + 1) return b[static_cast<std::size_t>(i)];
    if (j == i - 1) return c[static_cast<std::size_t>(i)];
    return 0;
  }

  int row_sum(int i) const {
    const auto k = static_cast<std::size_t>(i);
    return a[k] + b[k] + c[k];
  }

  bool operator==(const ParamMatrix&) const = default;
};

/// Builds a matrix from its band. `b` has rho entries (b_0..b_{rho-1}) and
/// `c` has rho entries (c_1..c_rho).
inline ParamMatrix make_matrix(int valency, std::vector<int> a, std::vector<int> b, std::vector<int> c) {
  ParamMatrix m;
  m.valency = valency;
  m.a = std::move(a);
  b.push_back(0);
  c.insert(c.begin(), 0);
  m.b = std::move(b);
  m.c = std::move(c);
  return m;
}

inline ParamMatrix scaled(const ParamMatrix& m, int k) {
  ParamMatrix r = m;
  r.valency *= k;
  for (auto* v : {&r.a, &r.b, &r.c})
    for (int& x : *v) x *= k;
  return r;
}

inline std::string format_compact(const ParamMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i <= m.rho(); ++i) {
    const auto k = static_cast<std::size_t>(i);
    if (i > 0) os << '|' << m.c[k] << ',';
    os << m.a[k];
    if (i < m.rho()) os << ',' << m.b[k];
  }
  os << ']';
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const ParamMatrix& m) { return os << format_compact(m); }

namespace detail {

// Splits "[x,y|z,...]" into integer groups.
inline std::vector<std::vector<int>> parse_groups(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw Error(Errc::malformed_matrix, "expected '[...]' in \"" + std::string(text) + "\"");
  s = s.substr(1, s.size() - 2);

  std::vector<std::vector<int>> groups(1);
  std::string num;
  auto flush = [&] {
    if (num.empty() || num == "-") throw Error(Errc::malformed_matrix, "empty entry in \"" + std::string(text) + "\"");
    for (std::size_t i = (num[0] == '-' ? 1 : 0); i < num.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(num[i])))
        throw Error(Errc::malformed_matrix, "bad entry '" + num + "'");
    groups.back().push_back(std::stoi(num));
    num.clear();
  };
  for (char ch : s) {
    if (ch == ',') {
      flush();
    } else if (ch == '|') {
      flush();
      groups.emplace_back();
    } else {
      num += ch;
    }
  }
  flush();
  for (const auto& g : groups)
    for (int x : g)
      if (x < 0) throw Error(Errc::negative_entry, "negative entry in \"" + std::string(text) + "\"");
  return groups;
}

}  // namespace detail

/// Parses the compact form. The valency is the first row sum unless given;
/// every row must sum to it.
inline ParamMatrix parse_compact(std::string_view text, std::optional<int> valency = std::nullopt) {
  const auto groups = detail::parse_groups(text);
  if (groups.size() < 2) throw Error(Errc::malformed_matrix, "covering radius must be at least 1");
  const int rho = static_cast<int>(groups.size()) - 1;
  std::vector<int> a, b, c;
  for (int i = 0; i <= rho; ++i) {
    const auto& g = groups[static_cast<std::size_t>(i)];
    const std::size_t want = (i == 0 || i == rho) ? 2 : 3;
    if (g.size() != want) throw Error(Errc::malformed_matrix, "row " + std::to_string(i) + " has wrong arity");
    if (i == 0) {
      a.push_back(g[0]);
      b.push_back(g[1]);
    } else {
      c.push_back(g[0]);
      a.push_back(g[1]);
      if (i < rho) b.push_back(g[2]);
    }
  }
  const int k = valency.value_or(a[0] + b[0]);
  ParamMatrix m = make_matrix(k, std::move(a), std::move(b), std::move(c));
  for (int i = 0; i <= rho; ++i)
    if (m.row_sum(i) != k)
      throw Error(Errc::inconsistent_row_sum,
                  "row " + std::to_string(i) + " sums to " + std::to_string(m.row_sum(i)) + ", expected " +
                      std::to_string(k));
  return m;
}

/// Upper-left (rho+1) x rho block of a parameter matrix: a_0..a_{rho-1},
/// b_0..b_{rho-2}, c_1..c_rho. Indexing follows ParamMatrix: a has rho
/// entries, b has rho-1, and c has rho+1 with c[0] = 0.
struct PartialMatrix {
  int valency = 0;
  std::vector<int> a;
  std::vector<int> b;
  std::vector<int> c;

  int rho() const { return static_cast<int>(a.size()); }

  /// Dense entry, row in 0..rho, column in 0..rho-1.
  int entry(int i, int j) const {
    const int r = rho();
    if (j < 0 || j >= r) return 0;
    if (j == i && i < r) return a[static_cast<std::size_t>(i)];
    if (j == i + 1 && i + 1 < r) return b[static_cast<std::size_t>(i)];
    if (j == i - 1) return c[static_cast<std::size_t>(i)];
    return 0;
  }

  int row_sum(int i) const {
    int s = 0;
    for (int j = 0; j < rho(); ++j) s += entry(i, j);
    return s;
  }

  bool operator==(const PartialMatrix&) const = default;
};

/// Builds a partial matrix from dense rows of width rho; rows.size() = rho+1.
inline PartialMatrix partial_from_rows(int valency, const std::vector<std::vector<int>>& rows) {
  const int rho = static_cast<int>(rows.size()) - 1;
  if (rho < 1) throw Error(Errc::malformed_matrix, "partial matrix needs rho >= 1");
  PartialMatrix p;
  p.valency = valency;
  p.c.push_back(0);
  for (int i = 0; i <= rho; ++i) {
    const auto& r = rows[static_cast<std::size_t>(i)];
    if (static_cast<int>(r.size()) != rho) throw Error(Errc::malformed_matrix, "partial rows must have width rho");
    for (int j = 0; j < rho; ++j) {
      const int x = r[static_cast<std::size_t>(j)];
      if (x < 0) throw Error(Errc::negative_entry, "negative partial entry");
      if (j == i) p.a.push_back(x);
      else if (j == i + 1) p.b.push_back(x);
      else if (j == i - 1) p.c.push_back(x);
      else if (x != 0) throw Error(Errc::malformed_matrix, "entry outside the tridiagonal band");
    }
  }
  for (int i = 0; i <= rho; ++i)
    if (p.row_sum(i) > valency) throw Error(Errc::inconsistent_row_sum, "partial row exceeds the valency");
  return p;
}

/// Compact form of a partial matrix: the band of each row, with the last row
/// written "0,c_rho" (or just "c_rho" when rho = 1), e.g. "[0,6|2,0|0,3]".
inline std::string format_partial(const PartialMatrix& p) {
  std::ostringstream os;
  const int rho = p.rho();
  os << '[';
  for (int i = 0; i <= rho; ++i) {
    if (i > 0) os << '|';
    bool first = true;
    auto put = [&](int x) {
      if (!first) os << ',';
      os << x;
      first = false;
    };
    if (i == rho) {
      if (rho >= 2) put(0);
      put(p.c[static_cast<std::size_t>(i)]);
      continue;
    }
    if (i > 0) put(p.c[static_cast<std::size_t>(i)]);
    put(p.a[static_cast<std::size_t>(i)]);
    if (i + 1 < rho) put(p.b[static_cast<std::size_t>(i)]);
  }
  os << ']';
  return os.str();
}

inline PartialMatrix parse_partial(std::string_view text, int valency) {
  const auto groups = detail::parse_groups(text);
  const int rho = static_cast<int>(groups.size()) - 1;
  if (rho < 1) throw Error(Errc::malformed_matrix, "partial matrix needs at least two rows");
  PartialMatrix p;
  p.valency = valency;
  p.c.push_back(0);
  for (int i = 0; i <= rho; ++i) {
    const auto& g = groups[static_cast<std::size_t>(i)];
    if (i == rho) {
      if (g.size() == 2 && g[0] == 0 && rho >= 2) p.c.push_back(g[1]);
      else if (g.size() == 1) p.c.push_back(g[0]);
      else throw Error(Errc::malformed_matrix, "last partial row must be \"0,c\" or \"c\"");
      continue;
    }
    const std::size_t want = static_cast<std::size_t>((i > 0 ? 1 : 0) + 1 + (i + 1 < rho ? 1 : 0));
    if (g.size() != want) throw Error(Errc::malformed_matrix, "partial row " + std::to_string(i) + " has wrong arity");
    std::size_t k = 0;
    if (i > 0) p.c.push_back(g[k++]);
    p.a.push_back(g[k++]);
    if (i + 1 < rho) p.b.push_back(g[k++]);
  }
  for (int i = 0; i <= rho; ++i)
    if (p.row_sum(i) > valency) throw Error(Errc::inconsistent_row_sum, "partial row exceeds the valency");
  return p;
}

/// The upper-left block of a full matrix.
inline PartialMatrix truncate(const ParamMatrix& m) {
  PartialMatrix p;
  p.valency = m.valency;
  const int rho = m.rho();
  p.a.assign(m.a.begin(), m.a.begin() + rho);
  p.b.assign(m.b.begin(), m.b.begin() + std::max(0, rho - 1));
  p.c = m.c;
  return p;
}

/// Completes every row of B to the valency with an appended column.
inline ParamMatrix extension(const PartialMatrix& p) {
  const int rho = p.rho();
  const int k = p.valency;
  for (int i = 0; i + 1 < rho; ++i)
    if (p.row_sum(i) != k)
      throw Error(Errc::inconsistent_row_sum,
                  "row " + std::to_string(i) + " is complete but does not sum to the valency");
  ParamMatrix m;
  m.valency = k;
  m.a = p.a;
  m.a.push_back(k - p.c[static_cast<std::size_t>(rho)]);
  m.b = p.b;
  m.b.push_back(k - p.row_sum(rho - 1));
  m.b.push_back(0);
  m.c = p.c;
  for (int x : {m.a.back(), m.b[static_cast<std::size_t>(rho - 1)]})
    if (x < 0) throw Error(Errc::negative_extension, "appended entry would be negative");
  return m;
}

/// Matrix of the opposite code (distance partition read backwards).
inline ParamMatrix opposite_matrix(const ParamMatrix& m) {
  const int rho = m.rho();
  ParamMatrix r;
  r.valency = m.valency;
  r.a.assign(m.a.rbegin(), m.a.rend());
  r.b.resize(static_cast<std::size_t>(rho + 1));
  r.c.resize(static_cast<std::size_t>(rho + 1));
  for (int i = 0; i <= rho; ++i) {
    r.b[static_cast<std::size_t>(i)] = m.c[static_cast<std::size_t>(rho - i)];
    r.c[static_cast<std::size_t>(i)] = m.b[static_cast<std::size_t>(rho - i)];
  }
  return r;
}

/// c_1 <= ... <= c_rho and b_0 >= ... >= b_{rho-1}.
inline bool monotonicity_check(const ParamMatrix& m) {
  for (int i = 2; i <= m.rho(); ++i)
    if (m.c[static_cast<std::size_t>(i)] < m.c[static_cast<std::size_t>(i - 1)]) return false;
  for (int i = 1; i < m.rho(); ++i)
    if (m.b[static_cast<std::size_t>(i)] > m.b[static_cast<std::size_t>(i - 1)]) return false;
  return true;
}

inline bool monotonicity_check(const PartialMatrix& p) {
  for (int i = 2; i <= p.rho(); ++i)
    if (p.c[static_cast<std::size_t>(i)] < p.c[static_cast<std::size_t>(i - 1)]) return false;
  for (std::size_t i = 1; i < p.b.size(); ++i)
    if (p.b[i] > p.b[i - 1]) return false;
  return true;
}

struct Reduction {
  enum class Kind { none, reduced, inconsistent };
  Kind kind = Kind::none;
  std::optional<ParamMatrix> g1_matrix;
};

/// Two equal interior rows (c_i,a_i,b_i) = (c_j,a_j,b_j), 1 <= i < j <= rho-1,
/// mean the matrix is n times a matrix of a code on the line.
inline Reduction reducible_check(const ParamMatrix& m, int n) {
  Reduction r;
  const int rho = m.rho();
  bool repeated = false;
  for (int i = 1; i < rho && !repeated; ++i)
    for (int j = i + 1; j < rho && !repeated; ++j) {
      const auto x = static_cast<std::size_t>(i), y = static_cast<std::size_t>(j);
      repeated = m.c[x] == m.c[y] && m.a[x] == m.a[y] && m.b[x] == m.b[y];
    }
  if (!repeated) return r;
  for (const auto* v : {&m.a, &m.b, &m.c})
    for (int x : *v)
      if (n <= 0 || x % n != 0) {
        r.kind = Reduction::Kind::inconsistent;
        return r;
      }
  ParamMatrix g = m;
  g.valency = m.valency / n;
  for (auto* v : {&g.a, &g.b, &g.c})
    for (int& x : *v) x /= n;
  r.kind = Reduction::Kind::reduced;
  r.g1_matrix = std::move(g);
  return r;
}

/// A subset of Z^n invariant under x -> x + periods[i] e_i, stored as a
/// membership mask over the box prod [0, periods[i]).
class PeriodicCode {
 public:
  PeriodicCode() = default;

  PeriodicCode(std::vector<int> periods, const std::vector<Word>& residues) : periods_(std::move(periods)) {
    init_box();
    for (const Word& r : residues) {
      if (r.dim() != dim()) throw Error(Errc::residue_out_of_range, "residue has wrong length");
      for (int i = 0; i < dim(); ++i)
        if (r[i] < 0 || r[i] >= periods_[static_cast<std::size_t>(i)])
          throw Error(Errc::residue_out_of_range, "residue coordinate outside [0, q)");
      mask_[static_cast<std::size_t>(box_index(r))] = 1;
    }
    check_nonempty();
  }

  static PeriodicCode from_predicate(std::vector<int> periods, const std::function<bool(const Word&)>& member) {
    PeriodicCode code;
    code.periods_ = std::move(periods);
    code.init_box();
    const auto words = detail::box_words(code.periods_);
    for (std::size_t k = 0; k < words.size(); ++k) code.mask_[k] = member(words[k]) ? 1 : 0;
    code.check_nonempty();
    return code;
  }

  int dim() const { return static_cast<int>(periods_.size()); }
  const std::vector<int>& periods() const { return periods_; }
  std::size_t box_size() const { return mask_.size(); }

  int box_index(const Word& x) const {
    int idx = 0;
    for (int i = 0; i < dim(); ++i) {
      const int q = periods_[static_cast<std::size_t>(i)];
      idx = idx * q + ((x[i] % q) + q) % q;
    }
    return idx;
  }

  bool contains(const Word& x) const { return mask_[static_cast<std::size_t>(box_index(x))] != 0; }

  std::size_t size() const { return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), 1)); }

  std::vector<Word> residues() const {
    std::vector<Word> out;
    const auto words = detail::box_words(periods_);
    for (std::size_t k = 0; k < words.size(); ++k)
      if (mask_[k]) out.push_back(words[k]);
    return out;
  }

  /// The same set described with each period multiplied by factors[i].
  PeriodicCode refined(const std::vector<int>& factors) const {
    std::vector<int> p = periods_;
    for (int i = 0; i < dim(); ++i) p[static_cast<std::size_t>(i)] *= factors[static_cast<std::size_t>(i)];
    return from_predicate(std::move(p), [this](const Word& w) { return contains(w); });
  }

  bool operator==(const PeriodicCode&) const = default;

 private:
  void init_box() {
    if (periods_.empty()) throw Error(Errc::domain, "code needs n >= 1");
    std::size_t total = 1;
    for (int q : periods_) {
      if (q < 1) throw Error(Errc::domain, "periods must be positive");
      total *= static_cast<std::size_t>(q);
    }
    mask_.assign(total, 0);
  }

  void check_nonempty() const {
    if (std::find(mask_.begin(), mask_.end(), 1) == mask_.end())
      throw Error(Errc::domain, "periodic code must have at least one residue");
  }

  std::vector<int> periods_;
  std::vector<std::uint8_t> mask_;
};

inline nlohmann::json code_json(const PeriodicCode& code) {
  return {{"n", code.dim()}, {"periods", code.periods()}, {"residues", code.residues()}};
}

inline PeriodicCode code_from_json(const nlohmann::json& j) {
  auto periods = j.at("periods").get<std::vector<int>>();
  if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(periods.size()))
    throw Error(Errc::domain, "n does not match the number of periods");
  return PeriodicCode(std::move(periods), j.at("residues").get<std::vector<Word>>());
}

/// Smallest divisor d of periods[axis] such that the code is invariant under
/// x -> x + d e_axis. Axis is 0-based.
inline int minimal_period(const PeriodicCode& code, int axis) {
  const int q = code.periods()[static_cast<std::size_t>(axis)];
  const auto words = detail::box_words(code.periods());
  for (int d = 1; d < q; ++d) {
    if (q % d != 0) continue;
    bool invariant = true;
    for (const Word& w : words) {
      Word s = w;
      s[axis] += d;
      if (code.contains(w) != code.contains(s)) {
        invariant = false;
        break;
      }
    }
    if (invariant) return d;
  }
  return q;
}

struct Witness {
  int vertex = -1;
  Word word;
  int label = -1;
  std::vector<int> counts;    // neighbor colour counts at the violating vertex
  std::vector<int> expected;  // counts seen first for that colour
};

struct Verdict {
  bool is_crc = false;
  int covering_radius = 0;
  std::optional<ParamMatrix> matrix;
  std::optional<Witness> witness;
  std::string reason;
  std::optional<bool> matches_expected;
  std::vector<int> torus_periods;
};

/// Checks that `labels` is a perfect colouring with a tridiagonal matrix.
inline Verdict verify_coloring(const Graph& g, std::span<const int> labels) {
  Verdict v;
  if (static_cast<int>(labels.size()) != g.size()) throw Error(Errc::domain, "one label per vertex expected");
  int rho = -1;
  for (int l : labels) {
    if (l < 0) throw Error(Errc::domain, "labels must be nonnegative");
    rho = std::max(rho, l);
  }
  v.covering_radius = rho;
  std::vector<char> seen(static_cast<std::size_t>(rho + 1), 0);
  for (int l : labels) seen[static_cast<std::size_t>(l)] = 1;
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    v.reason = "label set is not contiguous";
    return v;
  }
  if (rho < 1) {
    v.reason = "covering radius 0 (the code is everything)";
    return v;
  }

  const auto k = static_cast<std::size_t>(rho + 1);
  std::vector<std::vector<int>> rows(k);
  std::vector<int> counts(k);
  auto witness = [&](int vertex, std::vector<int> expected, std::string why) {
    v.witness = Witness{vertex, g.vertices[static_cast<std::size_t>(vertex)], labels[static_cast<std::size_t>(vertex)],
                        counts, std::move(expected)};
    v.reason = std::move(why);
    return v;
  };
  for (int x = 0; x < g.size(); ++x) {
    std::fill(counts.begin(), counts.end(), 0);
    for (int u : g.adjacency[static_cast<std::size_t>(x)]) ++counts[static_cast<std::size_t>(labels[static_cast<std::size_t>(u)])];
    auto& row = rows[static_cast<std::size_t>(labels[static_cast<std::size_t>(x)])];
    if (row.empty()) row = counts;
    else if (row != counts) return witness(x, row, "neighbour counts depend on more than the colour");
  }
  const int valency = g.degree(0);
  for (std::size_t i = 0; i < k; ++i) {
    int sum = 0;
    for (std::size_t j = 0; j < k; ++j) {
      sum += rows[i][j];
      if (rows[i][j] != 0 && (j + 1 < i || j > i + 1)) {
        const int x = static_cast<int>(std::find(labels.begin(), labels.end(), static_cast<int>(i)) - labels.begin());
        counts = rows[i];
        return witness(x, rows[i], "matrix is not tridiagonal");
      }
    }
    if (sum != valency) {
      v.reason = "graph is not regular";
      return v;
    }
  }
  ParamMatrix m;
  m.valency = valency;
  for (std::size_t i = 0; i < k; ++i) {
    m.a.push_back(rows[i][i]);
    m.b.push_back(i + 1 < k ? rows[i][i + 1] : 0);
    m.c.push_back(i > 0 ? rows[i][i - 1] : 0);
  }
  v.is_crc = true;
  v.matrix = std::move(m);
  return v;
}

struct VerifyOptions {
  /// Largest torus (vertex count) the check may build.
  std::size_t max_vertices = 4'000'000;
};

namespace detail {

inline std::vector<int> inflate(const std::vector<int>& periods, int min_length) {
  std::vector<int> out;
  for (int q : periods) {
    int k = (min_length + q - 1) / q;
    out.push_back(q * std::max(1, k));
  }
  return out;
}

inline std::vector<int> code_labels(const PeriodicCode& code, const QuotientGraph& torus) {
  std::vector<int> seeds;
  for (int v = 0; v < torus.size(); ++v)
    if (code.contains(torus.vertices[static_cast<std::size_t>(v)])) seeds.push_back(v);
  return distance_partition(torus, seeds);
}

inline std::size_t volume(const std::vector<int>& periods) {
  std::size_t t = 1;
  for (int q : periods) t *= static_cast<std::size_t>(q);
  return t;
}

}  // namespace detail

/// Realizes the code on a torus whose cycles are at least max(3, 2*rho+2)
/// long, so distances agree with the grid, and verifies its distance
/// partition.
inline Verdict verify_periodic(const PeriodicCode& code, const std::optional<ParamMatrix>& expected = std::nullopt,
                               const VerifyOptions& opts = {}) {
  const auto probe_periods = detail::inflate(code.periods(), 3);
  if (detail::volume(probe_periods) > opts.max_vertices)
    throw Error(Errc::period_overflow, "probe torus exceeds the vertex cap");
  const auto probe = torus_graph(probe_periods);
  const auto probe_labels = detail::code_labels(code, probe);
  const int rho_upper = *std::max_element(probe_labels.begin(), probe_labels.end());

  const auto periods = detail::inflate(code.periods(), std::max(3, 2 * rho_upper + 2));
  if (detail::volume(periods) > opts.max_vertices)
    throw Error(Errc::period_overflow, "verification torus exceeds the vertex cap");
  Verdict v;
  if (periods == probe_periods) {
    v = verify_coloring(probe, probe_labels);
  } else {
    const auto torus = torus_graph(periods);
    v = verify_coloring(torus, detail::code_labels(code, torus));
  }
  v.torus_periods = periods;
  if (expected) v.matches_expected = v.is_crc && v.matrix == *expected;
  return v;
}

inline nlohmann::json verdict_json(const Verdict& v) {
  nlohmann::json j{{"is_crc", v.is_crc}, {"covering_radius", v.covering_radius}};
  if (v.matrix) j["matrix"] = format_compact(*v.matrix);
  if (v.witness)
    j["witness"] = {{"vertex", v.witness->vertex},
                    {"word", v.witness->word},
                    {"label", v.witness->label},
                    {"counts", v.witness->counts},
                    {"expected", v.witness->expected}};
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (v.matches_expected) j["matches_expected"] = *v.matches_expected;
  if (!v.torus_periods.empty()) j["torus_periods"] = v.torus_periods;
  return j;
}

}  // namespace crcgrid
