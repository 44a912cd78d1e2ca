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

// Classical completely regular codes in small Hamming graphs, kept as plain
// word lists together with their known intersection arrays.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "crcgrid/error.hpp"
#include "crcgrid/lattice.hpp"

namespace crcgrid {

struct TernarySource {
  int n;
  std::vector<Word> words;
  std::string matrix;
  std::string description;
};

struct BinarySource {
  int n;  // grid dimension; words have length 2n
  std::vector<std::vector<int>> words;
  std::string matrix;
  std::string description;
};

inline const std::map<std::string, TernarySource>& ternary_sources() {
  static const std::map<std::string, TernarySource> table{
      {"h33-singleton", {3, {{0, 0, 0}}, "[0,6|1,1,4|2,2,2|3,3]", "a singleton in H(3,3)"}},
      {"h33-repetition",
       {3, {{0, 0, 0}, {1, 1, 1}, {2, 2, 2}}, "[0,6|1,3,2|6,0]", "the repetition code in H(3,3)"}},
  };
  return table;
}

inline const std::map<std::string, BinarySource>& binary_sources() {
  static const std::map<std::string, BinarySource> table{
      {"h62-singleton", {3, {{0, 0, 0, 0, 0, 0}}, "[0,6|1,0,5|2,0,4|3,0,3|4,0,2|5,0,1|6,0]", "a singleton in H(6,2)"}},
      {"h62-antipodal",
       {3, {{0, 0, 0, 0, 0, 0}, {1, 1, 1, 1, 1, 1}}, "[0,6|1,0,5|2,0,4|6,0]", "{000000, 111111} in H(6,2)"}},
      {"h62-shortened-perfect",
       {3,
        {{0, 0, 0, 0, 0, 0},
         {0, 0, 1, 0, 1, 1},
         {0, 1, 0, 1, 0, 1},
         {0, 1, 1, 1, 1, 0},
         {1, 0, 0, 1, 1, 0},
         {1, 0, 1, 1, 0, 1},
         {1, 1, 0, 0, 1, 1},
         {1, 1, 1, 0, 0, 0}},
        "[0,6|1,4,1|6,0]",
        "the shortened Hamming code in H(6,2)"}},
      // Block-sum doublings of codes in H(3,2).
      {"h62-doubled-perfect",
       {3,
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 1}, {0, 0, 1, 1, 0, 0}, {0, 0, 1, 1, 1, 1},
         {1, 1, 0, 0, 0, 0}, {1, 1, 0, 0, 1, 1}, {1, 1, 1, 1, 0, 0}, {1, 1, 1, 1, 1, 1},
         {0, 1, 0, 1, 0, 1}, {0, 1, 0, 1, 1, 0}, {0, 1, 1, 0, 0, 1}, {0, 1, 1, 0, 1, 0},
         {1, 0, 0, 1, 0, 1}, {1, 0, 0, 1, 1, 0}, {1, 0, 1, 0, 0, 1}, {1, 0, 1, 0, 1, 0}},
        "[0,6|2,4]",
        "the doubled perfect code {000, 111} of H(3,2)"}},
      {"h62-doubled-singleton",
       {3,
        {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 1}, {0, 0, 1, 1, 0, 0}, {0, 0, 1, 1, 1, 1},
         {1, 1, 0, 0, 0, 0}, {1, 1, 0, 0, 1, 1}, {1, 1, 1, 1, 0, 0}, {1, 1, 1, 1, 1, 1}},
        "[0,6|2,0,4|4,0,2|6,0]",
        "the doubled singleton of H(3,2)"}},
  };
  return table;
}

inline const TernarySource& ternary_source(const std::string& name) {
  const auto& t = ternary_sources();
  const auto it = t.find(name);
  if (it == t.end()) throw Error(Errc::unknown_kind, "unknown ternary source '" + name + "'");
  return it->second;
}

inline const BinarySource& binary_source(const std::string& name) {
  const auto& t = binary_sources();
  const auto it = t.find(name);
  if (it == t.end()) throw Error(Errc::unknown_kind, "unknown binary source '" + name + "'");
  return it->second;
}

}  // namespace crcgrid
