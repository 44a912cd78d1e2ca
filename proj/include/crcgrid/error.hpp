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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace crcgrid {

enum class Errc {
  unsupported_weight,
  empty_cap,
  domain,
  empty_seed,
  malformed_matrix,
  negative_entry,
  inconsistent_row_sum,
  negative_extension,
  residue_out_of_range,
  period_overflow,
  valency_mismatch,
  size_guard,
  no_generator,
  not_enough_cosets,
  unknown_kind,
  io,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::unsupported_weight: return "unsupported-weight";
    case Errc::empty_cap: return "empty-cap";
    case Errc::domain: return "domain";
    case Errc::empty_seed: return "empty-seed";
    case Errc::malformed_matrix: return "malformed-matrix";
    case Errc::negative_entry: return "negative-entry";
    case Errc::inconsistent_row_sum: return "inconsistent-row-sum";
    case Errc::negative_extension: return "negative-extension";
    case Errc::residue_out_of_range: return "residue-out-of-range";
    case Errc::period_overflow: return "period-overflow";
    case Errc::valency_mismatch: return "valency-mismatch";
    case Errc::size_guard: return "size-guard";
    case Errc::no_generator: return "no-generator";
    case Errc::not_enough_cosets: return "not-enough-cosets";
    case Errc::unknown_kind: return "unknown-kind";
    case Errc::io: return "io";
  }
  return "unknown";
}

/// Exception carrying a machine-checkable error code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace crcgrid
