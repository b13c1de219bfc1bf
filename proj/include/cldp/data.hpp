// Copyright 2026 The CLDP Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cldp/perturbation.hpp"

namespace cldp {

// One numeric column extracted from an input file (or generated).
struct RawDataset {
  std::string column_name;
  std::vector<double> values;
  // Rows whose requested cell was the `?` missing marker (or empty); they
  // are skipped, never imputed.
  long long rows_skipped = 0;
  std::string source;  // file path, or "synthetic"
};

enum class SynthSignal {
  kConstant,
  kSinusoid,
  kRandomWalk,
};

// Parameters of the synthetic multi-user generator.
struct SynthSpec {
  int num_users = 4;
  int samples_per_user = 1000;
  SynthSignal signal = SynthSignal::kRandomWalk;
  double level = 5.0;      // base value of every signal
  double amplitude = 1.0;  // sinusoid amplitude
  double period = 100.0;   // sinusoid period, in samples
  double step_std = 0.25;  // random-walk step standard deviation
  std::uint64_t seed = 0;

  void validate() const;  // throws DomainError
};

// Loads one column from the household power consumption format:
// semicolon-delimited, one header row (Date;Time;Global_active_power;...),
// missing values encoded as `?`. Skipped rows are counted, malformed rows
// raise ParseError with their line number.
RawDataset load_power_csv(const std::string& path,
                          const std::string& column_name);

// u contiguous equal-length segments of floor(n/u) samples each; the tail
// remainder is dropped and reported.
struct SplitResult {
  std::vector<UserSeries> users;
  long long dropped_samples = 0;
};
SplitResult split_users(const RawDataset& data, int num_users);

// Deterministic synthetic series, one per user, each drawn from a stream
// derived from (seed, user_index).
std::vector<UserSeries> synth_series(const SynthSpec& spec);

// Plain CSV export: one header row with the column name, then one value per
// row at full round-trip precision.
void export_csv(const RawDataset& data, const std::string& path);

// Reads a file written by export_csv; values reproduce bit-identically.
RawDataset import_csv(const std::string& path);

}  // namespace cldp
