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
#include <optional>
#include <string>
#include <vector>

#include "cldp/aggregation.hpp"
#include "cldp/data.hpp"
#include "cldp/metrics.hpp"

namespace cldp {

// Where experiment input comes from: a column of a power-consumption CSV
// (loaded eagerly, cached for the whole sweep) or the synthetic generator.
class DataSource {
 public:
  static DataSource from_csv(const std::string& path,
                             const std::string& column_name);
  static DataSource from_synth(const SynthSpec& spec);

  // Materializes one series per user. CSV data is split into contiguous
  // equal segments; synthetic data is generated with num_users overriding
  // the spec's user count (per-user streams make the first users identical
  // regardless of the total).
  std::vector<UserSeries> users(int num_users) const;

  bool is_synthetic() const { return !dataset_.has_value(); }
  const std::string& description() const { return description_; }

 private:
  DataSource() = default;

  std::optional<RawDataset> dataset_;
  SynthSpec synth_;
  std::string description_;
};

// One full mechanism round on fixed data: perturb every user, aggregate,
// score. The harness holds the originals, so residuals are available.
struct RunResult {
  std::vector<PerturbedSeries> perturbed;
  AggregateReport report;  // residual_noise_per_window filled
  std::vector<double> per_user_mse;
  double mse_per_sample = 0.0;   // mean of per_user_mse
  double aggregate_error = 0.0;  // per-sample window-total discrepancy
};

RunResult run_once(const std::vector<UserSeries>& users,
                   const CldpConfig& cfg);

enum class SweepParam {
  kTossingSpace,  // k
  kWindowSize,    // l
  kNumUsers,      // u
  kAmplitude,     // A
};

// "k", "l", "u" or "A".
std::string sweep_param_name(SweepParam param);

// One experiment: vary a single parameter over a value list, re-running
// each point with `repetitions` consecutive master seeds (base.master_seed,
// +1, +2, ...). The same seeds and the same data are used at every point,
// so adjacent points differ only through the swept parameter.
struct SweepSpec {
  SweepParam param = SweepParam::kTossingSpace;
  std::vector<double> values;
  CldpConfig base;  // fixed parameters; master_seed is the base seed
  int repetitions = 30;
  double epsilon_constant = 1.0;

  // Throws ConfigError/DomainError when the value list is empty, a count
  // parameter is swept over a non-integer, or any resulting configuration
  // violates the CldpConfig invariants.
  void validate() const;

  // base with the swept parameter replaced by `value`.
  CldpConfig config_for(double value) const;
};

// One row per (swept value, seed), ordered by ascending value then seed.
struct SweepRow {
  SweepParam param = SweepParam::kTossingSpace;
  double swept_value = 0.0;
  std::uint64_t seed = 0;
  double mse_per_sample = 0.0;
  double aggregate_error = 0.0;
  double epsilon_proxy = 0.0;
  double log10_pbreak = 0.0;
  double wall_ms = 0.0;  // 0 unless timing was requested
};

// Per-swept-value mean and sample standard deviation over seeds.
struct SweepSummaryRow {
  SweepParam param = SweepParam::kTossingSpace;
  double swept_value = 0.0;
  double mse_mean = 0.0;
  double mse_std = 0.0;
  double aggerr_mean = 0.0;
  double aggerr_std = 0.0;
};

struct SweepOptions {
  // Wall-clock timing makes output files run-dependent, so it is opt-in;
  // with it off the rows are byte-identical across runs.
  bool timing = false;
};

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const DataSource& source,
                                const SweepOptions& options = {});

std::vector<SweepSummaryRow> summarize(const std::vector<SweepRow>& rows);

// Writers for the two sweep output schemas:
//   rows:    swept_param,swept_value,seed,mse_per_sample,aggregate_error,
//            epsilon_proxy,log10_pbreak,wall_ms
//   summary: swept_param,swept_value,mse_mean,mse_std,aggerr_mean,aggerr_std
void write_sweep_csv(const std::vector<SweepRow>& rows,
                     const std::string& path);
void write_summary_csv(const std::vector<SweepSummaryRow>& rows,
                       const std::string& path);

}  // namespace cldp
