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

#include <span>
#include <vector>

#include "cldp/perturbation.hpp"

namespace cldp {

// Collector-side view of one aggregation round.
struct AggregateReport {
  // Sum across users at each sample index.
  std::vector<double> per_timestamp_sum;
  // per_timestamp_sum / num_users.
  std::vector<double> per_timestamp_mean;
  // Sum of per_timestamp_sum over each complete window.
  std::vector<double> per_window_total;
  // Noisy window total minus true window total. Filled only when the
  // harness supplied ground truth (aggregate_with_truth); the collector API
  // itself never sees originals.
  std::vector<double> residual_noise_per_window;
  // Total samples dropped by windowing across all users.
  long long dropped_samples = 0;
  // Echoed parameters, so downstream metrics can normalize.
  int num_users = 0;
  int window_size = 0;
};

// Aggregates perturbed series from all users: per-timestamp sums/means plus
// per-window totals. Requires exactly cfg.num_users series
// (UserCountMismatch) of equal length (ShapeMismatch).
AggregateReport aggregate(const std::vector<PerturbedSeries>& users,
                          const CldpConfig& cfg);

// Test-harness variant: additionally computes residual_noise_per_window
// against the true aggregates derived from `originals` (trimmed to the
// windowed length). Throws ShapeMismatch when an original series is shorter
// than its perturbed counterpart.
AggregateReport aggregate_with_truth(const std::vector<PerturbedSeries>& users,
                                     const std::vector<UserSeries>& originals,
                                     const CldpConfig& cfg);

// Sum over consecutive blocks of window_size entries; a trailing partial
// block is ignored.
std::vector<double> window_totals(std::span<const double> per_timestamp,
                                  int window_size);

// Element-wise noisy - true. Throws LengthMismatch when sizes differ.
std::vector<double> residual(std::span<const double> true_aggregate,
                             std::span<const double> noisy_aggregate);

}  // namespace cldp
