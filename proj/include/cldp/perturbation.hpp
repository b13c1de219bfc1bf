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

#include "cldp/noise_model.hpp"

namespace cldp {

// One user's raw time series.
struct UserSeries {
  int user_index = 0;  // 1-based
  std::vector<double> samples;
};

// One user's perturbed series plus the noise that produced it. The retained
// noise is audit/test-facing only; the simulated transmission to the
// collector carries the perturbed samples exclusively.
struct PerturbedSeries {
  int user_index = 0;
  // Perturbed values, complete windows only (window_count * window_size).
  std::vector<double> samples;
  // The noise vector applied to each window, in window order.
  std::vector<NoiseVector> noise_used;
  // Length of the trailing partial window that was dropped, 0 when the
  // series length is a multiple of the window size.
  long long dropped_samples = 0;
};

// Element-wise window + noise. Throws LengthMismatch when sizes differ.
std::vector<double> perturb_window(std::span<const double> window,
                                   const NoiseVector& noise);

// Perturbs every complete window of the series with a freshly drawn noise
// vector (sub-seeded by window index). `partition_of_user` is the 1-based
// user -> partition map from assign_partitions(); the user's noise is drawn
// from the grid of its assigned partition. A trailing partial window is
// dropped, never padded, and its length is recorded in the result.
PerturbedSeries perturb_user_series(const UserSeries& series,
                                    const CldpConfig& cfg,
                                    const std::vector<int>& partition_of_user);

}  // namespace cldp
