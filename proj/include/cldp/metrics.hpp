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

#include <optional>
#include <span>

#include "cldp/aggregation.hpp"

namespace cldp {

// Privacy-side summary for one parameter choice. The epsilon value is a
// proxy: the mechanism specifies only the proportionality
// epsilon ~ (l*u)/(A*k), so the constant is configuration and the raw
// parameters are echoed alongside to avoid implying false precision.
struct PrivacyReport {
  int tossing_space = 0;  // k
  int window_size = 0;    // l
  int num_users = 0;      // u
  double amplitude = 0.0;
  double epsilon_constant = 1.0;
  double epsilon_proxy = 0.0;
  // log10 of (1/k)^(l*u) = -l*u*log10(k). Kept in log space; the linear
  // value underflows a double for ordinary parameters.
  double break_probability_log10 = 0.0;
  // Linear value, present only when it does not underflow (>= 1e-300).
  std::optional<double> break_probability;
};

// Mean squared element-wise difference. Throws LengthMismatch on unequal
// sizes and EmptyInput on empty input.
double mse(std::span<const double> a, std::span<const double> b);

// c * (l*u) / (A*k). Throws DomainError unless every argument is positive.
double epsilon_proxy(int tossing_space, int window_size, int num_users,
                     double amplitude, double epsilon_constant = 1.0);

// -l*u*log10(k). Throws DomainError on non-positive counts.
double break_probability_log10(int tossing_space, int window_size,
                               int num_users);

// Full report combining the two measures above.
PrivacyReport privacy_report(int tossing_space, int window_size, int num_users,
                             double amplitude, double epsilon_constant = 1.0);

// Collector-side utility loss: mean over windows of the squared per-sample
// discrepancy ((noisy_total - true_total) / window_size)^2. Normalizing by
// the window size keeps values comparable across window sizes; it is the
// per-sample error of the aggregate the cancellation is meant to protect.
// Throws ShapeMismatch when the truth length differs from the report.
double aggregate_error(const AggregateReport& report,
                       std::span<const double> true_window_totals);

// Same, but reads the residuals already stored in the report (requires
// aggregate_with_truth; throws DomainError when residuals are absent).
double aggregate_error(const AggregateReport& report);

}  // namespace cldp
