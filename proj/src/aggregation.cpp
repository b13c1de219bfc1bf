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

#include "cldp/aggregation.hpp"

#include <string>

#include "cldp/errors.hpp"

namespace cldp {

std::vector<double> window_totals(std::span<const double> per_timestamp,
                                  int window_size) {
  if (window_size < 1) {
    throw DomainError("window_size must be >= 1");
  }
  const auto window = static_cast<std::size_t>(window_size);
  const std::size_t count = per_timestamp.size() / window;
  std::vector<double> totals(count, 0.0);
  for (std::size_t w = 0; w < count; ++w) {
    double sum = 0.0;
    for (std::size_t j = 0; j < window; ++j) {
      sum += per_timestamp[w * window + j];
    }
    totals[w] = sum;
  }
  return totals;
}

std::vector<double> residual(std::span<const double> true_aggregate,
                             std::span<const double> noisy_aggregate) {
  if (true_aggregate.size() != noisy_aggregate.size()) {
    throw LengthMismatch("true aggregate has " +
                         std::to_string(true_aggregate.size()) +
                         " entries but noisy aggregate has " +
                         std::to_string(noisy_aggregate.size()));
  }
  std::vector<double> out(true_aggregate.size());
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] = noisy_aggregate[j] - true_aggregate[j];
  }
  return out;
}

AggregateReport aggregate(const std::vector<PerturbedSeries>& users,
                          const CldpConfig& cfg) {
  cfg.validate();
  if (users.size() != static_cast<std::size_t>(cfg.num_users)) {
    throw UserCountMismatch("got " + std::to_string(users.size()) +
                            " perturbed series for " +
                            std::to_string(cfg.num_users) + " users");
  }
  const std::size_t length = users.front().samples.size();
  for (const auto& series : users) {
    if (series.samples.size() != length) {
      throw ShapeMismatch("user " + std::to_string(series.user_index) +
                          " has " + std::to_string(series.samples.size()) +
                          " samples, expected " + std::to_string(length));
    }
  }

  AggregateReport report;
  report.num_users = cfg.num_users;
  report.window_size = cfg.window_size;
  report.per_timestamp_sum.assign(length, 0.0);
  for (const auto& series : users) {
    report.dropped_samples += series.dropped_samples;
    for (std::size_t t = 0; t < length; ++t) {
      report.per_timestamp_sum[t] += series.samples[t];
    }
  }
  report.per_timestamp_mean.resize(length);
  for (std::size_t t = 0; t < length; ++t) {
    report.per_timestamp_mean[t] =
        report.per_timestamp_sum[t] / static_cast<double>(cfg.num_users);
  }
  report.per_window_total =
      window_totals(report.per_timestamp_sum, cfg.window_size);
  return report;
}

AggregateReport aggregate_with_truth(const std::vector<PerturbedSeries>& users,
                                     const std::vector<UserSeries>& originals,
                                     const CldpConfig& cfg) {
  AggregateReport report = aggregate(users, cfg);
  if (originals.size() != users.size()) {
    throw ShapeMismatch("got " + std::to_string(originals.size()) +
                        " original series for " +
                        std::to_string(users.size()) + " perturbed series");
  }
  const std::size_t length = report.per_timestamp_sum.size();
  std::vector<double> true_sum(length, 0.0);
  for (const auto& series : originals) {
    if (series.samples.size() < length) {
      throw ShapeMismatch("original series of user " +
                          std::to_string(series.user_index) +
                          " is shorter than its perturbed counterpart");
    }
    for (std::size_t t = 0; t < length; ++t) {
      true_sum[t] += series.samples[t];
    }
  }
  report.residual_noise_per_window =
      residual(window_totals(true_sum, cfg.window_size),
               report.per_window_total);
  return report;
}

}  // namespace cldp
