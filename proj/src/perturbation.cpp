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

#include "cldp/perturbation.hpp"

#include <cstdint>
#include <string>

#include "cldp/errors.hpp"

namespace cldp {

std::vector<double> perturb_window(std::span<const double> window,
                                   const NoiseVector& noise) {
  if (window.size() != noise.values.size()) {
    throw LengthMismatch("window has " + std::to_string(window.size()) +
                         " samples but noise vector has " +
                         std::to_string(noise.values.size()));
  }
  std::vector<double> perturbed(window.size());
  for (std::size_t j = 0; j < window.size(); ++j) {
    perturbed[j] = window[j] + noise.values[j];
  }
  return perturbed;
}

PerturbedSeries perturb_user_series(
    const UserSeries& series, const CldpConfig& cfg,
    const std::vector<int>& partition_of_user) {
  cfg.validate();
  if (series.samples.empty()) {
    throw EmptyInput("user " + std::to_string(series.user_index) +
                     " has an empty series");
  }
  if (series.user_index < 1 || series.user_index > cfg.num_users) {
    throw IndexOutOfRange("user index " + std::to_string(series.user_index) +
                          " outside [1, " + std::to_string(cfg.num_users) +
                          "]");
  }
  if (partition_of_user.size() != static_cast<std::size_t>(cfg.num_users)) {
    throw ShapeMismatch("partition mapping has " +
                        std::to_string(partition_of_user.size()) +
                        " entries for " + std::to_string(cfg.num_users) +
                        " users");
  }

  const int partition = partition_of_user[series.user_index - 1];
  const auto window = static_cast<std::size_t>(cfg.window_size);
  const std::size_t window_count = series.samples.size() / window;

  PerturbedSeries out;
  out.user_index = series.user_index;
  out.dropped_samples =
      static_cast<long long>(series.samples.size() - window_count * window);
  out.samples.reserve(window_count * window);
  out.noise_used.reserve(window_count);

  for (std::size_t w = 0; w < window_count; ++w) {
    NoiseVector noise =
        sample_noise_vector(partition, cfg, static_cast<std::uint64_t>(w));
    const std::span<const double> block(series.samples.data() + w * window,
                                        window);
    auto perturbed = perturb_window(block, noise);
    out.samples.insert(out.samples.end(), perturbed.begin(), perturbed.end());
    out.noise_used.push_back(std::move(noise));
  }
  return out;
}

}  // namespace cldp
