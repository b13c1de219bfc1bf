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

#include "cldp/noise_model.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <string>

#include "cldp/errors.hpp"
#include "cldp/rng.hpp"

namespace cldp {
namespace {

// Stream id for the user->partition permutation; far outside user indices.
constexpr std::uint64_t kAssignmentStream = 0x61737369676eULL;

void require_user_index(int user_index, const CldpConfig& cfg) {
  if (user_index < 1 || user_index > cfg.num_users) {
    throw IndexOutOfRange("user index " + std::to_string(user_index) +
                          " outside [1, " + std::to_string(cfg.num_users) +
                          "]");
  }
}

}  // namespace

void CldpConfig::validate() const {
  if (num_users < 2 || num_users % 2 != 0) {
    throw ConfigError("num_users must be an even integer >= 2, got " +
                      std::to_string(num_users));
  }
  if (tossing_space < 1) {
    throw ConfigError("tossing_space must be >= 1, got " +
                      std::to_string(tossing_space));
  }
  if (window_size < 1) {
    throw ConfigError("window_size must be >= 1, got " +
                      std::to_string(window_size));
  }
  if (!(amplitude > 0.0) || !std::isfinite(amplitude)) {
    throw ConfigError("amplitude must be a positive finite real");
  }
  if (!(period > 0.0) || !std::isfinite(period)) {
    throw ConfigError("period must be a positive finite real");
  }
  if (mode == NoiseMode::kShuffle && window_size % tossing_space != 0) {
    throw ConfigError(
        "shuffle mode requires window_size divisible by tossing_space, got "
        "window_size=" +
        std::to_string(window_size) +
        " tossing_space=" + std::to_string(tossing_space));
  }
}

PartitionAssignment partition_interval(int user_index, const CldpConfig& cfg) {
  cfg.validate();
  require_user_index(user_index, cfg);
  const double width = cfg.period / static_cast<double>(cfg.num_users);
  return PartitionAssignment{
      .user_index = user_index,
      .interval_start = static_cast<double>(user_index - 1) * width,
      .interval_end = static_cast<double>(user_index) * width,
  };
}

TossingGrid tossing_grid(int user_index, const CldpConfig& cfg) {
  cfg.validate();
  require_user_index(user_index, cfg);

  const int k = cfg.tossing_space;
  const auto grid_size =
      static_cast<std::int64_t>(cfg.num_users) * static_cast<std::int64_t>(k);
  const double step = cfg.period / static_cast<double>(grid_size);
  const int half = cfg.num_users / 2;

  TossingGrid grid;
  grid.user_index = user_index;
  grid.points.resize(k);
  grid.amplitudes.resize(k);

  for (int j = 0; j < k; ++j) {
    // Global index on the uniform (u*k)-point grid over [0, period).
    const std::int64_t g = static_cast<std::int64_t>(user_index - 1) * k + j;
    grid.points[j] = static_cast<double>(g) * step;

    if (user_index <= half) {
      const double phase = 2.0 * std::numbers::pi * static_cast<double>(g) /
                           static_cast<double>(grid_size);
      grid.amplitudes[j] = cfg.amplitude * std::sin(phase);
    } else {
      // Antiphase partner: the point half a period earlier. Negating its
      // amplitude realizes sin(x + pi) = -sin(x) exactly, bit for bit.
      const std::int64_t partner = g - grid_size / 2;
      const double phase = 2.0 * std::numbers::pi *
                           static_cast<double>(partner) /
                           static_cast<double>(grid_size);
      double value = -(cfg.amplitude * std::sin(phase));
      if (value == 0.0) value = 0.0;  // canonicalize -0
      grid.amplitudes[j] = value;
    }
  }
  return grid;
}

NoiseVector sample_noise_vector(int user_index, const CldpConfig& cfg,
                                std::uint64_t window_index) {
  cfg.validate();
  require_user_index(user_index, cfg);

  const TossingGrid grid = tossing_grid(user_index, cfg);
  Rng rng(derive_seed(
      derive_seed(cfg.master_seed, static_cast<std::uint64_t>(user_index)),
      window_index));

  NoiseVector noise;
  noise.user_index = user_index;
  noise.values.reserve(cfg.window_size);

  if (cfg.mode == NoiseMode::kShuffle) {
    const int copies = cfg.window_size / cfg.tossing_space;
    for (int c = 0; c < copies; ++c) {
      noise.values.insert(noise.values.end(), grid.amplitudes.begin(),
                          grid.amplitudes.end());
    }
    rng.shuffle(noise.values);
  } else {
    for (int j = 0; j < cfg.window_size; ++j) {
      noise.values.push_back(
          grid.amplitudes[rng.next_index(grid.amplitudes.size())]);
    }
  }
  return noise;
}

std::vector<int> assign_partitions(const CldpConfig& cfg) {
  cfg.validate();
  std::vector<int> mapping(cfg.num_users);
  std::iota(mapping.begin(), mapping.end(), 1);
  if (cfg.randomize_assignment) {
    Rng rng(derive_seed(cfg.master_seed, kAssignmentStream));
    rng.shuffle(mapping);
  }
  return mapping;
}

}  // namespace cldp
