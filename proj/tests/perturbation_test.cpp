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

#include <cmath>
#include <vector>

#include <doctest.h>

#include "cldp/errors.hpp"
#include "cldp/metrics.hpp"
#include "cldp/rng.hpp"

using namespace cldp;

namespace {

CldpConfig toss_config(int u, int k, int l, double A, std::uint64_t seed) {
  CldpConfig cfg;
  cfg.num_users = u;
  cfg.tossing_space = k;
  cfg.window_size = l;
  cfg.amplitude = A;
  cfg.mode = NoiseMode::kToss;
  cfg.master_seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("perturb_window adds element-wise") {
  NoiseVector noise{1, {0.5, -0.5}};
  CHECK(perturb_window(std::vector<double>{1.0, 2.0}, noise) ==
        std::vector<double>{1.5, 1.5});

  // zero window returns the noise itself
  CHECK(perturb_window(std::vector<double>{0.0, 0.0}, noise) ==
        std::vector<double>{0.5, -0.5});

  // zero noise returns the window: user 1 of u=2 with k=1 sits at sin(0)=0
  CldpConfig cfg;
  cfg.num_users = 2;
  cfg.tossing_space = 1;
  cfg.window_size = 2;
  const auto zero_noise = sample_noise_vector(1, cfg);
  CHECK(perturb_window(std::vector<double>{3.0, 4.0}, zero_noise) ==
        std::vector<double>{3.0, 4.0});

  CHECK_THROWS_AS(perturb_window(std::vector<double>{1.0}, noise),
                  LengthMismatch);
}

TEST_CASE("windowing splits the series and drops the tail") {
  CldpConfig cfg;
  cfg.num_users = 4;
  cfg.tossing_space = 5;
  cfg.window_size = 10;
  cfg.master_seed = 3;
  const auto mapping = assign_partitions(cfg);

  UserSeries series;
  series.user_index = 2;
  series.samples.assign(20, 1.0);
  auto perturbed = perturb_user_series(series, cfg, mapping);
  CHECK(perturbed.samples.size() == 20);
  CHECK(perturbed.noise_used.size() == 2);
  CHECK(perturbed.dropped_samples == 0);

  series.samples.assign(23, 1.0);
  perturbed = perturb_user_series(series, cfg, mapping);
  CHECK(perturbed.samples.size() == 20);
  CHECK(perturbed.noise_used.size() == 2);
  CHECK(perturbed.dropped_samples == 3);

  series.samples.clear();
  CHECK_THROWS_AS(perturb_user_series(series, cfg, mapping), EmptyInput);
}

TEST_CASE("repeat runs are identical, windows differ") {
  CldpConfig cfg = toss_config(4, 7, 6, 2.0, 99);
  const auto mapping = assign_partitions(cfg);
  UserSeries series;
  series.user_index = 1;
  for (int t = 0; t < 18; ++t) series.samples.push_back(0.1 * t);

  const auto a = perturb_user_series(series, cfg, mapping);
  const auto b = perturb_user_series(series, cfg, mapping);
  CHECK(a.samples == b.samples);
  REQUIRE(a.noise_used.size() == 3);
  // fresh noise per window
  CHECK(a.noise_used[0].values != a.noise_used[1].values);
}

TEST_CASE("perturbation is auditable and bounded") {
  const double A = 3.0;
  CldpConfig cfg = toss_config(4, 11, 25, A, 7);
  const auto mapping = assign_partitions(cfg);

  UserSeries series;
  series.user_index = 3;
  Rng data_rng(42);
  for (int t = 0; t < 100; ++t)
    series.samples.push_back(8.0 * data_rng.next_double());

  const auto perturbed = perturb_user_series(series, cfg, mapping);
  REQUIRE(perturbed.samples.size() == 100);
  for (std::size_t t = 0; t < perturbed.samples.size(); ++t) {
    const double lambda =
        perturbed.noise_used[t / 25].values[t % 25];
    // perturbed - noise recovers the original up to one rounding of the
    // single addition
    CHECK(perturbed.samples[t] - lambda ==
          doctest::Approx(series.samples[t]).epsilon(1e-12));
    CHECK(std::abs(perturbed.samples[t] - series.samples[t]) <=
          A * (1.0 + 1e-12));
  }
}

TEST_CASE("single-user shuffle MSE matches the closed form when l = k") {
  // mean of squared grid amplitudes; the multiset is fixed, only the order
  // varies, so the value is exact for any seed
  const int k = 8;
  CldpConfig cfg;
  cfg.num_users = 4;
  cfg.tossing_space = k;
  cfg.window_size = k;
  cfg.amplitude = 2.5;
  cfg.master_seed = 77;
  const auto mapping = assign_partitions(cfg);

  UserSeries series;
  series.user_index = 2;
  series.samples.assign(k, 1.25);
  const auto perturbed = perturb_user_series(series, cfg, mapping);

  const auto grid = tossing_grid(2, cfg);
  double expected = 0.0;
  for (const double a : grid.amplitudes) expected += a * a;
  expected /= k;

  CHECK(mse(series.samples, perturbed.samples) ==
        doctest::Approx(expected).epsilon(1e-12));
}
