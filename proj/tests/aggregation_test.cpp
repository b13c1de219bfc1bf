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

#include <cmath>
#include <vector>

#include <doctest.h>

#include "cldp/errors.hpp"

using namespace cldp;

namespace {

std::vector<UserSeries> constant_series(int u, int n, double value) {
  std::vector<UserSeries> users;
  for (int i = 1; i <= u; ++i) {
    UserSeries s;
    s.user_index = i;
    s.samples.assign(n, value);
    users.push_back(s);
  }
  return users;
}

std::vector<PerturbedSeries> perturb_all(const std::vector<UserSeries>& users,
                                         const CldpConfig& cfg) {
  const auto mapping = assign_partitions(cfg);
  std::vector<PerturbedSeries> out;
  for (const auto& s : users) out.push_back(perturb_user_series(s, cfg, mapping));
  return out;
}

}  // namespace

TEST_CASE("residual is the element-wise difference") {
  CHECK(residual(std::vector<double>{1.0, 2.0}, std::vector<double>{1.0, 2.0}) ==
        std::vector<double>{0.0, 0.0});
  CHECK(residual(std::vector<double>{1.0, 2.0},
                 std::vector<double>{1.5, 1.5}) ==
        std::vector<double>{0.5, -0.5});
  CHECK_THROWS_AS(
      residual(std::vector<double>{1.0}, std::vector<double>{1.0, 2.0}),
      LengthMismatch);
}

TEST_CASE("residual plus truth reproduces the noisy value exactly") {
  const std::vector<double> truth{1.25, -3.5, 0.0, 1e6};
  const std::vector<double> noisy{1.5, -3.25, 0.125, 1e6 + 0.5};
  const auto r = residual(truth, noisy);
  for (std::size_t j = 0; j < truth.size(); ++j) {
    CHECK(truth[j] + r[j] == noisy[j]);
  }
}

TEST_CASE("aggregating zero users with zero noise gives zeros") {
  CldpConfig cfg;
  cfg.num_users = 2;
  cfg.tossing_space = 1;  // user 1 sits at sin(0)=0, user 2 at sin(pi)=0
  cfg.window_size = 4;
  const auto users = constant_series(2, 8, 0.0);
  const auto report = aggregate_with_truth(perturb_all(users, cfg), users, cfg);
  for (const double v : report.per_timestamp_sum) CHECK(v == 0.0);
  for (const double v : report.per_timestamp_mean) CHECK(v == 0.0);
  for (const double v : report.per_window_total) CHECK(v == 0.0);
  for (const double v : report.residual_noise_per_window) CHECK(v == 0.0);
}

TEST_CASE("report shapes and means") {
  CldpConfig cfg;
  cfg.num_users = 4;
  cfg.tossing_space = 2;
  cfg.window_size = 6;
  cfg.master_seed = 5;
  const auto users = constant_series(4, 14, 2.0);  // 2 windows + 2 dropped
  const auto report = aggregate_with_truth(perturb_all(users, cfg), users, cfg);

  CHECK(report.per_timestamp_sum.size() == 12);
  CHECK(report.per_window_total.size() == 2);
  CHECK(report.residual_noise_per_window.size() == 2);
  CHECK(report.dropped_samples == 4 * 2);
  CHECK(report.num_users == 4);
  for (std::size_t t = 0; t < report.per_timestamp_sum.size(); ++t) {
    CHECK(report.per_timestamp_mean[t] == report.per_timestamp_sum[t] / 4.0);
  }
  // window totals tie back to per-timestamp sums
  double w0 = 0.0;
  for (int t = 0; t < 6; ++t) w0 += report.per_timestamp_sum[t];
  CHECK(report.per_window_total[0] == w0);
}

TEST_CASE("shuffle mode cancels exactly at window-sum level") {
  // the oracle sums every retained noise value per window by brute force
  for (const std::uint64_t seed : {1ull, 2ull, 3ull}) {
    CldpConfig cfg;
    cfg.num_users = 8;
    cfg.tossing_space = 5;
    cfg.window_size = 20;
    cfg.amplitude = 3.0;
    cfg.master_seed = seed;
    const auto users = constant_series(8, 60, 1.5);
    const auto perturbed = perturb_all(users, cfg);
    const auto report = aggregate_with_truth(perturbed, users, cfg);

    const double tol = 1e-9 * cfg.amplitude * cfg.num_users * cfg.window_size;
    REQUIRE(report.residual_noise_per_window.size() == 3);
    for (std::size_t w = 0; w < 3; ++w) {
      double brute = 0.0;
      for (const auto& series : perturbed) {
        for (const double v : series.noise_used[w].values) brute += v;
      }
      CHECK(std::abs(report.residual_noise_per_window[w] - brute) <= tol);
      CHECK(std::abs(report.residual_noise_per_window[w]) <= tol);
    }
  }
}

TEST_CASE("toss mode residuals are centered on zero across seeds") {
  CldpConfig cfg;
  cfg.num_users = 4;
  cfg.tossing_space = 40;
  cfg.window_size = 200;
  cfg.amplitude = 3.0;
  cfg.mode = NoiseMode::kToss;
  const auto users = constant_series(4, 200, 1.0);

  const int seeds = 100;
  std::vector<double> residuals;
  for (int s = 0; s < seeds; ++s) {
    cfg.master_seed = 1000 + s;
    const auto report =
        aggregate_with_truth(perturb_all(users, cfg), users, cfg);
    residuals.push_back(report.residual_noise_per_window[0]);
  }
  double mean = 0.0;
  for (const double r : residuals) mean += r;
  mean /= seeds;
  double var = 0.0;
  for (const double r : residuals) var += (r - mean) * (r - mean);
  var /= (seeds - 1);
  CHECK(std::abs(mean) <= 3.0 * std::sqrt(var / seeds));
}

TEST_CASE("aggregation is linear under per-user shifts") {
  CldpConfig cfg;
  cfg.num_users = 4;
  cfg.tossing_space = 3;
  cfg.window_size = 6;
  cfg.master_seed = 17;
  const auto users = constant_series(4, 12, 1.0);

  auto shifted = users;
  double shift_sum = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double shift = 0.5 * (i + 1);
    shift_sum += shift;
    for (auto& v : shifted[i].samples) v += shift;
  }

  const auto base = aggregate(perturb_all(users, cfg), cfg);
  const auto moved = aggregate(perturb_all(shifted, cfg), cfg);
  for (std::size_t t = 0; t < base.per_timestamp_sum.size(); ++t) {
    CHECK(moved.per_timestamp_sum[t] ==
          doctest::Approx(base.per_timestamp_sum[t] + shift_sum)
              .epsilon(1e-12));
  }
}

TEST_CASE("shape and count mismatches are rejected") {
  CldpConfig cfg;
  cfg.num_users = 2;
  cfg.tossing_space = 1;
  cfg.window_size = 2;
  const auto users = constant_series(2, 4, 1.0);
  auto perturbed = perturb_all(users, cfg);

  auto short_list = perturbed;
  short_list.pop_back();
  CHECK_THROWS_AS(aggregate(short_list, cfg), UserCountMismatch);

  auto uneven = perturbed;
  uneven[1].samples.pop_back();
  CHECK_THROWS_AS(aggregate(uneven, cfg), ShapeMismatch);

  auto short_originals = users;
  short_originals[0].samples.resize(2);
  CHECK_THROWS_AS(aggregate_with_truth(perturbed, short_originals, cfg),
                  ShapeMismatch);
}
