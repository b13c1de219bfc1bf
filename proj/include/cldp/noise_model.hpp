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
#include <vector>

namespace cldp {

// How per-sample noise values are drawn from a user's tossing grid.
//
// kShuffle: the noise vector is a seeded permutation of window_size /
//   tossing_space full copies of the grid amplitudes. Because every user
//   contributes each of its grid amplitudes equally often, the window sum of
//   all noise across all users cancels exactly.
// kToss: every sample's noise is an independent uniform draw (with
//   replacement) from the grid amplitudes. Cancellation then holds only in
//   expectation, which is the regime the break-probability analysis assumes.
enum class NoiseMode {
  kShuffle,
  kToss,
};

// Full parameterization of the cooperative mechanism.
struct CldpConfig {
  int num_users = 4;        // u; must be even and >= 2
  int tossing_space = 40;   // k; grid points per user partition, >= 1
  int window_size = 200;    // l; samples perturbed per window, >= 1
  double amplitude = 3.0;   // A; peak noise magnitude, in data units
  double period = 1.0;      // T; abstract phase length of one sine cycle
  NoiseMode mode = NoiseMode::kShuffle;
  std::uint64_t master_seed = 0;
  // When true, users are mapped onto sine-wave partitions by a seeded
  // permutation instead of the identity.
  bool randomize_assignment = false;

  // Throws ConfigError when any invariant is violated:
  //   num_users even and >= 2; tossing_space, window_size >= 1;
  //   amplitude, period > 0; shuffle mode needs window_size % tossing_space
  //   == 0 so the noise multiset holds whole copies of the grid.
  void validate() const;
};

// The phase interval [interval_start, interval_end) owned by one user.
// Intervals of all users tile [0, period) exactly.
struct PartitionAssignment {
  int user_index = 0;  // 1-based
  double interval_start = 0.0;
  double interval_end = 0.0;
};

// A user's k tossing points and the sine amplitudes at those points.
struct TossingGrid {
  int user_index = 0;
  std::vector<double> points;      // phases, ascending, inside the partition
  std::vector<double> amplitudes;  // amplitude * sin(2*pi*point/period)
};

// Noise values for one window of one user.
struct NoiseVector {
  int user_index = 0;
  std::vector<double> values;  // window_size entries, each |v| <= amplitude
};

// Returns the phase interval of the given user (1-based).
// Throws IndexOutOfRange for indices outside [1, num_users].
PartitionAssignment partition_interval(int user_index, const CldpConfig& cfg);

// Builds the user's tossing grid: k equally spaced points covering the
// user's partition, starting at its left edge with step (period/num_users)/
// tossing_space. Point j of user i sits at global grid index (i-1)*k + j, so
// the union of all users' points is exactly the uniform (u*k)-point grid
// over [0, period).
//
// Amplitudes for the second half of the users are stored as the exact
// negation of their antiphase partner (sin(x + pi) = -sin(x)); this keeps
// the cancellation identity exact in floating point instead of merely
// approximate.
TossingGrid tossing_grid(int user_index, const CldpConfig& cfg);

// Draws the noise vector for one window of the given user/partition.
// Randomness comes from the stream derived from (master_seed, user_index,
// window_index), so users and windows never share a stream and adding one
// never disturbs another.
NoiseVector sample_noise_vector(int user_index, const CldpConfig& cfg,
                                std::uint64_t window_index = 0);

// Maps user -> partition, 1-based on both sides. Identity unless
// cfg.randomize_assignment, in which case a permutation seeded from the
// master seed is used.
std::vector<int> assign_partitions(const CldpConfig& cfg);

}  // namespace cldp
