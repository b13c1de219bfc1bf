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

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

namespace cldp {

// splitmix64 finalizer. Scrambles a 64-bit value into a well-mixed one.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Derives a child seed from a parent seed and a stream id. Calls chain to
// form hierarchical streams, e.g. derive_seed(derive_seed(master, user),
// window). Streams with distinct ids never collide in practice, so adding a
// user or a window leaves every other stream untouched.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  return mix64(base ^ mix64(stream));
}

// Deterministic random stream. The raw engine (mt19937_64) is bit-exact
// across platforms per the standard; the transforms below are hand-rolled
// because the standard <random> distributions are implementation-defined.
// Identical seeds therefore reproduce identical values everywhere, which the
// golden-file and determinism tests rely on.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1), 53 random bits.
  double next_double() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform index in [0, n). Consumes exactly one engine draw regardless of
  // n, so streams at different n stay aligned draw-for-draw. The floor
  // mapping carries a bias of order n/2^53, irrelevant at simulation scale.
  std::size_t next_index(std::size_t n) {
    const auto i =
        static_cast<std::size_t>(next_double() * static_cast<double>(n));
    return i < n ? i : n - 1;
  }

  // In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::swap(values[i - 1], values[next_index(i)]);
    }
  }

  // Standard normal via the Box-Muller transform; two draws per value.
  double next_normal() {
    const double u1 = 1.0 - next_double();  // (0, 1], keeps log finite
    const double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

  // Zero-mean Laplace with the given scale, inverse-CDF transform.
  double next_laplace(double scale) {
    double u = next_double();
    if (u == 0.0) u = 0x1.0p-53;
    const double w = u - 0.5;
    const double mag = std::log1p(-2.0 * std::abs(w));  // <= 0
    return w < 0.0 ? scale * mag : -scale * mag;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cldp
