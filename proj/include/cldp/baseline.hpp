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

#include "cldp/perturbation.hpp"

namespace cldp {

// Conventional value-perturbation baseline: independent zero-mean Laplace
// noise on every sample, scale b = sensitivity / epsilon.
struct LaplaceConfig {
  double epsilon = 1.0;
  double sensitivity = 1.0;
  std::uint64_t seed = 0;

  void validate() const;  // throws DomainError on non-positive parameters
};

double laplace_scale(const LaplaceConfig& cfg);

// Adds i.i.d. Laplace noise to every sample. Sampling is an inverse-CDF
// transform of a seeded uniform stream, so identical seeds reproduce
// identical output on every platform. The injected noise is retained as a
// single whole-series NoiseVector for the audit tests; nothing is windowed
// or dropped.
PerturbedSeries laplace_perturb(const UserSeries& series,
                                const LaplaceConfig& cfg);

}  // namespace cldp
