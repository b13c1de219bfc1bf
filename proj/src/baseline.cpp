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

#include "cldp/baseline.hpp"

#include <cmath>

#include "cldp/errors.hpp"
#include "cldp/rng.hpp"

namespace cldp {

void LaplaceConfig::validate() const {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw DomainError("epsilon must be a positive finite real");
  }
  if (!(sensitivity > 0.0) || !std::isfinite(sensitivity)) {
    throw DomainError("sensitivity must be a positive finite real");
  }
}

double laplace_scale(const LaplaceConfig& cfg) {
  cfg.validate();
  return cfg.sensitivity / cfg.epsilon;
}

PerturbedSeries laplace_perturb(const UserSeries& series,
                                const LaplaceConfig& cfg) {
  const double scale = laplace_scale(cfg);
  Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(series.user_index)));

  PerturbedSeries out;
  out.user_index = series.user_index;
  out.samples.reserve(series.samples.size());

  NoiseVector noise;
  noise.user_index = series.user_index;
  noise.values.reserve(series.samples.size());

  for (const double sample : series.samples) {
    const double lambda = rng.next_laplace(scale);
    noise.values.push_back(lambda);
    out.samples.push_back(sample + lambda);
  }
  out.noise_used.push_back(std::move(noise));
  return out;
}

}  // namespace cldp
