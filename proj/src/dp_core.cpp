// Copyright 2026 The hdplib Authors
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

#include "hdp/dp_core.hpp"

#include <cmath>

namespace hdp {

PrivacyBudget::PrivacyBudget(double epsilon) : epsilon_(epsilon) {
  if (!(epsilon > 0) || !std::isfinite(epsilon)) {
    throw InvalidParameterError("epsilon must be finite and positive");
  }
}

Sensitivity::Sensitivity(double value) : value_(value) {
  if (!(value >= 0) || !std::isfinite(value)) {
    throw InvalidParameterError("sensitivity must be finite and non-negative");
  }
}

LaplaceScale::LaplaceScale(double sigma) : sigma_(sigma) {
  if (!(sigma > 0) || !std::isfinite(sigma)) {
    throw InvalidParameterError("laplace scale must be finite and positive");
  }
}

LaplaceScale LaplaceScale::from_budget(Sensitivity sensitivity, PrivacyBudget budget) {
  if (sensitivity.value() == 0) {
    throw InvalidParameterError(
        "zero sensitivity would release the exact value; refusing to build a "
        "zero noise scale");
  }
  return LaplaceScale(sensitivity.value() / budget.epsilon());
}

double laplace_inverse_cdf(double sigma, double u) {
  if (!(sigma > 0)) {
    throw InvalidParameterError("laplace scale must be positive");
  }
  if (!(u > 0) || !(u < 1)) {
    throw InvalidParameterError("quantile argument must lie in (0, 1)");
  }
  const double centered = u - 0.5;
  if (centered == 0) return 0.0;
  const double magnitude = -sigma * std::log(1.0 - 2.0 * std::abs(centered));
  return centered < 0 ? -magnitude : magnitude;
}

double laplace_sample(LaplaceScale scale, RandomStream& rng) {
  return laplace_inverse_cdf(scale.sigma(), rng.next_unit_open());
}

MechanismOutput laplacian_mechanism(double true_value, Sensitivity sensitivity,
                                    PrivacyBudget budget, RandomStream& rng,
                                    NoiseMode noise) {
  const LaplaceScale scale = LaplaceScale::from_budget(sensitivity, budget);
  const double noised =
      noise == NoiseMode::laplace ? true_value + laplace_sample(scale, rng) : true_value;
  return MechanismOutput(noised, scale, true_value);
}

}  // namespace hdp
