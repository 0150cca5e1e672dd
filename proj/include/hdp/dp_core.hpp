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

#pragma once

#include "hdp/errors.hpp"
#include "hdp/random.hpp"

namespace hdp {

/// Unitless privacy parameter epsilon. Smaller means stronger privacy.
class PrivacyBudget {
 public:
  explicit PrivacyBudget(double epsilon);
  double epsilon() const { return epsilon_; }

 private:
  double epsilon_;
};

/// Global sensitivity of a query: the maximum output change between any two
/// neighboring inputs. Non-negative and finite.
class Sensitivity {
 public:
  explicit Sensitivity(double value);
  double value() const { return value_; }

 private:
  double value_;
};

/// Scale parameter of a centered Laplace distribution, in output units.
class LaplaceScale {
 public:
  explicit LaplaceScale(double sigma);

  /// sigma = sensitivity / epsilon. Zero sensitivity is rejected: a zero
  /// noise scale would release the exact value.
  static LaplaceScale from_budget(Sensitivity sensitivity, PrivacyBudget budget);

  double sigma() const { return sigma_; }

 private:
  double sigma_;
};

/// Test/baseline hook: `suppressed` skips the noising step and releases the
/// (possibly stretched) value exactly. Never use it on real data.
enum class NoiseMode { laplace, suppressed };

/// One noised release. The pre-noise value stays behind a test-only accessor
/// and is never serialized.
class MechanismOutput {
 public:
  MechanismOutput(double released, LaplaceScale scale, double true_value)
      : released_(released), noise_scale_(scale), true_value_(true_value) {}

  double released() const { return released_; }
  LaplaceScale noise_scale() const { return noise_scale_; }

  /// Pre-noise value, for tests and oracles only.
  double true_value_for_testing() const { return true_value_; }

 private:
  double released_;
  LaplaceScale noise_scale_;
  double true_value_;
};

/// Quantile function of the centered Laplace distribution with scale sigma.
/// u must lie in (0, 1); u = 0.5 maps to exactly 0.
double laplace_inverse_cdf(double sigma, double u);

/// Draws one Laplace sample. Consumes exactly one uniform from the stream,
/// so replay only needs call counts.
double laplace_sample(LaplaceScale scale, RandomStream& rng);

/// The plain Laplacian mechanism: true_value + Laplace(sensitivity/epsilon).
MechanismOutput laplacian_mechanism(double true_value, Sensitivity sensitivity,
                                    PrivacyBudget budget, RandomStream& rng,
                                    NoiseMode noise = NoiseMode::laplace);

}  // namespace hdp
