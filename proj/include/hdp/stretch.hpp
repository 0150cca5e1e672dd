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

#include <span>
#include <vector>

#include "hdp/dp_core.hpp"
#include "hdp/query.hpp"

namespace hdp {

/// Per-item privacy weights in [0, 1]. 0 is absolute privacy (the item
/// cannot influence the output), 1 is standard epsilon-DP.
class PrivacyVector {
 public:
  explicit PrivacyVector(std::vector<double> weights);

  /// All-ones vector: the default weight for unspecified items is 1.
  static PrivacyVector ones(std::size_t n);

  std::size_t size() const { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }
  std::span<const double> weights() const { return weights_; }

 private:
  std::vector<double> weights_;
};

/// Diagonal matrix with entries in [0, 1], stored as its diagonal only.
class ShrinkageMatrix {
 public:
  explicit ShrinkageMatrix(std::vector<double> diagonal);

  static ShrinkageMatrix identity(std::size_t n);

  std::size_t size() const { return diagonal_.size(); }
  double operator[](std::size_t i) const { return diagonal_[i]; }
  std::span<const double> diagonal() const { return diagonal_; }
  double min_entry() const;
  bool is_identity() const;

 private:
  std::vector<double> diagonal_;
};

/// A solved stretch: the shrink diagonal w, the certified per-coordinate
/// sensitivities S_i of the one-coordinate-shrunk function at the solved
/// w_i, and the base sensitivity S(f) that fixes the public noise scale.
struct StretchSpec {
  ShrinkageMatrix shrink;
  std::vector<Sensitivity> certified_modular_sensitivities;
  Sensitivity base_sensitivity;
};

/// Coordinate-wise product diagonal[i] * d[i].
std::vector<double> stretch_profile(std::span<const double> profile_vector,
                                    const ShrinkageMatrix& shrink);

/// Solves max w_i subject to S_i(R, (1,..,w_i,..,1)) <= v_i * S(f) by
/// bisection (64 iterations max). Returns the largest weight verified
/// feasible, within `tolerance` of the boundary. Detects non-monotone
/// sensitivity evaluators and reports them as contract violations.
double solve_shrink_weight(const QuerySpec& query, std::size_t coordinate, double v_i,
                           double tolerance = 1e-9);

/// Per-coordinate solve (closed form when the query has one, bisection
/// otherwise). The resulting spec certifies S_i <= v_i * S(f) for every i.
StretchSpec build_stretch_spec(const QuerySpec& query, const PrivacyVector& v,
                               double tolerance = 1e-9);

/// The full mechanism: f(T(v) * d) + Laplace(S(f) / epsilon). The noise
/// scale depends only on S(f) and epsilon, never on v or d; the solved
/// weights and the certified sensitivities stay internal.
MechanismOutput hdp_estimate(const QuerySpec& query, std::span<const double> d,
                             const PrivacyVector& v, PrivacyBudget budget, RandomStream& rng,
                             NoiseMode noise = NoiseMode::laplace);

/// Upper bound on |f(d) - f(T(v) d)|: max over a uniform grid of c in [0,1]
/// of (1 - min_i w_i) * |grad f(B d)| * |d| with B = c I + (1-c) T(v).
/// For the pair scalar product the maximum sits at c = 1 and the bound
/// collapses to (1 - min_i w_i) * |d|^2, which is used directly.
double distortion_bound(const QuerySpec& query, std::span<const double> d,
                        const StretchSpec& spec, int grid = 129);

}  // namespace hdp
