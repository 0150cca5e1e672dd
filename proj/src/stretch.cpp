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

#include "hdp/stretch.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hdp/errors.hpp"

namespace hdp {

namespace {

void require_unit_range(std::span<const double> values, const char* what) {
  for (double v : values) {
    if (!(v >= 0.0 && v <= 1.0) || !std::isfinite(v)) {
      throw InvalidParameterError(std::string(what) + " entries must lie in [0, 1]");
    }
  }
}

double norm2(std::span<const double> v) {
  double sum = 0.0;
  for (double x : v) sum += x * x;
  return std::sqrt(sum);
}

}  // namespace

PrivacyVector::PrivacyVector(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) {
    throw InvalidParameterError("privacy vector must not be empty");
  }
  require_unit_range(weights_, "privacy vector");
}

PrivacyVector PrivacyVector::ones(std::size_t n) {
  return PrivacyVector(std::vector<double>(n, 1.0));
}

ShrinkageMatrix::ShrinkageMatrix(std::vector<double> diagonal) : diagonal_(std::move(diagonal)) {
  if (diagonal_.empty()) {
    throw InvalidParameterError("shrinkage diagonal must not be empty");
  }
  require_unit_range(diagonal_, "shrinkage matrix");
}

ShrinkageMatrix ShrinkageMatrix::identity(std::size_t n) {
  return ShrinkageMatrix(std::vector<double>(n, 1.0));
}

double ShrinkageMatrix::min_entry() const {
  return *std::min_element(diagonal_.begin(), diagonal_.end());
}

bool ShrinkageMatrix::is_identity() const {
  return std::all_of(diagonal_.begin(), diagonal_.end(), [](double w) { return w == 1.0; });
}

std::vector<double> stretch_profile(std::span<const double> profile_vector,
                                    const ShrinkageMatrix& shrink) {
  if (profile_vector.size() != shrink.size()) {
    throw InvalidParameterError("profile and shrinkage dimensions differ");
  }
  std::vector<double> out(profile_vector.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = shrink[i] * profile_vector[i];
  return out;
}

double solve_shrink_weight(const QuerySpec& query, std::size_t coordinate, double v_i,
                           double tolerance) {
  if (coordinate >= query.dimension()) {
    throw InvalidParameterError("coordinate out of range");
  }
  if (!(v_i >= 0.0 && v_i <= 1.0)) {
    throw InvalidParameterError("privacy weight must lie in [0, 1]");
  }
  if (!(tolerance > 0)) {
    throw InvalidParameterError("tolerance must be positive");
  }
  const double budget = v_i * query.global_sensitivity().value();

  // Fully zeroing the coordinate always satisfies the constraint; an
  // evaluator claiming otherwise is broken.
  double s_lo = query.modular_sensitivity_single(coordinate, 0.0).value();
  if (s_lo > budget) {
    throw ContractViolationError(
        "modular sensitivity at w=0 exceeds the budget; evaluator violates "
        "S_i(R,(1,..,0,..,1)) = 0");
  }
  double s_hi = query.modular_sensitivity_single(coordinate, 1.0).value();
  if (s_hi <= budget) return 1.0;
  if (s_hi < s_lo) {
    throw ContractViolationError("modular sensitivity decreased between w=0 and w=1");
  }

  double lo = 0.0;  // feasible
  double hi = 1.0;  // infeasible
  for (int iteration = 0; iteration < 64 && hi - lo > tolerance; ++iteration) {
    const double mid = 0.5 * (lo + hi);
    const double s_mid = query.modular_sensitivity_single(coordinate, mid).value();
    // Monotonicity check against the bracketing evaluations.
    if (s_mid + 1e-12 < s_lo || s_mid > s_hi + 1e-12) {
      throw ContractViolationError("modular sensitivity evaluator is not monotone in w");
    }
    if (s_mid <= budget) {
      lo = mid;
      s_lo = s_mid;
    } else {
      hi = mid;
      s_hi = s_mid;
    }
  }
  return lo;
}

StretchSpec build_stretch_spec(const QuerySpec& query, const PrivacyVector& v, double tolerance) {
  if (v.size() != query.dimension()) {
    throw InvalidParameterError("privacy vector dimension does not match query");
  }
  const Sensitivity base = query.global_sensitivity();
  std::vector<double> diagonal(v.size());
  std::vector<Sensitivity> certified;
  certified.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto closed = query.closed_form_shrink_weight(i, v[i]);
    diagonal[i] = closed ? *closed : solve_shrink_weight(query, i, v[i], tolerance);
    double s_i = query.modular_sensitivity_single(i, diagonal[i]).value();
    const double budget = v[i] * base.value();
    if (s_i > budget) {
      // Closed forms may overshoot by a rounding ulp; anything larger is a
      // broken query.
      if (s_i > budget * (1.0 + 1e-12) + 1e-300) {
        throw ContractViolationError("solved weight does not satisfy its sensitivity budget");
      }
      s_i = budget;
    }
    certified.push_back(Sensitivity(s_i));
  }
  return StretchSpec{ShrinkageMatrix(std::move(diagonal)), std::move(certified), base};
}

MechanismOutput hdp_estimate(const QuerySpec& query, std::span<const double> d,
                             const PrivacyVector& v, PrivacyBudget budget, RandomStream& rng,
                             NoiseMode noise) {
  if (!query.contains(d)) {
    throw InvalidParameterError("input lies outside the query domain");
  }
  const StretchSpec spec = build_stretch_spec(query, v);
  const std::vector<double> stretched = stretch_profile(d, spec.shrink);
  const double value = query.evaluate(stretched);
  return laplacian_mechanism(value, spec.base_sensitivity, budget, rng, noise);
}

double distortion_bound(const QuerySpec& query, std::span<const double> d,
                        const StretchSpec& spec, int grid) {
  if (d.size() != query.dimension() || spec.shrink.size() != d.size()) {
    throw InvalidParameterError("dimension mismatch");
  }
  if (grid < 2) {
    throw InvalidParameterError("grid needs at least the two endpoints");
  }
  const double slack = 1.0 - spec.shrink.min_entry();
  if (const auto* pair_sp = dynamic_cast<const PairScalarProductQuery*>(&query)) {
    (void)pair_sp;
    // max_c |B d| is reached at c = 1 where B = I, so the grid maximum is
    // exactly (1 - w_min) |d|^2.
    const double norm = norm2(d);
    return slack * norm * norm;
  }
  if (!query.has_gradient()) {
    throw UnsupportedQueryError("distortion bound needs a gradient evaluator");
  }
  const double norm_d = norm2(d);
  std::vector<double> blended(d.size());
  double worst = 0.0;
  for (int step = 0; step < grid; ++step) {
    const double c = static_cast<double>(step) / (grid - 1);
    for (std::size_t i = 0; i < d.size(); ++i) {
      blended[i] = (c + (1.0 - c) * spec.shrink[i]) * d[i];
    }
    const double value = slack * norm2(query.gradient(blended)) * norm_d;
    worst = std::max(worst, value);
  }
  return worst;
}

}  // namespace hdp
