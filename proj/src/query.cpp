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

#include "hdp/query.hpp"

#include <algorithm>
#include <cmath>

#include "hdp/errors.hpp"

namespace hdp {

std::vector<double> QuerySpec::gradient(std::span<const double>) const {
  throw UnsupportedQueryError("query does not expose a gradient");
}

namespace {

void require_dimension(const QuerySpec& query, std::span<const double> point) {
  if (point.size() != query.dimension()) {
    throw InvalidParameterError("point dimension does not match query");
  }
}

bool in_unit_box(std::span<const double> point) {
  return std::all_of(point.begin(), point.end(),
                     [](double x) { return x >= 0.0 && x <= 1.0 && std::isfinite(x); });
}

}  // namespace

PairScalarProductQuery::PairScalarProductQuery(std::size_t profile_length) : n_(profile_length) {
  if (n_ == 0) {
    throw InvalidParameterError("profile length must be positive");
  }
}

double PairScalarProductQuery::evaluate(std::span<const double> point) const {
  require_dimension(*this, point);
  double sum = 0.0;
  for (std::size_t j = 0; j < n_; ++j) sum += point[j] * point[n_ + j];
  return sum;
}

Sensitivity PairScalarProductQuery::modular_sensitivity_single(std::size_t coordinate,
                                                               double w) const {
  if (coordinate >= dimension()) {
    throw InvalidParameterError("coordinate out of range");
  }
  // Flipping coordinate j changes the output by w_j * partner_j; with every
  // other weight at 1 the worst partner value is 1.
  return Sensitivity(w);
}

std::optional<double> PairScalarProductQuery::closed_form_shrink_weight(std::size_t coordinate,
                                                                        double v) const {
  if (coordinate >= dimension()) {
    throw InvalidParameterError("coordinate out of range");
  }
  return v;
}

std::vector<double> PairScalarProductQuery::gradient(std::span<const double> point) const {
  require_dimension(*this, point);
  std::vector<double> grad(2 * n_);
  for (std::size_t j = 0; j < n_; ++j) {
    grad[j] = point[n_ + j];
    grad[n_ + j] = point[j];
  }
  return grad;
}

bool PairScalarProductQuery::contains(std::span<const double> point) const {
  return point.size() == dimension() && in_unit_box(point);
}

WeightedSumQuery::WeightedSumQuery(std::vector<double> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) {
    throw InvalidParameterError("weighted sum needs at least one coefficient");
  }
  max_abs_ = 0.0;
  for (double c : coefficients_) {
    if (!std::isfinite(c)) {
      throw InvalidParameterError("coefficients must be finite");
    }
    max_abs_ = std::max(max_abs_, std::abs(c));
  }
}

WeightedSumQuery WeightedSumQuery::against_reference(std::span<const double> reference) {
  return WeightedSumQuery(std::vector<double>(reference.begin(), reference.end()));
}

double WeightedSumQuery::evaluate(std::span<const double> point) const {
  require_dimension(*this, point);
  double sum = 0.0;
  for (std::size_t i = 0; i < point.size(); ++i) sum += coefficients_[i] * point[i];
  return sum;
}

Sensitivity WeightedSumQuery::modular_sensitivity_single(std::size_t coordinate, double w) const {
  if (coordinate >= dimension()) {
    throw InvalidParameterError("coordinate out of range");
  }
  return Sensitivity(std::abs(coefficients_[coordinate]) * w);
}

std::optional<double> WeightedSumQuery::closed_form_shrink_weight(std::size_t coordinate,
                                                                  double v) const {
  if (coordinate >= dimension()) {
    throw InvalidParameterError("coordinate out of range");
  }
  const double c = std::abs(coefficients_[coordinate]);
  if (c == 0.0) return 1.0;
  return std::min(1.0, v * max_abs_ / c);
}

std::vector<double> WeightedSumQuery::gradient(std::span<const double> point) const {
  require_dimension(*this, point);
  return coefficients_;
}

bool WeightedSumQuery::contains(std::span<const double> point) const {
  return point.size() == dimension() && in_unit_box(point);
}

EnumeratedQuery::EnumeratedQuery(oracle::Evaluator evaluator, oracle::EnumerableDomain domain)
    : evaluator_(std::move(evaluator)), domain_(std::move(domain)) {
  hull_lo_.reserve(domain_.dimension());
  hull_hi_.reserve(domain_.dimension());
  for (std::size_t i = 0; i < domain_.dimension(); ++i) {
    const auto& vals = domain_.values(i);
    const auto [lo, hi] = std::minmax_element(vals.begin(), vals.end());
    // Shrinkage pulls every coordinate toward 0, so the hull includes it.
    hull_lo_.push_back(std::min(*lo, 0.0));
    hull_hi_.push_back(std::max(*hi, 0.0));
  }
  global_sensitivity_ = oracle::global_sensitivity_bruteforce(evaluator_, domain_).value();
}

double EnumeratedQuery::evaluate(std::span<const double> point) const {
  require_dimension(*this, point);
  return evaluator_(point);
}

Sensitivity EnumeratedQuery::global_sensitivity() const {
  return Sensitivity(global_sensitivity_);
}

Sensitivity EnumeratedQuery::modular_sensitivity_single(std::size_t coordinate, double w) const {
  if (coordinate >= dimension()) {
    throw InvalidParameterError("coordinate out of range");
  }
  std::vector<double> weights(dimension(), 1.0);
  weights[coordinate] = w;
  return oracle::modular_sensitivity_bruteforce(
      oracle::stretched_evaluator(evaluator_, std::move(weights)), domain_, coordinate);
}

bool EnumeratedQuery::contains(std::span<const double> point) const {
  if (point.size() != dimension()) return false;
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (!(point[i] >= hull_lo_[i] && point[i] <= hull_hi_[i])) return false;
  }
  return true;
}

}  // namespace hdp
