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

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "hdp/dp_core.hpp"
#include "hdp/sensitivity_oracle.hpp"

namespace hdp {

/// A query bundles everything the stretching machinery needs of a function:
/// evaluation on its (semi-balanced hull of a) domain, the global sensitivity
/// S(f), and a modular-sensitivity evaluator for the one-coordinate-shrunk
/// function, i.e. S_i of d -> f(diag(1,..,w_i,..,1) * d). Queries with a
/// gradient additionally support the distortion bound.
class QuerySpec {
 public:
  virtual ~QuerySpec() = default;

  virtual std::size_t dimension() const = 0;
  virtual double evaluate(std::span<const double> point) const = 0;
  virtual Sensitivity global_sensitivity() const = 0;

  /// Modular global sensitivity at `coordinate` of the function whose input
  /// has only that coordinate shrunk by w. Must be monotone non-decreasing
  /// in w.
  virtual Sensitivity modular_sensitivity_single(std::size_t coordinate, double w) const = 0;

  /// Closed-form solution of the per-coordinate weight optimization, when the
  /// query admits one. Bisection is used otherwise.
  virtual std::optional<double> closed_form_shrink_weight(std::size_t coordinate,
                                                          double v) const {
    (void)coordinate;
    (void)v;
    return std::nullopt;
  }

  virtual bool has_gradient() const { return false; }
  virtual std::vector<double> gradient(std::span<const double> point) const;

  /// True when `point` lies in the semi-balanced hull of the domain, so that
  /// every stretched version of it is also a valid input.
  virtual bool contains(std::span<const double> point) const = 0;
};

/// Scalar product of two binary profiles, as a single query over the
/// concatenated vector d = (x, y) of length 2n: f(d) = sum_j x_j * y_j.
/// S(f) = 1; shrinking only coordinate j changes the output by at most
/// w_j * |partner_j| <= w_j.
class PairScalarProductQuery final : public QuerySpec {
 public:
  explicit PairScalarProductQuery(std::size_t profile_length);

  std::size_t profile_length() const { return n_; }
  std::size_t dimension() const override { return 2 * n_; }
  double evaluate(std::span<const double> point) const override;
  Sensitivity global_sensitivity() const override { return Sensitivity(1.0); }
  Sensitivity modular_sensitivity_single(std::size_t coordinate, double w) const override;
  std::optional<double> closed_form_shrink_weight(std::size_t coordinate,
                                                  double v) const override;
  bool has_gradient() const override { return true; }
  std::vector<double> gradient(std::span<const double> point) const override;
  bool contains(std::span<const double> point) const override;

 private:
  std::size_t n_;
};

/// Bounded weighted sum over binary coordinates: f(d) = sum_i c_i * d_i with
/// d in [0,1]^n. S(f) = max_i |c_i|; the modular sensitivity at i of the
/// one-coordinate-shrunk function is |c_i| * w. With all-ones coefficients
/// this is the scalar product against a fixed reference profile.
class WeightedSumQuery final : public QuerySpec {
 public:
  explicit WeightedSumQuery(std::vector<double> coefficients);

  /// f(x) = <x, reference> for a fixed binary reference profile.
  static WeightedSumQuery against_reference(std::span<const double> reference);

  std::size_t dimension() const override { return coefficients_.size(); }
  double evaluate(std::span<const double> point) const override;
  Sensitivity global_sensitivity() const override { return Sensitivity(max_abs_); }
  Sensitivity modular_sensitivity_single(std::size_t coordinate, double w) const override;
  std::optional<double> closed_form_shrink_weight(std::size_t coordinate,
                                                  double v) const override;
  bool has_gradient() const override { return true; }
  std::vector<double> gradient(std::span<const double> point) const override;
  bool contains(std::span<const double> point) const override;

 private:
  std::vector<double> coefficients_;
  double max_abs_;
};

/// Fallback for arbitrary evaluators on small finite domains: every
/// sensitivity is computed by exhaustive neighbor enumeration. The evaluator
/// must be total on the semi-balanced hull of the grid, since stretched
/// points fall between grid values.
class EnumeratedQuery final : public QuerySpec {
 public:
  EnumeratedQuery(oracle::Evaluator evaluator, oracle::EnumerableDomain domain);

  std::size_t dimension() const override { return domain_.dimension(); }
  double evaluate(std::span<const double> point) const override;
  Sensitivity global_sensitivity() const override;
  Sensitivity modular_sensitivity_single(std::size_t coordinate, double w) const override;
  bool contains(std::span<const double> point) const override;

 private:
  oracle::Evaluator evaluator_;
  oracle::EnumerableDomain domain_;
  std::vector<double> hull_lo_;
  std::vector<double> hull_hi_;
  double global_sensitivity_;
};

}  // namespace hdp
