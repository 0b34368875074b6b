// Copyright 2026 The wga-toolkit authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <string>
#include <unordered_map>
#include <vector>

#include "wga/group.hpp"

namespace wga {

/// Parametric radial weight: every supported weight is a function of the word
/// length tau alone.
///
/// Polynomial:  (1+tau)^beta
/// Exponential: e^{C tau^alpha}
/// Composite:   e^{C tau^alpha} / (1+tau)^beta  (the exponential-over-
///              polynomial quotient with submultiplicativity constant M)
/// Constant:    c
struct WeightSpec {
  enum class Kind { Polynomial, Exponential, Composite, Constant };

  Kind kind = Kind::Polynomial;
  double beta = 0;
  double alpha = 0;
  double C = 0;
  double c = 1;

  static WeightSpec polynomial(double beta);
  static WeightSpec exponential(double alpha, double C);
  static WeightSpec composite(double alpha, double C, double beta);
  static WeightSpec constant(double c);

  /// log of the weight at word length tau. All weight arithmetic is done in
  /// log-space; C tau^alpha can exceed the double overflow threshold.
  double log_weight(double tau) const;
  double weight(double tau) const { return std::exp(log_weight(tau)); }

  /// Submultiplicativity constant: 1 for Polynomial/Exponential, the grid
  /// maximum for Composite, max(1, 1/c) for Constant.
  double subm_constant() const;

  std::string to_string() const;
};

/// p(x) = C x^alpha - beta ln(1+x).
double p_func(double alpha, double C, double beta, double x);
/// q(x) = p(x)/x; domain error at x = 0.
double q_func(double alpha, double C, double beta, double x);
/// K = (beta^2 / (C alpha (1-alpha)))^{1/alpha}; p is increasing and q
/// decreasing on [K, infinity) under the lemma hypotheses.
double k_threshold(double alpha, double C, double beta);
/// M = max { e^{p(t)-p(s)-p(r)} : t,s,r integers in [0,4K] }. The max over t
/// and the min over s are scanned separately, so the cost is O(K) not O(K^3).
double m_constant(double alpha, double C, double beta);

struct MonotonicityReport {
  std::size_t points = 0;
  std::size_t p_violations = 0;
  std::size_t q_violations = 0;
  double first_violation_at = -1;
  bool pass() const { return p_violations == 0 && q_violations == 0; }
};

/// Verifies p nondecreasing and q nonincreasing on [lo, hi] with step h.
/// Requires beta >= max{1, 6/(C alpha (1-alpha))} (the lemma hypotheses).
MonotonicityReport monotonicity_check(double alpha, double C, double beta,
                                      double lo, double hi, double h);

/// Finitely supported element of l^1(G, omega).
struct WeightedElement {
  GroupDescriptor desc;
  WeightSpec weight;
  std::unordered_map<GroupElement, std::complex<double>, GroupElementHash>
      coeffs;

  static WeightedElement dirac(const GroupDescriptor& desc,
                               const WeightSpec& w, const GroupElement& x,
                               std::complex<double> coeff = 1.0);
};

/// Weighted l^1 norm: sum |f(x)| omega(x). Needs a table for H3 supports.
double weighted_norm(const WeightedElement& f, const BallTable* table = nullptr);

WeightedElement convolve(const WeightedElement& f, const WeightedElement& g);
WeightedElement add(const WeightedElement& f, const WeightedElement& g);
WeightedElement scale(const WeightedElement& f, std::complex<double> s);

struct SubmultReport {
  int radius = 0;
  double worst_log_ratio = 0;  // max of log omega(xy) - log omega(x) - log omega(y)
  GroupElement worst_x, worst_y;
  double claimed_M = 1;
  bool pass = false;
  std::size_t pairs = 0;
  std::size_t skipped = 0;
};

inline constexpr double kSubmultLogTol = 1e-12;

/// Sweeps omega(xy) <= M omega(x) omega(y) over pairs from ball(R) of the
/// table (uniformly strided above pair_cap). Ratios are compared in
/// log-space with relative slack kSubmultLogTol.
SubmultReport check_submultiplicative(const WeightSpec& w,
                                      const BallTable& table, int R, double M,
                                      std::size_t pair_cap = 50'000'000);

}  // namespace wga
