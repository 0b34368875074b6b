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
#include <cstdint>
#include <vector>

#include "wga/weights.hpp"

namespace wga {

/// Constants of the multi-variable von Neumann inequality derived from a
/// multiplication-norm bound: delta = 1/((1 + bound) e), L = 1.
struct VNConstants {
  double delta = 0;
  double L = 1;
  double m_eps_bound = 0;
};

VNConstants delta_from_bound(double m_eps_bound);

struct Monomial {
  std::vector<int> exponents;  // one per variable, nonzero vector
  std::complex<double> coeff;
};

/// Polynomial in n variables without constant term.
struct PolySpec {
  int n_vars = 1;
  std::vector<Monomial> monomials;

  /// Throws std::invalid_argument on a zero exponent vector or arity mismatch.
  void validate() const;
  int degree() const;
};

/// Evaluates p(a_1,...,a_n) in the convolution algebra; monomial powers are
/// convolution powers. Commutative groups (Z^d) only.
WeightedElement poly_eval_algebra(const PolySpec& p,
                                  const std::vector<WeightedElement>& elems);

struct SupNormEstimate {
  double value = 0;      // grid maximum of |p| on the torus boundary
  double inflation = 0;  // configured safety factor for undersampling
  int grid_per_dim = 0;
};

/// Boundary-grid estimate of sup{|p(z)| : |z_i| <= 1}. grid_per_dim = 0 picks
/// an automatic grid (shrinking with the number of variables, n <= 4).
SupNormEstimate poly_sup_norm(const PolySpec& p, int grid_per_dim = 0,
                              double inflation = 1.05);

struct StressReport {
  int trials = 0;
  int passes = 0;
  double worst_margin = 0;  // min over trials of L*inflated_sup - |p(a)| norm
  double delta = 0;
  double L = 1;
  std::uint64_t seed = 0;
};

/// Samples random elements with weighted norm exactly delta (support in
/// ball(support_size), complex Gaussian coefficients) and random polynomials,
/// then checks the inequality against the inflated sup-norm estimate.
/// Deterministic given the seed (per-trial seeds derived by counter).
StressReport vn_stress_test(const VNConstants& constants,
                            const GroupDescriptor& desc, const WeightSpec& w,
                            int trials, int max_vars, int max_degree,
                            int support_size, std::uint64_t seed);

}  // namespace wga
