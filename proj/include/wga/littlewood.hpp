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

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "wga/group.hpp"
#include "wga/weights.hpp"

namespace wga {

/// Default upper bound for the complex Grothendieck constant; overridable per
/// session, and every result records the value actually used.
inline constexpr double kDefaultGrothendieck = 1.40491;

/// A_beta in (a+b)^beta <= A_beta (a^beta + b^beta): 1 for beta <= 1 and
/// 2^{beta-1} for beta >= 1.
inline double a_beta(double beta) { return std::max(1.0, std::exp2(beta - 1)); }

/// Restriction of Omega(x,y) = omega(xy) / (omega(x) omega(y)) to
/// ball(R) x ball(R), stored dense row-major.
struct OmegaRestriction {
  WeightSpec weight;
  int R = 0;
  std::size_t n = 0;
  std::vector<double> entries;      // n*n, row-major
  std::vector<std::size_t> elems;   // indices into the source table
  std::vector<int> taus;
  double operator()(std::size_t i, std::size_t j) const {
    return entries[i * n + j];
  }
};

inline constexpr std::size_t kDefaultMatrixCap = 100'000'000;

/// Requires products of ball(R) pairs to have computable length (table radius
/// >= 2R for H3, closed form otherwise).
OmegaRestriction omega_matrix(const WeightSpec& w, const BallTable& table,
                              int R, std::size_t entry_cap = kDefaultMatrixCap);

/// Rigorous (or flagged) enclosure of sum over G of 1/(1+tau(x))^s:
/// partial sum of sphere(n)/(1+n)^s for n <= N, plus a tail bound.
struct SeriesBound {
  double s = 0;
  long long N = 0;
  double partial = 0;
  double tail = 0;
  bool rigorous = false;   // tail derived from a stated majorant
  bool divergent = false;  // s at or below the growth order of the majorant
  double lower() const { return partial; }
  double upper() const { return partial + tail; }
};

/// Z^d series with the closed-form sphere sizes (2n+1)^d - (2n-1)^d and the
/// integral tail  d 2^d * int_{max(N,1)}^inf x^{d-1-s} dx. Always rigorous
/// when s > d. N = 0 reproduces the closed bound 1 + d 2^d/(s-d).
SeriesBound length_zeta_zd(int d, double s, long long N);

/// Polynomial sphere-size majorant sphere(n) <= A (1+n)^{p} used for tails of
/// groups without closed-form growth.
struct GrowthMajorant {
  double A = 0;
  double p = 0;
};

/// Series from exact table sphere sizes up to N <= table radius. With a
/// majorant the tail is A * int_N^inf x^{p-s} dx and the bound is rigorous;
/// without one the tail is extrapolated from the last sphere and flagged.
SeriesBound length_zeta(const BallTable& table, double s, int N,
                        std::optional<GrowthMajorant> majorant = std::nullopt);

/// A_beta * sqrt(upper end) of a zeta enclosure computed at s = 2 beta.
double t2_bound_poly(double beta, const SeriesBound& zeta);

struct BoundResult {
  WeightSpec weight;
  double kg = kDefaultGrothendieck;
  double beta_used = 0;
  double M_used = 1;
  double bound = 0;  // upper bound for the multiplication norm
  bool rigorous = false;
};

/// K_G A_beta [1 + sum]^{1/2} under the theorem hypotheses
/// (lambda = 1 and beta > d/2, or lambda < 1 and beta > (d+1)/2).
/// Throws std::domain_error outside them.
BoundResult m_eps_upper_poly(double beta, double kg, const SeriesBound& zeta,
                             int d, bool lambda_is_one = true);

/// beta = max{1, 6/(C alpha (1-alpha)), (d + (1 - [lambda=1]))/2}.
double beta_selection(double alpha, double C, double d, bool lambda_is_one);

/// K_G M 2^{beta-1} [1 + sum]^{1/2} with beta from beta_selection and M from
/// m_constant. Requires 0 < alpha < 1.
BoundResult m_eps_upper_exp(double alpha, double C, double kg, int d,
                            const SeriesBound& zeta_at_2beta,
                            bool lambda_is_one = true);

/// Explicit Littlewood split of a polynomial-weight Omega restriction:
/// f1 = Omega w1/(w1+w2), f2 = Omega w2/(w1+w2) with
/// w1(x,y) = A_beta (1+tau(x))^{-beta}, w2(x,y) = A_beta (1+tau(y))^{-beta}.
struct DecompositionReport {
  std::size_t n = 0;
  bool entrywise_f1 = false;        // |f1| <= w1 everywhere
  bool entrywise_f2 = false;        // |f2| <= w2 everywhere
  bool reconstruction = false;      // f1 + f2 == Omega exactly
  double restricted_column_sup = 0; // sup_y sqrt(sum_x f1(x,y)^2)
  double restricted_row_sup = 0;    // sup_x sqrt(sum_y f2(x,y)^2)
  double claimed_sup_bound = 0;     // A_beta sqrt(zeta upper)
  bool pass = false;
};

DecompositionReport verify_decomposition(const OmegaRestriction& omega,
                                         double beta, const SeriesBound& zeta);

struct Verdict {
  enum class Status { InjectiveAlgebra, NotOperatorAlgebra,
                      OutsideTheoremHypotheses };
  Status status = Status::OutsideTheoremHypotheses;
  std::string reason;
  std::optional<BoundResult> bound;
};

std::string to_string(Verdict::Status s);

/// Dispatches the operator-algebra question per weight variant. `d` is the
/// order of growth (closed form or fitted); `lambda_is_one` selects the
/// theorem branch. Free2 always falls outside the hypotheses (the divergence
/// lab demonstrates the negative answer for polynomial weights).
Verdict operator_alg_verdict(const GroupDescriptor& desc, int d,
                             bool lambda_is_one, const WeightSpec& w,
                             double kg, const SeriesBound* zeta = nullptr);

}  // namespace wga
