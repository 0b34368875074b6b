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

#include <cstdint>
#include <string>
#include <vector>

#include "wga/group.hpp"

namespace wga {

/// Coefficient vectors of the flat +-1 polynomial pair at level k, each of
/// length 2^k.
struct RudinShapiroPair {
  int level = 0;
  std::vector<int> P, Q;
};

/// Built by the recursion P_{k+1} = P_k + z^{2^k} Q_k,
/// Q_{k+1} = P_k - z^{2^k} Q_k from P_0 = Q_0 = 1. k <= 20 (memory guard).
RudinShapiroPair rudin_shapiro(int k);

struct FlatnessReport {
  int level = 0;
  int samples = 0;
  double max_identity_deviation = 0;  // | |P|^2 + |Q|^2 - 2^{k+1} |
  double max_modulus_P = 0;
  bool pass = false;
};

/// Evaluates at equispaced unimodular points; the identity
/// |P_k|^2 + |Q_k|^2 = 2^{k+1} must hold to 1e-9 absolute per sample.
FlatnessReport flatness_check(const RudinShapiroPair& pair, int samples);

/// n x n Hankel matrix (n = 2^k) with entries c_{i+j}, 0-based, taken from
/// the coefficients of P_{k+1} (length 2n) so every anti-diagonal is +-1.
struct HankelMatrix {
  int level = 0;
  std::size_t n = 0;
  std::vector<int> coeffs;  // length 2n
  double entry(std::size_t i, std::size_t j) const {
    return static_cast<double>(coeffs[i + j]);
  }
};

HankelMatrix hankel_from_rs(int k);

struct SpectralResult {
  double norm = 0;
  int iterations = 0;
  bool converged = false;
};

/// Spectral norm of a dense row-major matrix by power iteration on A^T A
/// with an all-ones start vector and Rayleigh-quotient convergence check.
SpectralResult spectral_norm_dense(const std::vector<double>& a, std::size_t n,
                                   double rel_tol = 1e-8, int max_iter = 5000);

struct SpectralCertificate {
  std::string matrix_id;
  double computed_norm = 0;
  double claimed_bound = 0;
  char relation = '<';  // '<' for <=, '>' for >=
  bool pass = false;
  bool converged = false;
};

/// Certificate ||A_n|| <= 2 sqrt(n) for the level-k Hankel matrix. The
/// constant carries the sqrt(2) slack from filling A_n with P_{k+1}
/// coefficients; this is logged in the certificate id.
SpectralCertificate hankel_certificate(int k, double rel_tol = 1e-8);

/// Bijection between {1..n}^d tuples and alternating words
/// g1^{x1} g2^{x2} ... g2^{xd} (d even).
struct AlternatingIndex {
  int d = 0;
  int n = 0;
  std::vector<std::vector<int>> tuples;  // lexicographic
  GroupElement word(std::size_t idx) const;
  std::size_t size() const { return tuples.size(); }
};

AlternatingIndex alternating_index(int d, int n, std::size_t cap = 4096);

struct AdditivityReport {
  std::size_t pairs = 0;
  std::size_t violations = 0;
};

/// Checks tau(g g') = tau(g) + tau(g') for index pairs via exact free-group
/// arithmetic (alternating words never cancel at the seam).
AdditivityReport length_additivity_check(const AlternatingIndex& index,
                                         std::size_t pair_cap = 1'000'000);

/// Dense n^d x n^d matrix with entries
/// ((1 + Sx + Sy) / ((1 + Sx)(1 + Sy)))^beta, Sx the tuple sum.
std::vector<double> omega_In_matrix(int d, int n, double beta,
                                    std::size_t row_cap = 4096);

/// Sum over {1..n}^d of 1/(1 + x_1 + ... + x_d)^{2 beta}, computed through
/// the histogram of tuple sums (cost O(d n) per convolution, not n^d).
double s_sum(int d, int n, double beta);

/// Power-iteration check of ||Omega^n_beta|| >= 2^{-beta} n^{d/2} sqrt(s_sum).
SpectralCertificate omega_lower_bound_check(int d, int n, double beta,
                                            double rel_tol = 1e-8);

struct DivergencePoint {
  long long n = 0;
  double s = 0;  // s_sum value
  double L = 0;  // lower-bound sequence value
};

/// L_n = K_G^{-1} 2^{-d/2} 2^{-beta} sqrt(s_sum(d,n,beta)) for n = 2,...,2^k.
/// Requires 2 beta < d (divergence hypothesis).
std::vector<DivergencePoint> divergence_sequence(int d, double beta, double kg,
                                                 int k_max);

}  // namespace wga
