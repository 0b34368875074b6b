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

#include "wga/freegroup.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

namespace wga {

RudinShapiroPair rudin_shapiro(int k) {
  if (k < 0) throw std::invalid_argument("rudin_shapiro: k < 0");
  if (k > 20)
    throw ResourceError("rudin_shapiro: k over the memory guard (20)",
                        std::size_t{1} << k);
  RudinShapiroPair pair;
  pair.level = k;
  pair.P = {1};
  pair.Q = {1};
  for (int level = 0; level < k; ++level) {
    std::size_t half = pair.P.size();
    std::vector<int> p(2 * half), q(2 * half);
    for (std::size_t i = 0; i < half; ++i) {
      p[i] = pair.P[i];
      p[half + i] = pair.Q[i];
      q[i] = pair.P[i];
      q[half + i] = -pair.Q[i];
    }
    pair.P = std::move(p);
    pair.Q = std::move(q);
  }
  return pair;
}

namespace {

std::complex<double> horner(const std::vector<int>& coeffs,
                            std::complex<double> z) {
  std::complex<double> acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = acc * z + static_cast<double>(*it);
  return acc;
}

}  // namespace

FlatnessReport flatness_check(const RudinShapiroPair& pair, int samples) {
  if (samples < 1) throw std::invalid_argument("flatness_check: samples < 1");
  FlatnessReport report;
  report.level = pair.level;
  report.samples = samples;
  const double target = std::exp2(pair.level + 1);
  for (int s = 0; s < samples; ++s) {
    auto z = std::polar(1.0, 2 * std::numbers::pi * s / samples);
    double pv = std::abs(horner(pair.P, z));
    double qv = std::abs(horner(pair.Q, z));
    report.max_identity_deviation = std::max(
        report.max_identity_deviation, std::abs(pv * pv + qv * qv - target));
    report.max_modulus_P = std::max(report.max_modulus_P, pv);
  }
  report.pass = report.max_identity_deviation < 1e-9 &&
                report.max_modulus_P <= std::sqrt(target) + 1e-9;
  return report;
}

HankelMatrix hankel_from_rs(int k) {
  if (k < 1) throw std::invalid_argument("hankel_from_rs: k < 1");
  HankelMatrix m;
  m.level = k;
  m.n = std::size_t{1} << k;
  m.coeffs = rudin_shapiro(k + 1).P;  // length 2n covers i+j <= 2n-2
  return m;
}

SpectralResult spectral_norm_dense(const std::vector<double>& a, std::size_t n,
                                   double rel_tol, int max_iter) {
  if (a.size() != n * n)
    throw std::invalid_argument("spectral_norm_dense: size mismatch");
  SpectralResult result;
  if (n == 0) return result;
  std::vector<double> v(n, 1.0), av(n), atav(n);
  double norm_v = std::sqrt(static_cast<double>(n));
  for (auto& x : v) x /= norm_v;
  double prev = 0;
  for (int it = 1; it <= max_iter; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0;
      for (std::size_t j = 0; j < n; ++j) s += a[i * n + j] * v[j];
      av[i] = s;
    }
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0;
      for (std::size_t i = 0; i < n; ++i) s += a[i * n + j] * av[i];
      atav[j] = s;
    }
    // Rayleigh quotient of A^T A at the unit vector v.
    double lambda = std::inner_product(v.begin(), v.end(), atav.begin(), 0.0);
    double norm = std::sqrt(std::max(0.0, lambda));
    double len = std::sqrt(
        std::inner_product(atav.begin(), atav.end(), atav.begin(), 0.0));
    result.iterations = it;
    result.norm = norm;
    if (len == 0) {  // A = 0
      result.converged = true;
      return result;
    }
    for (std::size_t j = 0; j < n; ++j) v[j] = atav[j] / len;
    if (it > 1 && std::abs(norm - prev) <= rel_tol * std::max(norm, 1e-300)) {
      result.converged = true;
      return result;
    }
    prev = norm;
  }
  return result;
}

SpectralCertificate hankel_certificate(int k, double rel_tol) {
  HankelMatrix h = hankel_from_rs(k);
  std::vector<double> dense(h.n * h.n);
  for (std::size_t i = 0; i < h.n; ++i)
    for (std::size_t j = 0; j < h.n; ++j) dense[i * h.n + j] = h.entry(i, j);
  SpectralResult r = spectral_norm_dense(dense, h.n, rel_tol);
  SpectralCertificate cert;
  cert.matrix_id = "hankel_rs k=" + std::to_string(k) +
                   " (filled from next-level coefficients; bound 2 sqrt(n) "
                   "carries a sqrt(2) slack)";
  cert.computed_norm = r.norm;
  cert.claimed_bound = 2.0 * std::sqrt(static_cast<double>(h.n));
  cert.relation = '<';
  cert.converged = r.converged;
  cert.pass = r.converged && r.norm <= cert.claimed_bound * (1 + 1e-9);
  return cert;
}

GroupElement AlternatingIndex::word(std::size_t idx) const {
  const auto& x = tuples.at(idx);
  std::vector<Free2Syllable> syllables;
  syllables.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    syllables.push_back({static_cast<int>(i % 2), x[i]});
  return GroupElement::free2(std::move(syllables));
}

AlternatingIndex alternating_index(int d, int n, std::size_t cap) {
  if (d < 2 || d % 2 != 0 || n < 1)
    throw std::invalid_argument("alternating_index: need even d >= 2, n >= 1");
  double projected = std::pow(static_cast<double>(n), d);
  if (projected > static_cast<double>(cap))
    throw ResourceError("alternating_index: n^d over cap",
                        static_cast<std::size_t>(projected));
  AlternatingIndex index;
  index.d = d;
  index.n = n;
  std::vector<int> x(d, 1);
  while (true) {
    index.tuples.push_back(x);
    int i = d - 1;
    for (; i >= 0; --i) {
      if (x[i] < n) {
        ++x[i];
        break;
      }
      x[i] = 1;
    }
    if (i < 0) break;
  }
  return index;
}

AdditivityReport length_additivity_check(const AlternatingIndex& index,
                                         std::size_t pair_cap) {
  AdditivityReport report;
  GroupDescriptor desc = GroupDescriptor::free2();
  std::size_t m = index.size();
  std::size_t total = m * m;
  std::size_t stride = total > pair_cap ? total / pair_cap + 1 : 1;
  for (std::size_t p = 0; p < total; p += stride) {
    GroupElement g = index.word(p / m);
    GroupElement h = index.word(p % m);
    int tg = word_length(g, desc);
    int th = word_length(h, desc);
    int tgh = word_length(multiply(g, h), desc);
    ++report.pairs;
    if (tgh != tg + th) ++report.violations;
  }
  return report;
}

std::vector<double> omega_In_matrix(int d, int n, double beta,
                                    std::size_t row_cap) {
  AlternatingIndex index = alternating_index(d, n, row_cap);
  std::size_t m = index.size();
  std::vector<int> sums(m);
  for (std::size_t i = 0; i < m; ++i)
    sums[i] = std::accumulate(index.tuples[i].begin(), index.tuples[i].end(), 0);
  std::vector<double> a(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      double sx = sums[i], sy = sums[j];
      a[i * m + j] =
          std::pow((1 + sx + sy) / ((1 + sx) * (1 + sy)), beta);
    }
  return a;
}

double s_sum(int d, int n, double beta) {
  if (d < 1 || n < 1) throw std::invalid_argument("s_sum: bad args");
  // Histogram of tuple sums: d-fold convolution of the uniform histogram on
  // {1..n}.
  std::vector<double> hist = {1.0};
  int offset = 0;  // hist[i] counts tuples with sum = offset + i
  for (int step = 0; step < d; ++step) {
    std::vector<double> next(hist.size() + n - 1, 0.0);
    for (std::size_t i = 0; i < hist.size(); ++i)
      for (int v = 0; v < n; ++v) next[i + v] += hist[i];
    hist = std::move(next);
    offset += 1;
  }
  double total = 0;
  for (std::size_t i = 0; i < hist.size(); ++i) {
    double s = offset + static_cast<double>(i);
    total += hist[i] * std::pow(1.0 + s, -2 * beta);
  }
  return total;
}

SpectralCertificate omega_lower_bound_check(int d, int n, double beta,
                                            double rel_tol) {
  std::vector<double> a = omega_In_matrix(d, n, beta);
  auto m = static_cast<std::size_t>(std::llround(std::pow(n, d)));
  SpectralResult r = spectral_norm_dense(a, m, rel_tol);
  SpectralCertificate cert;
  cert.matrix_id = "omega_In d=" + std::to_string(d) + " n=" +
                   std::to_string(n) + " beta=" + std::to_string(beta);
  cert.computed_norm = r.norm;
  cert.claimed_bound = std::exp2(-beta) * std::pow(n, d / 2.0) *
                       std::sqrt(s_sum(d, n, beta));
  cert.relation = '>';
  cert.converged = r.converged;
  cert.pass = r.converged && r.norm >= cert.claimed_bound * (1 - 1e-9);
  return cert;
}

std::vector<DivergencePoint> divergence_sequence(int d, double beta, double kg,
                                                 int k_max) {
  if (d % 2 != 0 || d < 2)
    throw std::invalid_argument("divergence_sequence: d must be even, >= 2");
  if (!(2 * beta < d))
    throw std::domain_error(
        "divergence_sequence: requires 2 beta < d");
  if (kg <= 0 || k_max < 1)
    throw std::invalid_argument("divergence_sequence: bad kg or k_max");
  std::vector<DivergencePoint> points;
  const double prefactor = std::exp2(-d / 2.0 - beta) / kg;
  for (int k = 1; k <= k_max; ++k) {
    DivergencePoint pt;
    pt.n = 1LL << k;
    pt.s = s_sum(d, static_cast<int>(pt.n), beta);
    pt.L = prefactor * std::sqrt(pt.s);
    points.push_back(pt);
  }
  return points;
}

}  // namespace wga
