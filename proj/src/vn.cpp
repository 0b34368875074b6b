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

#include "wga/vn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace wga {

VNConstants delta_from_bound(double m_eps_bound) {
  if (m_eps_bound < 0)
    throw std::invalid_argument("delta_from_bound: negative bound");
  VNConstants vn;
  vn.m_eps_bound = m_eps_bound;
  vn.delta = 1.0 / ((1.0 + m_eps_bound) * std::numbers::e);
  vn.L = 1.0;
  return vn;
}

void PolySpec::validate() const {
  if (n_vars < 1) throw std::invalid_argument("PolySpec: n_vars < 1");
  if (monomials.empty())
    throw std::invalid_argument("PolySpec: no monomials");
  for (const auto& m : monomials) {
    if (static_cast<int>(m.exponents.size()) != n_vars)
      throw std::invalid_argument("PolySpec: exponent arity mismatch");
    bool nonzero = false;
    for (int e : m.exponents) {
      if (e < 0) throw std::invalid_argument("PolySpec: negative exponent");
      if (e > 0) nonzero = true;
    }
    if (!nonzero)
      throw std::invalid_argument("PolySpec: constant term not allowed");
  }
}

int PolySpec::degree() const {
  int deg = 0;
  for (const auto& m : monomials) {
    int d = 0;
    for (int e : m.exponents) d += e;
    deg = std::max(deg, d);
  }
  return deg;
}

WeightedElement poly_eval_algebra(const PolySpec& p,
                                  const std::vector<WeightedElement>& elems) {
  p.validate();
  if (static_cast<int>(elems.size()) != p.n_vars)
    throw std::invalid_argument("poly_eval_algebra: wrong number of elements");
  for (const auto& a : elems)
    if (a.desc.kind != GroupKind::Zd)
      throw std::invalid_argument(
          "poly_eval_algebra: commutative (Z^d) algebras only");

  WeightedElement result;
  result.desc = elems[0].desc;
  result.weight = elems[0].weight;
  for (const auto& m : p.monomials) {
    // Ascending variable index; commutativity makes the order irrelevant.
    WeightedElement term = WeightedElement::dirac(
        result.desc, result.weight, result.desc.identity(), m.coeff);
    for (int v = 0; v < p.n_vars; ++v)
      for (int e = 0; e < m.exponents[v]; ++e) term = convolve(term, elems[v]);
    result = add(result, term);
  }
  return result;
}

SupNormEstimate poly_sup_norm(const PolySpec& p, int grid_per_dim,
                              double inflation) {
  p.validate();
  if (p.n_vars > 4)
    throw std::invalid_argument("poly_sup_norm: n_vars > 4 (grid blow-up)");
  if (grid_per_dim == 0) {
    switch (p.n_vars) {
      case 1: grid_per_dim = 512; break;
      case 2: grid_per_dim = 96; break;
      case 3: grid_per_dim = 32; break;
      default: grid_per_dim = 16; break;
    }
  }
  SupNormEstimate est;
  est.inflation = inflation;
  est.grid_per_dim = grid_per_dim;

  const int n = p.n_vars;
  std::vector<int> idx(n, 0);
  std::vector<std::complex<double>> z(n);
  const double step = 2 * std::numbers::pi / grid_per_dim;
  while (true) {
    for (int v = 0; v < n; ++v)
      z[v] = std::polar(1.0, idx[v] * step);
    std::complex<double> value = 0;
    for (const auto& m : p.monomials) {
      std::complex<double> term = m.coeff;
      for (int v = 0; v < n; ++v)
        for (int e = 0; e < m.exponents[v]; ++e) term *= z[v];
      value += term;
    }
    est.value = std::max(est.value, std::abs(value));
    int v = 0;
    for (; v < n; ++v) {
      if (++idx[v] < grid_per_dim) break;
      idx[v] = 0;
    }
    if (v == n) break;
  }
  return est;
}

namespace {

WeightedElement random_element(const GroupDescriptor& desc, const WeightSpec& w,
                               const BallTable& ball, int support_size,
                               double target_norm, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, ball.elements.size() - 1);
  std::normal_distribution<double> gauss(0.0, 1.0);
  WeightedElement f;
  f.desc = desc;
  f.weight = w;
  int support = std::max(1, support_size);
  for (int i = 0; i < support; ++i) {
    auto x = ball.elements[pick(rng)];
    std::complex<double> c(gauss(rng), gauss(rng));
    auto [it, inserted] = f.coeffs.emplace(std::move(x), c);
    if (!inserted) it->second += c;
  }
  double norm = weighted_norm(f);
  if (norm == 0)
    return WeightedElement::dirac(desc, w, desc.identity(), target_norm);
  return scale(f, target_norm / norm);
}

PolySpec random_poly(int max_vars, int max_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nv(1, max_vars);
  std::normal_distribution<double> gauss(0.0, 1.0);
  PolySpec p;
  p.n_vars = nv(rng);
  std::uniform_int_distribution<int> count(1, 5);
  std::uniform_int_distribution<int> deg(1, max_degree);
  int n_monomials = count(rng);
  for (int m = 0; m < n_monomials; ++m) {
    Monomial mono;
    mono.exponents.assign(p.n_vars, 0);
    int total = deg(rng);
    std::uniform_int_distribution<int> var(0, p.n_vars - 1);
    for (int i = 0; i < total; ++i) ++mono.exponents[var(rng)];
    mono.coeff = {gauss(rng), gauss(rng)};
    p.monomials.push_back(std::move(mono));
  }
  return p;
}

}  // namespace

StressReport vn_stress_test(const VNConstants& constants,
                            const GroupDescriptor& desc, const WeightSpec& w,
                            int trials, int max_vars, int max_degree,
                            int support_size, std::uint64_t seed) {
  if (desc.kind != GroupKind::Zd)
    throw std::invalid_argument("vn_stress_test: commutative (Z^d) only");
  if (trials < 0 || max_vars < 1 || max_vars > 4 || max_degree < 1)
    throw std::invalid_argument("vn_stress_test: bad parameters");

  StressReport report;
  report.trials = trials;
  report.delta = constants.delta;
  report.L = constants.L;
  report.seed = seed;
  report.worst_margin = std::numeric_limits<double>::infinity();

  BallTable ball = bfs_balls(desc, std::max(1, support_size));
  for (int t = 0; t < trials; ++t) {
    // Splitmix64 finalizer so distinct base seeds never share trial streams.
    std::uint64_t x =
        seed + 0x9e3779b97f4a7c15ull * (static_cast<std::uint64_t>(t) + 1);
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    x ^= x >> 31;
    std::mt19937_64 rng(x);
    PolySpec p = random_poly(max_vars, max_degree, rng);
    std::vector<WeightedElement> elems;
    elems.reserve(p.n_vars);
    for (int v = 0; v < p.n_vars; ++v)
      elems.push_back(random_element(desc, w, ball, support_size,
                                     constants.delta, rng));
    double value = weighted_norm(poly_eval_algebra(p, elems));
    SupNormEstimate sup = poly_sup_norm(p);
    double allowed = constants.L * sup.inflation * sup.value;
    double margin = allowed - value;
    report.worst_margin = std::min(report.worst_margin, margin);
    if (margin >= 0) ++report.passes;
  }
  if (trials == 0) report.worst_margin = 0;
  return report;
}

}  // namespace wga
