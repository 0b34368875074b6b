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

#include "wga/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace wga {

WeightSpec WeightSpec::polynomial(double beta) {
  if (beta < 0) throw std::invalid_argument("polynomial weight: beta < 0");
  WeightSpec w;
  w.kind = Kind::Polynomial;
  w.beta = beta;
  return w;
}

WeightSpec WeightSpec::exponential(double alpha, double C) {
  if (alpha < 0 || alpha > 1 || C <= 0)
    throw std::invalid_argument(
        "exponential weight: need alpha in [0,1], C > 0");
  WeightSpec w;
  w.kind = Kind::Exponential;
  w.alpha = alpha;
  w.C = C;
  return w;
}

WeightSpec WeightSpec::composite(double alpha, double C, double beta) {
  if (alpha <= 0 || alpha >= 1 || C <= 0 || beta < 1)
    throw std::invalid_argument(
        "composite weight: need alpha in (0,1), C > 0, beta >= 1");
  WeightSpec w;
  w.kind = Kind::Composite;
  w.alpha = alpha;
  w.C = C;
  w.beta = beta;
  return w;
}

WeightSpec WeightSpec::constant(double c) {
  if (c <= 0) throw std::invalid_argument("constant weight: c <= 0");
  WeightSpec w;
  w.kind = Kind::Constant;
  w.c = c;
  return w;
}

double WeightSpec::log_weight(double tau) const {
  switch (kind) {
    case Kind::Polynomial:
      return beta * std::log1p(tau);
    case Kind::Exponential:
      return C * std::pow(tau, alpha);
    case Kind::Composite:
      return C * std::pow(tau, alpha) - beta * std::log1p(tau);
    case Kind::Constant:
      return std::log(c);
  }
  throw std::logic_error("bad weight kind");
}

double WeightSpec::subm_constant() const {
  switch (kind) {
    case Kind::Polynomial:
    case Kind::Exponential:
      return 1.0;
    case Kind::Composite:
      return m_constant(alpha, C, beta);
    case Kind::Constant:
      return std::max(1.0, 1.0 / c);
  }
  throw std::logic_error("bad weight kind");
}

std::string WeightSpec::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Polynomial:
      os << "omega_" << beta;
      break;
    case Kind::Exponential:
      os << "sigma_{" << alpha << "," << C << "}";
      break;
    case Kind::Composite:
      os << "exp(p_{" << alpha << "," << C << "," << beta << "}(tau))";
      break;
    case Kind::Constant:
      os << "const_" << c;
      break;
  }
  return os.str();
}

double p_func(double alpha, double C, double beta, double x) {
  if (x < 0) throw std::domain_error("p_func: x < 0");
  return C * std::pow(x, alpha) - beta * std::log1p(x);
}

double q_func(double alpha, double C, double beta, double x) {
  if (x <= 0) throw std::domain_error("q_func: x <= 0");
  return p_func(alpha, C, beta, x) / x;
}

double k_threshold(double alpha, double C, double beta) {
  if (alpha <= 0 || alpha >= 1 || C <= 0 || beta <= 0)
    throw std::invalid_argument(
        "k_threshold: need 0 < alpha < 1, C > 0, beta > 0");
  return std::pow(beta * beta / (C * alpha * (1 - alpha)), 1.0 / alpha);
}

double m_constant(double alpha, double C, double beta) {
  double K = k_threshold(alpha, C, beta);
  auto grid_max = static_cast<std::int64_t>(std::floor(4 * K));
  if (grid_max < 1) return 1.0;  // only t = s = r = 0, and p(0) = 0
  double p_max = 0, p_min = 0;
  for (std::int64_t t = 0; t <= grid_max; ++t) {
    double v = p_func(alpha, C, beta, static_cast<double>(t));
    p_max = std::max(p_max, v);
    p_min = std::min(p_min, v);
  }
  return std::exp(p_max - 2 * p_min);
}

MonotonicityReport monotonicity_check(double alpha, double C, double beta,
                                      double lo, double hi, double h) {
  double beta_floor = std::max(1.0, 6.0 / (C * alpha * (1 - alpha)));
  if (beta < beta_floor)
    throw std::invalid_argument(
        "monotonicity_check: beta below max{1, 6/(C alpha (1-alpha))}");
  if (!(hi > lo) || h <= 0)
    throw std::invalid_argument("monotonicity_check: bad grid");
  MonotonicityReport report;
  double prev_p = p_func(alpha, C, beta, lo);
  double prev_q = lo > 0 ? q_func(alpha, C, beta, lo) : prev_p;
  for (double x = lo + h; x <= hi + h / 2; x += h) {
    double p = p_func(alpha, C, beta, x);
    double q = q_func(alpha, C, beta, x);
    // Rounding slack relative to the magnitude of the values compared.
    double tol_p = 1e-9 * std::max(1.0, std::abs(prev_p));
    double tol_q = 1e-9 * std::max(1.0, std::abs(prev_q));
    if (p < prev_p - tol_p) {
      if (report.p_violations == 0 && report.q_violations == 0)
        report.first_violation_at = x;
      ++report.p_violations;
    }
    if (q > prev_q + tol_q) {
      if (report.p_violations == 0 && report.q_violations == 0)
        report.first_violation_at = x;
      ++report.q_violations;
    }
    prev_p = p;
    prev_q = q;
    ++report.points;
  }
  return report;
}

WeightedElement WeightedElement::dirac(const GroupDescriptor& desc,
                                       const WeightSpec& w,
                                       const GroupElement& x,
                                       std::complex<double> coeff) {
  WeightedElement f;
  f.desc = desc;
  f.weight = w;
  f.coeffs.emplace(x, coeff);
  return f;
}

double weighted_norm(const WeightedElement& f, const BallTable* table) {
  double norm = 0;
  for (const auto& [x, c] : f.coeffs) {
    int tau = word_length(x, f.desc, table);
    norm += std::abs(c) * f.weight.weight(static_cast<double>(tau));
  }
  return norm;
}

namespace {

void require_same_context(const WeightedElement& f, const WeightedElement& g,
                          const char* op) {
  if (f.desc.kind != g.desc.kind || f.desc.dim != g.desc.dim)
    throw std::invalid_argument(std::string(op) + ": mismatched groups");
  if (f.weight.kind != g.weight.kind || f.weight.beta != g.weight.beta ||
      f.weight.alpha != g.weight.alpha || f.weight.C != g.weight.C ||
      f.weight.c != g.weight.c)
    throw std::invalid_argument(std::string(op) + ": mismatched weights");
}

}  // namespace

WeightedElement convolve(const WeightedElement& f, const WeightedElement& g) {
  require_same_context(f, g, "convolve");
  WeightedElement r;
  r.desc = f.desc;
  r.weight = f.weight;
  for (const auto& [x, cx] : f.coeffs)
    for (const auto& [y, cy] : g.coeffs) {
      auto z = multiply(x, y);
      auto [it, inserted] = r.coeffs.emplace(std::move(z), cx * cy);
      if (!inserted) it->second += cx * cy;
    }
  return r;
}

WeightedElement add(const WeightedElement& f, const WeightedElement& g) {
  require_same_context(f, g, "add");
  WeightedElement r = f;
  for (const auto& [y, cy] : g.coeffs) {
    auto [it, inserted] = r.coeffs.emplace(y, cy);
    if (!inserted) it->second += cy;
  }
  return r;
}

WeightedElement scale(const WeightedElement& f, std::complex<double> s) {
  WeightedElement r = f;
  for (auto& [x, c] : r.coeffs) c *= s;
  return r;
}

SubmultReport check_submultiplicative(const WeightSpec& w,
                                      const BallTable& table, int R, double M,
                                      std::size_t pair_cap) {
  if (R > table.radius)
    throw std::invalid_argument("check_submultiplicative: R exceeds table radius");
  SubmultReport report;
  report.radius = R;
  report.claimed_M = M;
  report.worst_log_ratio = -std::numeric_limits<double>::infinity();

  LengthOracle oracle(table.desc, &table);
  std::size_t limit = table.cumulative[R];
  std::size_t total_pairs = limit * limit;
  std::size_t stride = total_pairs > pair_cap ? total_pairs / pair_cap + 1 : 1;

  std::vector<double> log_w(limit);
  for (std::size_t i = 0; i < limit; ++i)
    log_w[i] = w.log_weight(static_cast<double>(table.tau[i]));

  for (std::size_t p = 0; p < total_pairs; p += stride) {
    std::size_t i = p / limit, j = p % limit;
    auto txy = oracle.try_length(multiply(table.elements[i], table.elements[j]));
    if (!txy) {
      ++report.skipped;
      continue;
    }
    ++report.pairs;
    double log_ratio =
        w.log_weight(static_cast<double>(*txy)) - log_w[i] - log_w[j];
    if (log_ratio > report.worst_log_ratio) {
      report.worst_log_ratio = log_ratio;
      report.worst_x = table.elements[i];
      report.worst_y = table.elements[j];
    }
  }
  report.pass = report.worst_log_ratio <= std::log(M) + kSubmultLogTol;
  return report;
}

}  // namespace wga
