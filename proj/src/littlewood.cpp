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

#include "wga/littlewood.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace wga {

OmegaRestriction omega_matrix(const WeightSpec& w, const BallTable& table,
                              int R, std::size_t entry_cap) {
  if (R > table.radius)
    throw std::invalid_argument("omega_matrix: R exceeds table radius");
  OmegaRestriction omega;
  omega.weight = w;
  omega.R = R;
  omega.n = table.cumulative[R];
  if (omega.n * omega.n > entry_cap)
    throw ResourceError("omega_matrix: entry cap exceeded",
                        omega.n * omega.n);
  omega.elems.resize(omega.n);
  omega.taus.resize(omega.n);
  std::vector<double> log_w(omega.n);
  for (std::size_t i = 0; i < omega.n; ++i) {
    omega.elems[i] = i;
    omega.taus[i] = table.tau[i];
    log_w[i] = w.log_weight(static_cast<double>(table.tau[i]));
  }
  LengthOracle oracle(table.desc, &table);
  omega.entries.resize(omega.n * omega.n);
  for (std::size_t i = 0; i < omega.n; ++i)
    for (std::size_t j = 0; j < omega.n; ++j) {
      auto txy =
          oracle.try_length(multiply(table.elements[i], table.elements[j]));
      if (!txy)
        throw std::invalid_argument(
            "omega_matrix: product length unavailable; ball table radius must "
            "cover 2R");
      omega.entries[i * omega.n + j] = std::exp(
          w.log_weight(static_cast<double>(*txy)) - log_w[i] - log_w[j]);
    }
  return omega;
}

SeriesBound length_zeta_zd(int d, double s, long long N) {
  if (d < 1 || N < 0) throw std::invalid_argument("length_zeta_zd: bad args");
  SeriesBound bound;
  bound.s = s;
  bound.N = N;
  if (s <= d) {
    // Divergent under the growth majorant; report partial sums only.
    bound.divergent = true;
    bound.rigorous = false;
    bound.tail = std::numeric_limits<double>::infinity();
  }
  double partial = 1.0;  // identity term
  for (long long n = 1; n <= N; ++n) {
    double sphere = std::pow(2.0 * n + 1, d) - std::pow(2.0 * n - 1, d);
    partial += sphere / std::pow(1.0 + n, s);
  }
  bound.partial = partial;
  if (!bound.divergent) {
    double from = std::max<long long>(N, 1);
    bound.tail = d * std::exp2(d) * std::pow(from, d - s) / (s - d);
    bound.rigorous = true;
  }
  return bound;
}

SeriesBound length_zeta(const BallTable& table, double s, int N,
                        std::optional<GrowthMajorant> majorant) {
  if (N < 0 || N > table.radius)
    throw std::invalid_argument("length_zeta: N outside table radius");
  SeriesBound bound;
  bound.s = s;
  bound.N = N;
  double partial = 0;
  for (int n = 0; n <= N; ++n)
    partial += static_cast<double>(table.sphere_sizes[n]) /
               std::pow(1.0 + n, s);
  bound.partial = partial;
  if (majorant) {
    // sphere(n) <= A (1+n)^p for n > N, so the tail is below
    // A int_N^inf x^{p-s} dx.
    if (s <= majorant->p + 1) {
      bound.divergent = true;
      bound.tail = std::numeric_limits<double>::infinity();
      return bound;
    }
    double from = std::max(N, 1);
    bound.tail = majorant->A * std::pow(from, majorant->p + 1 - s) /
                 (s - majorant->p - 1);
    bound.rigorous = true;
  } else {
    // No majorant: extrapolate the last sphere as c n^{g-1} using the fitted
    // growth order. Flagged non-rigorous.
    bound.rigorous = false;
    GrowthFit fit = growth_order_fit(table);
    double g = fit.exponent;
    if (s <= g) {
      bound.divergent = true;
      bound.tail = std::numeric_limits<double>::infinity();
      return bound;
    }
    double last = static_cast<double>(table.sphere_sizes[N]);
    double c = last / std::pow(std::max(N, 1), g - 1);
    bound.tail = c * std::pow(std::max(N, 1), g - s) / (s - g);
  }
  return bound;
}

double t2_bound_poly(double beta, const SeriesBound& zeta) {
  if (std::abs(zeta.s - 2 * beta) > 1e-12)
    throw std::invalid_argument("t2_bound_poly: zeta not computed at s = 2 beta");
  if (zeta.divergent)
    throw std::domain_error("t2_bound_poly: zeta series diverges");
  return a_beta(beta) * std::sqrt(zeta.upper());
}

BoundResult m_eps_upper_poly(double beta, double kg, const SeriesBound& zeta,
                             int d, bool lambda_is_one) {
  double threshold = lambda_is_one ? d / 2.0 : (d + 1) / 2.0;
  if (!(beta > threshold))
    throw std::domain_error(
        "m_eps_upper_poly: beta outside theorem hypotheses");
  BoundResult r;
  r.weight = WeightSpec::polynomial(beta);
  r.kg = kg;
  r.beta_used = beta;
  r.M_used = 1;
  r.bound = kg * t2_bound_poly(beta, zeta);
  r.rigorous = zeta.rigorous;
  return r;
}

double beta_selection(double alpha, double C, double d, bool lambda_is_one) {
  if (alpha <= 0 || alpha >= 1 || C <= 0)
    throw std::invalid_argument("beta_selection: need 0 < alpha < 1, C > 0");
  double growth_term = (d + (lambda_is_one ? 0.0 : 1.0)) / 2.0;
  return std::max({1.0, 6.0 / (C * alpha * (1 - alpha)), growth_term});
}

BoundResult m_eps_upper_exp(double alpha, double C, double kg, int d,
                            const SeriesBound& zeta_at_2beta,
                            bool lambda_is_one) {
  if (alpha <= 0 || alpha >= 1)
    throw std::domain_error("m_eps_upper_exp: alpha outside (0,1)");
  double beta = beta_selection(alpha, C, d, lambda_is_one);
  if (std::abs(zeta_at_2beta.s - 2 * beta) > 1e-9)
    throw std::invalid_argument("m_eps_upper_exp: zeta not at s = 2 beta");
  if (zeta_at_2beta.divergent)
    throw std::domain_error("m_eps_upper_exp: zeta series diverges");
  BoundResult r;
  r.weight = WeightSpec::exponential(alpha, C);
  r.kg = kg;
  r.beta_used = beta;
  r.M_used = m_constant(alpha, C, beta);
  r.bound = kg * r.M_used * std::exp2(beta - 1) * std::sqrt(zeta_at_2beta.upper());
  r.rigorous = zeta_at_2beta.rigorous;
  return r;
}

DecompositionReport verify_decomposition(const OmegaRestriction& omega,
                                         double beta,
                                         const SeriesBound& zeta) {
  if (omega.weight.kind != WeightSpec::Kind::Polynomial)
    throw std::invalid_argument("verify_decomposition: polynomial weight only");
  DecompositionReport report;
  const std::size_t n = omega.n;
  report.n = n;
  const double A = a_beta(beta);
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i)
    w[i] = A * std::pow(1.0 + omega.taus[i], -beta);

  report.entrywise_f1 = report.entrywise_f2 = report.reconstruction = true;
  std::vector<double> col_sq(n, 0.0), row_sq(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double o = omega(i, j);
      double w1 = w[i], w2 = w[j];
      double f1 = o * w1 / (w1 + w2);
      double f2 = o * w2 / (w1 + w2);
      if (f1 > w1 * (1 + 1e-12)) report.entrywise_f1 = false;
      if (f2 > w2 * (1 + 1e-12)) report.entrywise_f2 = false;
      if (std::abs((f1 + f2) - o) > 1e-15 * o) report.reconstruction = false;
      col_sq[j] += f1 * f1;
      row_sq[i] += f2 * f2;
    }
  for (std::size_t j = 0; j < n; ++j)
    report.restricted_column_sup =
        std::max(report.restricted_column_sup, std::sqrt(col_sq[j]));
  for (std::size_t i = 0; i < n; ++i)
    report.restricted_row_sup =
        std::max(report.restricted_row_sup, std::sqrt(row_sq[i]));
  report.claimed_sup_bound = A * std::sqrt(zeta.upper());
  report.pass = report.entrywise_f1 && report.entrywise_f2 &&
                report.reconstruction &&
                report.restricted_column_sup <=
                    report.claimed_sup_bound + 1e-9 &&
                report.restricted_row_sup <= report.claimed_sup_bound + 1e-9;
  return report;
}

std::string to_string(Verdict::Status s) {
  switch (s) {
    case Verdict::Status::InjectiveAlgebra: return "InjectiveAlgebra";
    case Verdict::Status::NotOperatorAlgebra: return "NotOperatorAlgebra";
    case Verdict::Status::OutsideTheoremHypotheses:
      return "OutsideTheoremHypotheses";
  }
  return "?";
}

Verdict operator_alg_verdict(const GroupDescriptor& desc, int d,
                             bool lambda_is_one, const WeightSpec& w,
                             double kg, const SeriesBound* zeta) {
  Verdict verdict;
  // The alpha = 0 / alpha = 1 negative answers hold on every infinite
  // finitely generated group, so they are resolved before the growth
  // hypotheses are consulted.
  const bool free_group = desc.kind == GroupKind::Free2;
  switch (w.kind) {
    case WeightSpec::Kind::Constant:
      verdict.status = Verdict::Status::NotOperatorAlgebra;
      verdict.reason = "alpha_zero";  // constant weight is sigma_{0,C} up to scale
      return verdict;
    case WeightSpec::Kind::Exponential: {
      if (w.alpha == 0.0) {
        verdict.status = Verdict::Status::NotOperatorAlgebra;
        verdict.reason = "alpha_zero";
        return verdict;
      }
      if (w.alpha == 1.0) {
        verdict.status = Verdict::Status::NotOperatorAlgebra;
        verdict.reason = "alpha_one";
        return verdict;
      }
      if (free_group) {
        verdict.status = Verdict::Status::OutsideTheoremHypotheses;
        verdict.reason =
            "exponential growth: the polynomial-growth theorems do not apply";
        return verdict;
      }
      double beta = beta_selection(w.alpha, w.C, d, lambda_is_one);
      SeriesBound local;
      const SeriesBound* z = zeta;
      if (z == nullptr && desc.kind == GroupKind::Zd) {
        local = length_zeta_zd(d, 2 * beta, 0);
        z = &local;
      }
      verdict.status = Verdict::Status::InjectiveAlgebra;
      if (z != nullptr)
        verdict.bound = m_eps_upper_exp(w.alpha, w.C, kg, d, *z, lambda_is_one);
      else
        verdict.reason = "affirmative; no zeta enclosure supplied, bound omitted";
      return verdict;
    }
    case WeightSpec::Kind::Composite:
      verdict.status = Verdict::Status::OutsideTheoremHypotheses;
      verdict.reason = "composite weight is an auxiliary majorant, not a "
                       "theorem subject";
      return verdict;
    case WeightSpec::Kind::Polynomial: {
      if (free_group) {
        verdict.status = Verdict::Status::OutsideTheoremHypotheses;
        verdict.reason =
            "exponential growth: the polynomial-growth theorems do not apply "
            "(the divergence lab demonstrates the negative answer for "
            "polynomial weights on F2)";
        return verdict;
      }
      double threshold = lambda_is_one ? d / 2.0 : (d + 1) / 2.0;
      if (!(w.beta > threshold)) {
        verdict.status = Verdict::Status::OutsideTheoremHypotheses;
        verdict.reason = "beta <= " + std::to_string(threshold) +
                         "; theorem silent (sharpness known for beta <= d/2 "
                         "on Z^d and beta <= 1/2 on H3)";
        return verdict;
      }
      SeriesBound local;
      const SeriesBound* z = zeta;
      if (z == nullptr && desc.kind == GroupKind::Zd) {
        local = length_zeta_zd(d, 2 * w.beta, 0);
        z = &local;
      }
      verdict.status = Verdict::Status::InjectiveAlgebra;
      if (z != nullptr)
        verdict.bound = m_eps_upper_poly(w.beta, kg, *z, d, lambda_is_one);
      else
        verdict.reason = "affirmative; no zeta enclosure supplied, bound omitted";
      return verdict;
    }
  }
  return verdict;
}

}  // namespace wga
