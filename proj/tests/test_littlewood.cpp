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

#include <cmath>
#include <numbers>

#include <doctest.h>

#include "wga/littlewood.hpp"

using namespace wga;
using doctest::Approx;

TEST_CASE("omega matrix entries") {
  auto table = bfs_balls(GroupDescriptor::zd(1), 10);
  auto w = WeightSpec::polynomial(1);
  auto omega = omega_matrix(w, table, 5);
  // Identity sits at index 0 by BFS order.
  CHECK(omega(0, 0) == Approx(1).epsilon(1e-14));
  std::size_t one = table.index.at(GroupElement::zd({1}));
  CHECK(omega(one, one) == Approx(3.0 / 4).epsilon(1e-12));
  for (double v : omega.entries) {
    CHECK(v > 0);
    CHECK(v <= 1 + 1e-12);  // polynomial weights have M = 1
  }
  // Entries match direct ratio evaluation.
  LengthOracle oracle(table.desc, &table);
  for (std::size_t i = 0; i < omega.n; i += 3)
    for (std::size_t j = 0; j < omega.n; j += 3) {
      auto txy = oracle(multiply(table.elements[i], table.elements[j]));
      double direct = w.weight(txy) / (w.weight(table.tau[i]) * w.weight(table.tau[j]));
      CHECK(omega(i, j) == Approx(direct).epsilon(1e-12));
    }
}

TEST_CASE("omega matrix needs product lengths") {
  auto table = bfs_balls(GroupDescriptor::heisenberg(), 4);
  CHECK_NOTHROW(omega_matrix(WeightSpec::polynomial(1), table, 2));
  CHECK_THROWS_AS(omega_matrix(WeightSpec::polynomial(1), table, 4),
                  std::invalid_argument);
}

TEST_CASE("zeta enclosure on Z^1") {
  // Direct-summation oracle: sum over Z of (1+|x|)^{-2} = 2 zeta(2) - 1.
  const double target = std::numbers::pi * std::numbers::pi / 3 - 1;
  auto z = length_zeta_zd(1, 2, 10000);
  CHECK(z.rigorous);
  CHECK(z.lower() <= target);
  CHECK(z.upper() >= target);
  CHECK(z.upper() - z.lower() < 0.05);

  // N = 0 reproduces the closed bound 1 + d 2^d/(s-d).
  auto z0 = length_zeta_zd(1, 2, 0);
  CHECK(z0.partial == Approx(1));
  CHECK(z0.upper() == Approx(3).epsilon(1e-14));
}

TEST_CASE("zeta enclosures nest as N grows") {
  double prev_lower = 0, prev_upper = 1e300;
  for (long long N : {0, 10, 100, 1000}) {
    auto z = length_zeta_zd(2, 5, N);
    CHECK(z.lower() >= prev_lower);
    CHECK(z.upper() <= prev_upper + 1e-12);
    prev_lower = z.lower();
    prev_upper = z.upper();
  }
}

TEST_CASE("zeta divergence flag") {
  auto z = length_zeta_zd(2, 2, 50);
  CHECK(z.divergent);
  CHECK(!z.rigorous);
  CHECK(std::isinf(z.upper()));
}

TEST_CASE("zeta from table sphere sizes") {
  auto table = bfs_balls(GroupDescriptor::heisenberg(), 12);
  auto loose = length_zeta(table, 6, 12);
  CHECK(!loose.rigorous);
  CHECK(loose.partial > 1);

  auto tight = length_zeta(table, 6, 12, GrowthMajorant{200.0, 3.0});
  CHECK(tight.rigorous);
  CHECK(tight.partial == Approx(loose.partial));
}

TEST_CASE("t2 bound for polynomial weights") {
  auto z1 = length_zeta_zd(1, 2, 0);
  CHECK(t2_bound_poly(1, z1) == Approx(std::sqrt(3.0)).epsilon(1e-14));
  auto z2 = length_zeta_zd(2, 4, 0);
  CHECK(t2_bound_poly(2, z2) == Approx(2 * std::sqrt(5.0)).epsilon(1e-14));
  CHECK_THROWS_AS(t2_bound_poly(1, z2), std::invalid_argument);
}

TEST_CASE("multiplication norm bound, polynomial path") {
  double kg = kDefaultGrothendieck;
  auto z = length_zeta_zd(1, 2, 0);
  auto r = m_eps_upper_poly(1, kg, z, 1);
  CHECK(r.bound == Approx(std::sqrt(3.0) * kg).epsilon(1e-14));
  CHECK(r.rigorous);
  CHECK(r.bound >= kg);

  CHECK_THROWS_AS(m_eps_upper_poly(0.5, kg, length_zeta_zd(1, 1, 0), 1),
                  std::domain_error);
  CHECK_THROWS_AS(
      m_eps_upper_poly(1.0, kg, length_zeta_zd(1, 2, 0), 1, false),
      std::domain_error);
}

TEST_CASE("beta selection") {
  CHECK(beta_selection(0.5, 24, 1, true) == Approx(1));
  CHECK(beta_selection(0.9, 0.1, 2, true) ==
        Approx(6 / (0.1 * 0.9 * 0.1)).epsilon(1e-12));
  CHECK(beta_selection(0.5, 24, 4, false) == Approx(2.5));
  CHECK_THROWS_AS(beta_selection(0, 1, 1, true), std::invalid_argument);
}

TEST_CASE("multiplication norm bound, exponential path") {
  double kg = kDefaultGrothendieck;
  auto z = length_zeta_zd(1, 2, 0);
  auto r = m_eps_upper_exp(0.5, 24, kg, 1, z);
  CHECK(r.beta_used == Approx(1));
  CHECK(r.M_used == Approx(1));
  CHECK(r.bound == Approx(std::sqrt(3.0) * kg).epsilon(1e-14));

  // The bound blows up toward both ends of the alpha range.
  auto value_at = [&](double alpha) {
    double beta = beta_selection(alpha, 24, 1, true);
    auto zeta = length_zeta_zd(1, 2 * beta, 0);
    return m_eps_upper_exp(alpha, 24, kg, 1, zeta).bound;
  };
  CHECK(value_at(0.02) > value_at(0.5));
  CHECK(value_at(0.98) > value_at(0.5));
  CHECK_THROWS_AS(m_eps_upper_exp(1.0, 24, kg, 1, z), std::domain_error);
}

TEST_CASE("littlewood decomposition") {
  auto table = bfs_balls(GroupDescriptor::zd(1), 50);
  auto omega = omega_matrix(WeightSpec::polynomial(1), table, 50);
  auto zeta = length_zeta_zd(1, 2, 0);
  auto report = verify_decomposition(omega, 1, zeta);
  CHECK(report.pass);
  CHECK(report.reconstruction);
  CHECK(report.restricted_column_sup <= std::sqrt(3.0) + 1e-9);

  // R = 0: only the identity row, f1 = f2 = 1/2.
  auto tiny = omega_matrix(WeightSpec::polynomial(1), bfs_balls(GroupDescriptor::zd(1), 0), 0);
  auto tiny_report = verify_decomposition(tiny, 1, zeta);
  CHECK(tiny_report.pass);
  CHECK(tiny_report.restricted_column_sup == Approx(0.5));

  auto z2 = bfs_balls(GroupDescriptor::zd(2), 20);
  auto omega2 = omega_matrix(WeightSpec::polynomial(2), z2, 20);
  auto report2 = verify_decomposition(omega2, 2, length_zeta_zd(2, 4, 0));
  CHECK(report2.pass);
  CHECK(report2.restricted_column_sup <= 2 * std::sqrt(5.0) + 1e-9);
}

TEST_CASE("verdict dispatch") {
  double kg = kDefaultGrothendieck;
  auto z2 = GroupDescriptor::zd(2);
  auto v1 = operator_alg_verdict(z2, 2, true, WeightSpec::polynomial(1.5), kg);
  CHECK(v1.status == Verdict::Status::InjectiveAlgebra);
  REQUIRE(v1.bound.has_value());

  for (auto desc : {GroupDescriptor::zd(1), GroupDescriptor::heisenberg(),
                    GroupDescriptor::free2()}) {
    auto v_zero =
        operator_alg_verdict(desc, 1, true, WeightSpec::exponential(0, 3), kg);
    CHECK(v_zero.status == Verdict::Status::NotOperatorAlgebra);
    CHECK(v_zero.reason == "alpha_zero");
    auto v_one =
        operator_alg_verdict(desc, 1, true, WeightSpec::exponential(1, 3), kg);
    CHECK(v_one.status == Verdict::Status::NotOperatorAlgebra);
    CHECK(v_one.reason == "alpha_one");
  }

  auto h3 = GroupDescriptor::heisenberg();
  auto v2 = operator_alg_verdict(h3, 4, false, WeightSpec::polynomial(3), kg);
  CHECK(v2.status == Verdict::Status::InjectiveAlgebra);
  auto v3 = operator_alg_verdict(h3, 4, false, WeightSpec::polynomial(2), kg);
  CHECK(v3.status == Verdict::Status::OutsideTheoremHypotheses);

  auto f2 = GroupDescriptor::free2();
  auto v4 = operator_alg_verdict(f2, 0, false, WeightSpec::polynomial(3), kg);
  CHECK(v4.status == Verdict::Status::OutsideTheoremHypotheses);
}
