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

#include <random>

#include <doctest.h>

#include "oracles.hpp"
#include "wga/group.hpp"

using namespace wga;

namespace {

GroupElement random_element(const GroupDescriptor& desc, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> coord(-20, 20);
  switch (desc.kind) {
    case GroupKind::Zd: {
      std::vector<std::int64_t> v(desc.dim);
      for (auto& c : v) c = coord(rng);
      return GroupElement::zd(std::move(v));
    }
    case GroupKind::Heisenberg:
      return GroupElement::heisenberg(coord(rng), coord(rng), coord(rng));
    case GroupKind::Free2: {
      std::uniform_int_distribution<int> len(0, 6);
      std::uniform_int_distribution<int> gen(0, 1);
      std::uniform_int_distribution<std::int64_t> exp(-3, 3);
      std::vector<Free2Syllable> w;
      int n = len(rng);
      for (int i = 0; i < n; ++i) w.push_back({gen(rng), exp(rng)});
      return GroupElement::free2(std::move(w));
    }
  }
  throw std::logic_error("bad kind");
}

}  // namespace

TEST_CASE("heisenberg product") {
  auto x = GroupElement::heisenberg(1, 0, 0);
  auto y = GroupElement::heisenberg(0, 1, 0);
  CHECK(multiply(x, y) == GroupElement::heisenberg(1, 1, 1));
  auto e = GroupElement::heisenberg(0, 0, 0);
  auto g = GroupElement::heisenberg(3, -2, 7);
  CHECK(multiply(g, e) == g);
  // Commutator [x, y] = x y x^{-1} y^{-1}, worked out by hand.
  auto c = multiply(multiply(multiply(x, y), inverse(x)), inverse(y));
  CHECK(c == GroupElement::heisenberg(0, 0, 1));
}

TEST_CASE("multiply rejects mismatched kinds") {
  CHECK_THROWS_AS(
      multiply(GroupElement::zd({1}), GroupElement::heisenberg(0, 0, 0)),
      std::invalid_argument);
}

TEST_CASE("inverse") {
  CHECK(inverse(GroupElement::zd({3, -2})) == GroupElement::zd({-3, 2}));
  CHECK(inverse(GroupElement::heisenberg(1, 1, 1)) ==
        GroupElement::heisenberg(-1, -1, 0));
  auto w = GroupElement::free2({{0, 1}, {1, 2}});
  CHECK(inverse(w) == GroupElement::free2({{1, -2}, {0, -1}}));

  std::mt19937_64 rng(7);
  for (auto desc : {GroupDescriptor::zd(3), GroupDescriptor::heisenberg(),
                    GroupDescriptor::free2()}) {
    for (int i = 0; i < 200; ++i) {
      auto x = random_element(desc, rng);
      CHECK(multiply(x, inverse(x)) == desc.identity());
    }
  }
}

TEST_CASE("free2 words stay reduced") {
  auto w = GroupElement::free2({{0, 2}, {0, -2}, {1, 1}, {1, -1}, {0, 3}});
  CHECK(w == GroupElement::free2({{0, 3}}));
  auto x = GroupElement::free2({{0, 1}, {1, 1}});
  auto y = GroupElement::free2({{1, -1}, {0, 4}});
  CHECK(multiply(x, y) == GroupElement::free2({{0, 5}}));
  for (const auto& s : multiply(x, y).word) CHECK(s.exp != 0);
}

TEST_CASE("multiply associative on random triples") {
  std::mt19937_64 rng(11);
  for (auto desc : {GroupDescriptor::zd(2), GroupDescriptor::heisenberg(),
                    GroupDescriptor::free2()}) {
    for (int i = 0; i < 1000; ++i) {
      auto x = random_element(desc, rng);
      auto y = random_element(desc, rng);
      auto z = random_element(desc, rng);
      CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
    }
  }
}

TEST_CASE("word_length closed forms") {
  auto z2 = GroupDescriptor::zd(2);
  CHECK(word_length(GroupElement::zd({3, -2}), z2) == 3);
  CHECK(word_length(z2.identity(), z2) == 0);
  auto f2 = GroupDescriptor::free2();
  CHECK(word_length(GroupElement::free2({{0, 1}, {1, -2}}), f2) == 3);
  CHECK(word_length(f2.identity(), f2) == 0);
}

TEST_CASE("word_length for H3 needs a covering table") {
  auto h3 = GroupDescriptor::heisenberg();
  CHECK_THROWS_AS(word_length(GroupElement::heisenberg(5, 5, 0), h3),
                  OutOfBallError);
  auto table = bfs_balls(h3, 3);
  CHECK(word_length(GroupElement::heisenberg(0, 0, 1), h3, &table) == 1);
  CHECK(word_length(GroupElement::heisenberg(1, 1, 1), h3, &table) == 2);
  CHECK_THROWS_AS(word_length(GroupElement::heisenberg(9, 0, 0), h3, &table),
                  OutOfBallError);
}

TEST_CASE("closed-form lengths agree with the set-product oracle") {
  for (auto desc : {GroupDescriptor::zd(1), GroupDescriptor::zd(2),
                    GroupDescriptor::free2()}) {
    auto oracle = testing::brute_force_lengths(desc, 5);
    for (const auto& [x, n] : oracle) CHECK(word_length(x, desc) == n);
  }
}

TEST_CASE("bfs ball sizes") {
  auto z2 = bfs_balls(GroupDescriptor::zd(2), 3);
  CHECK(z2.cumulative == std::vector<std::size_t>{1, 9, 25, 49});

  auto trivial = bfs_balls(GroupDescriptor::zd(2), 0);
  CHECK(trivial.elements.size() == 1);
  CHECK(trivial.cumulative == std::vector<std::size_t>{1});

  // Reduced words of length <= n in F2 number 2*3^n - 1.
  auto f2 = bfs_balls(GroupDescriptor::free2(), 3);
  CHECK(f2.cumulative == std::vector<std::size_t>{1, 5, 17, 53});

  auto h3 = bfs_balls(GroupDescriptor::heisenberg(), 4);
  CHECK(h3.cumulative ==
        testing::brute_force_ball_sizes(GroupDescriptor::heisenberg(), 4));
}

TEST_CASE("bfs respects the cap") {
  CHECK_THROWS_AS(bfs_balls(GroupDescriptor::zd(2), 10, 50), ResourceError);
}

TEST_CASE("sphere sizes sum to cumulative and parents chain to identity") {
  for (auto desc : {GroupDescriptor::zd(2), GroupDescriptor::heisenberg(),
                    GroupDescriptor::free2()}) {
    auto table = bfs_balls(desc, 4);
    std::size_t total = 0;
    for (int n = 0; n <= table.radius; ++n) {
      total += table.sphere_sizes[n];
      CHECK(table.cumulative[n] == total);
    }
    for (std::size_t i = 0; i < table.elements.size(); ++i) {
      int steps = 0;
      std::int64_t cur = static_cast<std::int64_t>(i);
      while (table.parent[cur] >= 0) {
        CHECK(table.tau[table.parent[cur]] == table.tau[cur] - 1);
        cur = table.parent[cur];
        ++steps;
      }
      CHECK(steps == table.tau[i]);
      CHECK(table.elements[cur] == desc.identity());
    }
  }
}

TEST_CASE("bfs tau equals closed form on Z^d and F2") {
  for (int d : {1, 2, 3}) {
    auto desc = GroupDescriptor::zd(d);
    auto table = bfs_balls(desc, d == 3 ? 5 : 8);
    for (std::size_t i = 0; i < table.elements.size(); ++i)
      CHECK(table.tau[i] == word_length(table.elements[i], desc));
  }
  auto f2 = GroupDescriptor::free2();
  auto table = bfs_balls(f2, 6);
  for (std::size_t i = 0; i < table.elements.size(); ++i)
    CHECK(table.tau[i] == word_length(table.elements[i], f2));
}

TEST_CASE("growth fit on Z^1") {
  auto table = bfs_balls(GroupDescriptor::zd(1), 60);
  auto fit = growth_order_fit(table);
  CHECK(fit.exponent > 0.9);
  CHECK(fit.exponent < 1.1);
  CHECK_THROWS_AS(growth_order_fit(table, 58), std::invalid_argument);
}

TEST_CASE("bass-guivarch") {
  CHECK(bass_guivarch({{1, 2}, {2, 1}}) == 4);
  CHECK(bass_guivarch({{1, 5}}) == 5);
  CHECK(bass_guivarch({}) == 0);
  CHECK_THROWS_AS(bass_guivarch({{1, 1}, {1, 2}}), std::invalid_argument);
}

TEST_CASE("triangle inequality") {
  auto z2 = bfs_balls(GroupDescriptor::zd(2), 8);
  auto r1 = triangle_check(z2, 4);
  CHECK(r1.violations == 0);
  CHECK(r1.skipped == 0);

  auto h3 = bfs_balls(GroupDescriptor::heisenberg(), 6);
  auto r2 = triangle_check(h3, 3);
  CHECK(r2.violations == 0);
  CHECK(r2.skipped == 0);

  // Random F2 pairs with closed-form lengths.
  std::mt19937_64 rng(3);
  auto f2 = GroupDescriptor::free2();
  std::vector<std::pair<GroupElement, GroupElement>> pairs;
  for (int i = 0; i < 10000; ++i)
    pairs.emplace_back(random_element(f2, rng), random_element(f2, rng));
  auto r3 = triangle_check(pairs, LengthOracle(f2));
  CHECK(r3.violations == 0);
}

TEST_CASE("additivity witness") {
  auto z1 = bfs_balls(GroupDescriptor::zd(1), 6);
  auto w1 = additivity_witness(z1, 2, 2);
  REQUIRE(w1.has_value());
  auto oracle1 = LengthOracle(GroupDescriptor::zd(1));
  CHECK(oracle1(w1->first) == 2);
  CHECK(oracle1(w1->second) == 2);
  CHECK(oracle1(multiply(w1->first, w1->second)) == 4);

  auto h3 = bfs_balls(GroupDescriptor::heisenberg(), 6);
  auto w2 = additivity_witness(h3, 2, 3);
  REQUIRE(w2.has_value());
  auto oracle2 = LengthOracle(GroupDescriptor::heisenberg(), &h3);
  CHECK(oracle2(w2->first) == 3);
  CHECK(oracle2(w2->second) == 2);
  CHECK(oracle2(multiply(w2->first, w2->second)) == 5);

  CHECK_THROWS_AS(additivity_witness(z1, 4, 4), std::invalid_argument);
  CHECK_THROWS_AS(additivity_witness(z1, 1, 2), std::invalid_argument);
}
