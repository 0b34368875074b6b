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

// Test-only oracles, independent of the implementation paths they check.

#pragma once

#include <cmath>
#include <unordered_map>
#include <vector>

#include "wga/group.hpp"

namespace wga::testing {

/// Word lengths by repeated set products S_n = S_{n-1} * F; independent of
/// the BFS parent machinery in bfs_balls.
inline std::unordered_map<GroupElement, int, GroupElementHash>
brute_force_lengths(const GroupDescriptor& desc, int radius) {
  std::unordered_map<GroupElement, int, GroupElementHash> lengths;
  lengths.emplace(desc.identity(), 0);
  std::vector<GroupElement> shell = {desc.identity()};
  const auto gens = desc.generators();
  for (int n = 1; n <= radius; ++n) {
    std::vector<GroupElement> next;
    for (const auto& x : shell)
      for (const auto& g : gens) {
        GroupElement y = multiply(x, g);
        if (lengths.emplace(y, n).second) next.push_back(std::move(y));
      }
    shell = std::move(next);
  }
  return lengths;
}

inline std::vector<std::size_t> brute_force_ball_sizes(
    const GroupDescriptor& desc, int radius) {
  auto lengths = brute_force_lengths(desc, radius);
  std::vector<std::size_t> cumulative(radius + 1, 0);
  for (const auto& [x, n] : lengths)
    for (int r = n; r <= radius; ++r) ++cumulative[r];
  return cumulative;
}

/// Exact spectral norm of a 2x2 real matrix from the singular value formula.
inline double spectral_norm_2x2(double a, double b, double c, double d) {
  double t = a * a + b * b + c * c + d * d;
  double det = a * d - b * c;
  double disc = std::sqrt(std::max(0.0, t * t - 4 * det * det));
  return std::sqrt((t + disc) / 2);
}

}  // namespace wga::testing
