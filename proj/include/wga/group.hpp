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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wga/errors.hpp"

namespace wga {

enum class GroupKind { Zd, Heisenberg, Free2 };

std::string to_string(GroupKind kind);
GroupKind group_kind_from_string(const std::string& s);

/// One syllable g^e of a reduced word in the free group, gen in {0,1}, e != 0.
struct Free2Syllable {
  int gen;
  std::int64_t exp;
  bool operator==(const Free2Syllable&) const = default;
};

/// Exact element of Z^d, H3(Z) or F2 in normal form.
///
/// Z^d elements carry an integer coordinate vector, Heisenberg elements the
/// triple (a,b,c), and free-group elements a reduced word (no zero exponents,
/// no equal adjacent generators).
struct GroupElement {
  GroupKind kind = GroupKind::Zd;
  std::vector<std::int64_t> z;      // Zd payload
  std::array<std::int64_t, 3> h{};  // Heisenberg payload
  std::vector<Free2Syllable> word;  // Free2 payload, reduced

  static GroupElement zd(std::vector<std::int64_t> coords);
  static GroupElement heisenberg(std::int64_t a, std::int64_t b, std::int64_t c);
  /// Builds a free-group element; the input word is reduced if necessary.
  static GroupElement free2(std::vector<Free2Syllable> syllables);

  bool is_identity() const;
  bool operator==(const GroupElement&) const = default;

  /// Normal form, e.g. "(3,-2)", "(1,1,1)", "g1^2 g2^-1", "e".
  std::string to_string() const;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& x) const noexcept;
};

/// Group kind plus its fixed symmetric generating set (with identity).
struct GroupDescriptor {
  GroupKind kind = GroupKind::Zd;
  int dim = 1;  // Zd only

  static GroupDescriptor zd(int d);
  static GroupDescriptor heisenberg();
  static GroupDescriptor free2();

  GroupElement identity() const;
  /// Non-identity generators; the set together with the identity is symmetric.
  /// Z^d: all nonzero {-1,0,1}-vectors. H3: (+-1,0,0),(0,+-1,0),(0,0,+-1).
  /// F2: g1^{+-1}, g2^{+-1}.
  std::vector<GroupElement> generators() const;
  /// Whether the word length has a closed form (Z^d and F2 do, H3 does not).
  bool has_closed_length() const { return kind != GroupKind::Heisenberg; }
  std::string name() const;
};

GroupElement multiply(const GroupElement& x, const GroupElement& y);
GroupElement inverse(const GroupElement& x);

/// Exact sphere decomposition of the ball F^N with BFS parent links.
/// Immutable after construction; safe for concurrent reads.
struct BallTable {
  GroupDescriptor desc;
  int radius = 0;
  std::vector<GroupElement> elements;  // BFS discovery order, identity first
  std::vector<int> tau;                // word length per element
  std::vector<std::int64_t> parent;    // index into elements, -1 for identity
  std::vector<int> parent_gen;         // generator index used to reach element
  std::vector<std::size_t> sphere_sizes;  // |F^n \ F^{n-1}| for n = 0..radius
  std::vector<std::size_t> cumulative;    // |F^n| for n = 0..radius
  std::unordered_map<GroupElement, std::size_t, GroupElementHash> index;

  std::optional<int> lookup_tau(const GroupElement& x) const;
  /// Elements of the sphere of radius n (indices into `elements`).
  std::vector<std::size_t> sphere(int n) const;
};

inline constexpr std::size_t kDefaultBallCap = 20'000'000;

BallTable bfs_balls(const GroupDescriptor& desc, int radius,
                    std::size_t cap = kDefaultBallCap);

/// Word length tau(x). Closed forms for Z^d (max |coordinate|) and F2 (sum of
/// |exponents|); BFS table lookup for H3. Throws OutOfBallError when an H3
/// element is outside the provided table (or no table was given).
int word_length(const GroupElement& x, const GroupDescriptor& desc,
                const BallTable* table = nullptr);

/// Length evaluator bound to a descriptor and an optional ball table.
class LengthOracle {
 public:
  explicit LengthOracle(GroupDescriptor desc, const BallTable* table = nullptr)
      : desc_(std::move(desc)), table_(table) {}

  int operator()(const GroupElement& x) const {
    return word_length(x, desc_, table_);
  }
  std::optional<int> try_length(const GroupElement& x) const;
  const GroupDescriptor& descriptor() const { return desc_; }

 private:
  GroupDescriptor desc_;
  const BallTable* table_;
};

struct GrowthFit {
  double exponent = 0;
  double residual = 0;
  int n_min = 0;
  int n_max = 0;
};

/// Least-squares slope of log|F^n| against log n over n in [n_min, radius].
/// n_min < 0 selects the default radius/2.
GrowthFit growth_order_fit(const BallTable& table, int n_min = -1);

/// Sum of k * rank over the lower-central-series data.
std::int64_t bass_guivarch(
    const std::vector<std::pair<int, int>>& ranks);

struct TriangleReport {
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::size_t skipped = 0;  // pairs whose product length was unavailable
};

/// Checks |tau(x)-tau(y)| <= tau(xy) <= tau(x)+tau(y) over all pairs of table
/// elements with length <= max_len.
TriangleReport triangle_check(const BallTable& table, int max_len);

/// Same check over explicit pairs (lengths via the oracle).
TriangleReport triangle_check(
    const std::vector<std::pair<GroupElement, GroupElement>>& pairs,
    const LengthOracle& oracle);

/// Finds x, y with tau(x) = n, tau(y) = m and tau(xy) = m + n by factoring an
/// element of the (m+n)-sphere along its BFS parent chain. Empty only when
/// that sphere is empty.
std::optional<std::pair<GroupElement, GroupElement>> additivity_witness(
    const BallTable& table, int m, int n);

}  // namespace wga
