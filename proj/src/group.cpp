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

#include "wga/group.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace wga {

std::string to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::Zd: return "zd";
    case GroupKind::Heisenberg: return "heisenberg";
    case GroupKind::Free2: return "free2";
  }
  return "?";
}

GroupKind group_kind_from_string(const std::string& s) {
  if (s == "zd") return GroupKind::Zd;
  if (s == "heisenberg") return GroupKind::Heisenberg;
  if (s == "free2") return GroupKind::Free2;
  throw std::invalid_argument("unknown group kind: " + s);
}

GroupElement GroupElement::zd(std::vector<std::int64_t> coords) {
  GroupElement e;
  e.kind = GroupKind::Zd;
  e.z = std::move(coords);
  return e;
}

GroupElement GroupElement::heisenberg(std::int64_t a, std::int64_t b,
                                      std::int64_t c) {
  GroupElement e;
  e.kind = GroupKind::Heisenberg;
  e.h = {a, b, c};
  return e;
}

namespace {

// Appends a syllable to a reduced word, keeping it reduced.
void push_reduced(std::vector<Free2Syllable>& word, Free2Syllable s) {
  if (s.exp == 0) return;
  if (!word.empty() && word.back().gen == s.gen) {
    word.back().exp += s.exp;
    if (word.back().exp == 0) word.pop_back();
    return;
  }
  word.push_back(s);
}

}  // namespace

GroupElement GroupElement::free2(std::vector<Free2Syllable> syllables) {
  GroupElement e;
  e.kind = GroupKind::Free2;
  for (const auto& s : syllables) push_reduced(e.word, s);
  return e;
}

bool GroupElement::is_identity() const {
  switch (kind) {
    case GroupKind::Zd:
      return std::all_of(z.begin(), z.end(),
                         [](std::int64_t c) { return c == 0; });
    case GroupKind::Heisenberg:
      return h == std::array<std::int64_t, 3>{0, 0, 0};
    case GroupKind::Free2:
      return word.empty();
  }
  return false;
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case GroupKind::Zd: {
      os << '(';
      for (std::size_t i = 0; i < z.size(); ++i) {
        if (i) os << ',';
        os << z[i];
      }
      os << ')';
      break;
    }
    case GroupKind::Heisenberg:
      os << '(' << h[0] << ',' << h[1] << ',' << h[2] << ')';
      break;
    case GroupKind::Free2: {
      if (word.empty()) return "e";
      for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) os << ' ';
        os << 'g' << (word[i].gen + 1);
        if (word[i].exp != 1) os << '^' << word[i].exp;
      }
      break;
    }
  }
  return os.str();
}

std::size_t GroupElementHash::operator()(const GroupElement& x) const noexcept {
  // FNV-1a over the payload words.
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(x.kind));
  switch (x.kind) {
    case GroupKind::Zd:
      for (auto c : x.z) mix(static_cast<std::uint64_t>(c));
      break;
    case GroupKind::Heisenberg:
      for (auto c : x.h) mix(static_cast<std::uint64_t>(c));
      break;
    case GroupKind::Free2:
      for (const auto& s : x.word) {
        mix(static_cast<std::uint64_t>(s.gen));
        mix(static_cast<std::uint64_t>(s.exp));
      }
      break;
  }
  return static_cast<std::size_t>(h);
}

GroupDescriptor GroupDescriptor::zd(int d) {
  if (d < 1) throw std::invalid_argument("Z^d dimension must be >= 1");
  GroupDescriptor desc;
  desc.kind = GroupKind::Zd;
  desc.dim = d;
  return desc;
}

GroupDescriptor GroupDescriptor::heisenberg() {
  GroupDescriptor desc;
  desc.kind = GroupKind::Heisenberg;
  desc.dim = 0;
  return desc;
}

GroupDescriptor GroupDescriptor::free2() {
  GroupDescriptor desc;
  desc.kind = GroupKind::Free2;
  desc.dim = 0;
  return desc;
}

GroupElement GroupDescriptor::identity() const {
  switch (kind) {
    case GroupKind::Zd:
      return GroupElement::zd(std::vector<std::int64_t>(dim, 0));
    case GroupKind::Heisenberg:
      return GroupElement::heisenberg(0, 0, 0);
    case GroupKind::Free2:
      return GroupElement::free2({});
  }
  throw std::logic_error("bad kind");
}

std::vector<GroupElement> GroupDescriptor::generators() const {
  std::vector<GroupElement> gens;
  switch (kind) {
    case GroupKind::Zd: {
      // All nonzero vectors with entries in {-1,0,1}.
      std::vector<std::int64_t> v(dim, -1);
      while (true) {
        if (std::any_of(v.begin(), v.end(),
                        [](std::int64_t c) { return c != 0; }))
          gens.push_back(GroupElement::zd(v));
        int i = 0;
        for (; i < dim; ++i) {
          if (v[i] < 1) {
            ++v[i];
            break;
          }
          v[i] = -1;
        }
        if (i == dim) break;
      }
      break;
    }
    case GroupKind::Heisenberg:
      for (int axis = 0; axis < 3; ++axis)
        for (int sign : {1, -1}) {
          std::int64_t a = axis == 0 ? sign : 0;
          std::int64_t b = axis == 1 ? sign : 0;
          std::int64_t c = axis == 2 ? sign : 0;
          gens.push_back(GroupElement::heisenberg(a, b, c));
        }
      break;
    case GroupKind::Free2:
      for (int g : {0, 1})
        for (std::int64_t e : {std::int64_t{1}, std::int64_t{-1}})
          gens.push_back(GroupElement::free2({{g, e}}));
      break;
  }
  return gens;
}

std::string GroupDescriptor::name() const {
  switch (kind) {
    case GroupKind::Zd: return "Z^" + std::to_string(dim);
    case GroupKind::Heisenberg: return "H3(Z)";
    case GroupKind::Free2: return "F2";
  }
  return "?";
}

GroupElement multiply(const GroupElement& x, const GroupElement& y) {
  if (x.kind != y.kind)
    throw std::invalid_argument("multiply: mismatched group kinds");
  switch (x.kind) {
    case GroupKind::Zd: {
      if (x.z.size() != y.z.size())
        throw std::invalid_argument("multiply: mismatched Z^d dimensions");
      GroupElement r = x;
      for (std::size_t i = 0; i < r.z.size(); ++i) r.z[i] += y.z[i];
      return r;
    }
    case GroupKind::Heisenberg:
      return GroupElement::heisenberg(x.h[0] + y.h[0], x.h[1] + y.h[1],
                                      x.h[0] * y.h[1] + x.h[2] + y.h[2]);
    case GroupKind::Free2: {
      GroupElement r = x;
      for (const auto& s : y.word) push_reduced(r.word, s);
      return r;
    }
  }
  throw std::logic_error("bad kind");
}

GroupElement inverse(const GroupElement& x) {
  switch (x.kind) {
    case GroupKind::Zd: {
      GroupElement r = x;
      for (auto& c : r.z) c = -c;
      return r;
    }
    case GroupKind::Heisenberg:
      // (a,b,c)^{-1} = (-a,-b,ab-c).
      return GroupElement::heisenberg(-x.h[0], -x.h[1],
                                      x.h[0] * x.h[1] - x.h[2]);
    case GroupKind::Free2: {
      GroupElement r;
      r.kind = GroupKind::Free2;
      r.word.reserve(x.word.size());
      for (auto it = x.word.rbegin(); it != x.word.rend(); ++it)
        r.word.push_back({it->gen, -it->exp});
      return r;
    }
  }
  throw std::logic_error("bad kind");
}

std::optional<int> BallTable::lookup_tau(const GroupElement& x) const {
  auto it = index.find(x);
  if (it == index.end()) return std::nullopt;
  return tau[it->second];
}

std::vector<std::size_t> BallTable::sphere(int n) const {
  std::vector<std::size_t> out;
  if (n < 0 || n > radius) return out;
  std::size_t lo = n == 0 ? 0 : cumulative[n - 1];
  std::size_t hi = cumulative[n];
  out.reserve(hi - lo);
  for (std::size_t i = lo; i < hi; ++i) out.push_back(i);
  return out;
}

BallTable bfs_balls(const GroupDescriptor& desc, int radius, std::size_t cap) {
  if (radius < 0) throw std::invalid_argument("bfs_balls: radius must be >= 0");
  BallTable table;
  table.desc = desc;
  table.radius = radius;

  const auto gens = desc.generators();
  table.elements.push_back(desc.identity());
  table.tau.push_back(0);
  table.parent.push_back(-1);
  table.parent_gen.push_back(-1);
  table.index.emplace(table.elements[0], 0);
  table.sphere_sizes.push_back(1);
  table.cumulative.push_back(1);

  std::size_t frontier_begin = 0;
  std::size_t frontier_end = 1;
  for (int n = 1; n <= radius; ++n) {
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      // Copy: elements may reallocate while we append.
      const GroupElement cur = table.elements[i];
      for (std::size_t g = 0; g < gens.size(); ++g) {
        GroupElement next = multiply(cur, gens[g]);
        if (table.index.contains(next)) continue;
        if (table.elements.size() >= cap)
          throw ResourceError(
              "bfs_balls: ball size cap exceeded at radius " +
                  std::to_string(n),
              table.elements.size() + 1);
        table.index.emplace(next, table.elements.size());
        table.elements.push_back(std::move(next));
        table.tau.push_back(n);
        table.parent.push_back(static_cast<std::int64_t>(i));
        table.parent_gen.push_back(static_cast<int>(g));
      }
    }
    frontier_begin = frontier_end;
    frontier_end = table.elements.size();
    table.sphere_sizes.push_back(frontier_end - frontier_begin);
    table.cumulative.push_back(frontier_end);
  }
  return table;
}

int word_length(const GroupElement& x, const GroupDescriptor& desc,
                const BallTable* table) {
  if (x.kind != desc.kind)
    throw std::invalid_argument("word_length: element/descriptor kind mismatch");
  switch (desc.kind) {
    case GroupKind::Zd: {
      std::int64_t m = 0;
      for (auto c : x.z) m = std::max(m, std::abs(c));
      return static_cast<int>(m);
    }
    case GroupKind::Free2: {
      std::int64_t m = 0;
      for (const auto& s : x.word) m += std::abs(s.exp);
      return static_cast<int>(m);
    }
    case GroupKind::Heisenberg: {
      if (table != nullptr) {
        if (auto t = table->lookup_tau(x)) return *t;
      }
      // No closed form for H3; a coarse lower bound on the needed radius is
      // max(|a|,|b|) + |c| reachable only with that many generators.
      int hint = static_cast<int>(std::max(std::abs(x.h[0]), std::abs(x.h[1])) +
                                  std::abs(x.h[2]));
      throw OutOfBallError(
          "word_length: H3 element " + x.to_string() +
              " outside the computed ball; a table of radius >= " +
              std::to_string(hint) + " may be required",
          hint);
    }
  }
  throw std::logic_error("bad kind");
}

std::optional<int> LengthOracle::try_length(const GroupElement& x) const {
  if (desc_.has_closed_length()) return word_length(x, desc_, table_);
  if (table_ != nullptr) return table_->lookup_tau(x);
  return std::nullopt;
}

GrowthFit growth_order_fit(const BallTable& table, int n_min) {
  if (n_min < 0) n_min = std::max(1, table.radius / 2);
  if (n_min < 1 || table.radius < n_min + 4)
    throw std::invalid_argument(
        "growth_order_fit: table radius must be >= n_min + 4");
  GrowthFit fit;
  fit.n_min = n_min;
  fit.n_max = table.radius;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (int n = n_min; n <= table.radius; ++n) {
    double lx = std::log(static_cast<double>(n));
    double ly = std::log(static_cast<double>(table.cumulative[n]));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++count;
  }
  double denom = count * sxx - sx * sx;
  fit.exponent = (count * sxy - sx * sy) / denom;
  double intercept = (sy - fit.exponent * sx) / count;
  double ss = 0;
  for (int n = n_min; n <= table.radius; ++n) {
    double lx = std::log(static_cast<double>(n));
    double ly = std::log(static_cast<double>(table.cumulative[n]));
    double r = ly - (intercept + fit.exponent * lx);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / count);
  return fit;
}

std::int64_t bass_guivarch(const std::vector<std::pair<int, int>>& ranks) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (ranks[i].first < 1 || ranks[i].second < 0)
      throw std::invalid_argument("bass_guivarch: invalid (k, rank) entry");
    for (std::size_t j = 0; j < i; ++j)
      if (ranks[j].first == ranks[i].first)
        throw std::invalid_argument("bass_guivarch: duplicate k value");
    total += static_cast<std::int64_t>(ranks[i].first) * ranks[i].second;
  }
  return total;
}

namespace {

void check_triangle_pair(int tx, int ty, std::optional<int> txy,
                         TriangleReport& report) {
  if (!txy) {
    ++report.skipped;
    return;
  }
  ++report.checked;
  if (std::abs(tx - ty) > *txy || *txy > tx + ty) ++report.violations;
}

}  // namespace

TriangleReport triangle_check(const BallTable& table, int max_len) {
  TriangleReport report;
  LengthOracle oracle(table.desc, &table);
  std::size_t limit =
      max_len >= table.radius ? table.elements.size() : table.cumulative[max_len];
  for (std::size_t i = 0; i < limit; ++i)
    for (std::size_t j = 0; j < limit; ++j) {
      GroupElement xy = multiply(table.elements[i], table.elements[j]);
      check_triangle_pair(table.tau[i], table.tau[j], oracle.try_length(xy),
                          report);
    }
  return report;
}

TriangleReport triangle_check(
    const std::vector<std::pair<GroupElement, GroupElement>>& pairs,
    const LengthOracle& oracle) {
  TriangleReport report;
  for (const auto& [x, y] : pairs) {
    auto tx = oracle.try_length(x);
    auto ty = oracle.try_length(y);
    if (!tx || !ty) {
      ++report.skipped;
      continue;
    }
    check_triangle_pair(*tx, *ty, oracle.try_length(multiply(x, y)), report);
  }
  return report;
}

std::optional<std::pair<GroupElement, GroupElement>> additivity_witness(
    const BallTable& table, int m, int n) {
  if (m < 2 || n < 2)
    throw std::invalid_argument("additivity_witness: need m, n >= 2");
  if (table.radius < m + n)
    throw std::invalid_argument(
        "additivity_witness: table radius must be >= m + n");
  if (table.sphere_sizes[m + n] == 0) return std::nullopt;
  // First element of the (m+n)-sphere; walk parent links up m steps to reach
  // the chain element x with tau(x) = n, then y = x^{-1} a.
  std::size_t a_idx = table.cumulative[m + n - 1];
  std::size_t x_idx = a_idx;
  for (int step = 0; step < m; ++step)
    x_idx = static_cast<std::size_t>(table.parent[x_idx]);
  const GroupElement& a = table.elements[a_idx];
  const GroupElement& x = table.elements[x_idx];
  GroupElement y = multiply(inverse(x), a);
  return std::make_pair(x, y);
}

}  // namespace wga
