// Copyright 2026 The incmon Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "incmon/poset.h"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <unordered_map>

#include "incmon/errors.h"

namespace incmon {
namespace {

int PopCount(std::uint64_t mask) { return std::popcount(mask); }

template <typename Fn>
void ForEachBit(std::uint64_t mask, Fn&& fn) {
  while (mask != 0) {
    const int i = std::countr_zero(mask);
    fn(i);
    mask &= mask - 1;
  }
}

void CheckSize(std::size_t n) {
  if (n > static_cast<std::size_t>(kMaxPosetSize)) {
    throw DomainError("poset has " + std::to_string(n) +
                      " elements; at most " + std::to_string(kMaxPosetSize) +
                      " are supported");
  }
}

// Union-find over element indices, used for Hasse connectivity.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent_[a] = b;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

Poset Poset::FromUpSets(std::vector<std::string> labels,
                        std::vector<std::uint64_t> up_sets) {
  CheckSize(labels.size());
  const int n = static_cast<int>(labels.size());
  if (static_cast<int>(up_sets.size()) != n) {
    throw DomainError("relation size does not match the label count");
  }
  {
    std::set<std::string> seen;
    for (const std::string& l : labels) {
      if (!seen.insert(l).second) throw DomainError("duplicate label: " + l);
    }
  }
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : Bit(n) - 1;
  for (int i = 0; i < n; ++i) {
    if ((up_sets[i] & ~all) != 0) {
      throw DomainError("relation refers to a nonexistent element");
    }
    if (!(up_sets[i] & Bit(i))) {
      throw DomainError("relation is not reflexive at " + labels[i]);
    }
    // Linear extension: everything above i has a larger index. This also
    // rules out antisymmetry violations.
    if ((up_sets[i] & (Bit(i) - 1)) != 0) {
      throw DomainError("indices are not a linear extension at " + labels[i]);
    }
  }
  for (int i = 0; i < n; ++i) {
    ForEachBit(up_sets[i], [&](int j) {
      if ((up_sets[j] & ~up_sets[i]) != 0) {
        throw DomainError("relation is not transitive through " + labels[j]);
      }
    });
  }

  Poset p;
  p.labels_ = std::move(labels);
  p.up_ = std::move(up_sets);
  p.down_.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    ForEachBit(p.up_[i], [&](int j) { p.down_[j] |= Bit(i); });
  }
  p.upper_covers_.assign(n, 0);
  p.lower_covers_.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    const std::uint64_t strictly_above = p.up_[i] & ~Bit(i);
    ForEachBit(strictly_above, [&](int j) {
      const std::uint64_t between = strictly_above & p.down_[j] & ~Bit(j);
      if (between == 0) {
        p.upper_covers_[i] |= Bit(j);
        p.lower_covers_[j] |= Bit(i);
        p.covers_.emplace_back(i, j);
      }
    });
  }
  return p;
}

Poset Poset::FromRelation(std::vector<std::string> labels,
                          const std::vector<std::vector<bool>>& leq) {
  CheckSize(labels.size());
  std::vector<std::uint64_t> up(labels.size(), 0);
  if (leq.size() != labels.size()) {
    throw DomainError("relation size does not match the label count");
  }
  for (std::size_t i = 0; i < leq.size(); ++i) {
    if (leq[i].size() != labels.size()) {
      throw DomainError("relation is not square");
    }
    for (std::size_t j = 0; j < leq[i].size(); ++j) {
      if (leq[i][j]) up[i] |= Bit(static_cast<int>(j));
    }
  }
  return FromUpSets(std::move(labels), std::move(up));
}

std::optional<int> Poset::index_of(std::string_view label) const {
  for (int i = 0; i < size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

int Poset::relation_count() const {
  int total = 0;
  for (std::uint64_t u : up_) total += PopCount(u);
  return total;
}

std::vector<std::vector<bool>> Poset::relation() const {
  std::vector<std::vector<bool>> r(size(), std::vector<bool>(size(), false));
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < size(); ++j) r[i][j] = leq(i, j);
  }
  return r;
}

Poset from_covers(
    const std::vector<std::string>& labels,
    const std::vector<std::pair<std::string, std::string>>& cover_pairs) {
  CheckSize(labels.size());
  const int n = static_cast<int>(labels.size());
  std::unordered_map<std::string, int> input_index;
  for (int i = 0; i < n; ++i) {
    if (!input_index.emplace(labels[i], i).second) {
      throw DomainError("duplicate label: " + labels[i]);
    }
  }
  std::vector<std::uint64_t> succ(n, 0);
  std::vector<int> indegree(n, 0);
  for (const auto& [lo, hi] : cover_pairs) {
    const auto a = input_index.find(lo);
    const auto b = input_index.find(hi);
    if (a == input_index.end()) throw DomainError("unknown label: " + lo);
    if (b == input_index.end()) throw DomainError("unknown label: " + hi);
    if (a->second == b->second) {
      throw DomainError("cover pair (" + lo + ", " + hi + ") is a loop");
    }
    if (succ[a->second] & Bit(b->second)) {
      throw DomainError("duplicate cover pair (" + lo + ", " + hi + ")");
    }
    succ[a->second] |= Bit(b->second);
    ++indegree[b->second];
  }

  // Kahn's algorithm, always taking the smallest available input index.
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int i = 0; i < n; ++i) {
    if (indegree[i] == 0) ready.push(i);
  }
  std::vector<int> order;
  order.reserve(n);
  while (!ready.empty()) {
    const int v = ready.top();
    ready.pop();
    order.push_back(v);
    ForEachBit(succ[v], [&](int w) {
      if (--indegree[w] == 0) ready.push(w);
    });
  }
  if (static_cast<int>(order.size()) != n) {
    throw DomainError("cover pairs contain a directed cycle");
  }

  std::vector<int> new_index(n);
  for (int k = 0; k < n; ++k) new_index[order[k]] = k;
  std::vector<std::uint64_t> up(n, 0);
  for (int k = n - 1; k >= 0; --k) {
    const int v = order[k];
    up[k] = Bit(k);
    ForEachBit(succ[v], [&](int w) { up[k] |= up[new_index[w]]; });
  }
  std::vector<std::string> sorted_labels(n);
  for (int k = 0; k < n; ++k) sorted_labels[k] = labels[order[k]];
  Poset p = Poset::FromUpSets(std::move(sorted_labels), std::move(up));

  for (const auto& [lo, hi] : cover_pairs) {
    const int a = new_index[input_index.at(lo)];
    const int b = new_index[input_index.at(hi)];
    if (!(p.upper_covers(a) & Bit(b))) {
      throw DomainError("pair (" + lo + ", " + hi +
                        ") is implied by the other pairs; it is not a "
                        "covering relation");
    }
  }
  return p;
}

int cycle_rank(const Poset& p) {
  const int n = p.size();
  DisjointSets sets(n);
  for (const auto& [a, b] : p.covers()) sets.Union(a, b);
  int components = 0;
  for (int i = 0; i < n; ++i) components += sets.Find(i) == i;
  return static_cast<int>(p.covers().size()) - n + components;
}

CircuitStats circuit_stats(const Poset& p, std::uint64_t cap) {
  const int n = p.size();
  std::vector<std::uint64_t> adjacent(n);
  for (int i = 0; i < n; ++i) {
    adjacent[i] = p.upper_covers(i) | p.lower_covers(i);
  }

  CircuitStats stats;
  stats.cycle_rank = cycle_rank(p);

  // Each cycle is found twice from its smallest vertex, once per direction.
  std::uint64_t found = 0;
  std::uint64_t steps = 0;
  const std::uint64_t step_budget = cap > (~std::uint64_t{0} / 64)
                                        ? ~std::uint64_t{0}
                                        : cap * 64;
  bool capped = false;
  std::function<void(int, int, std::uint64_t, int)> walk =
      [&](int start, int v, std::uint64_t visited, int depth) {
        if (capped) return;
        if (++steps > step_budget) {
          capped = true;
          return;
        }
        ForEachBit(adjacent[v], [&](int w) {
          if (capped) return;
          if (w == start) {
            if (depth >= 2 && ++found > 2 * cap) capped = true;
          } else if (w > start && !(visited & Bit(w))) {
            walk(start, w, visited | Bit(w), depth + 1);
          }
        });
      };
  for (int s = 0; s < n && !capped; ++s) walk(s, s, Bit(s), 0);
  if (!capped) stats.simple_circuit_count = found / 2;
  return stats;
}

BigInt zeta_poly_eval(const Poset& p, std::int64_t m) {
  if (m < 2) {
    throw DomainError("zeta polynomial is only evaluated for m >= 2");
  }
  const int n = p.size();
  std::vector<BigInt> w(n, 1);
  std::vector<BigInt> next(n);
  for (std::int64_t k = 0; k < m - 2; ++k) {
    for (int i = 0; i < n; ++i) {
      next[i] = 0;
      ForEachBit(p.up_set(i), [&](int j) { next[i] += w[j]; });
    }
    w.swap(next);
  }
  BigInt total = 0;
  for (const BigInt& v : w) total += v;
  return total;
}

int height(const Poset& p) {
  const int n = p.size();
  if (n == 0) return -1;
  std::vector<int> below(n, 0);
  int best = 0;
  for (int j = 0; j < n; ++j) {
    ForEachBit(p.lower_covers(j),
               [&](int i) { below[j] = std::max(below[j], below[i] + 1); });
    best = std::max(best, below[j]);
  }
  return best;
}

GradedReport graded_report(const Poset& p) {
  const int n = p.size();
  GradedReport report;
  // chains_up[i]: length -> number of saturated chains from i to a maximal
  // element.
  std::vector<std::map<int, std::uint64_t>> chains_up(n);
  for (int i = n - 1; i >= 0; --i) {
    if (p.upper_covers(i) == 0) {
      chains_up[i][0] = 1;
      continue;
    }
    ForEachBit(p.upper_covers(i), [&](int j) {
      for (const auto& [len, count] : chains_up[j]) {
        chains_up[i][len + 1] += count;
      }
    });
  }
  std::vector<int> component(n);
  {
    DisjointSets sets(n);
    for (const auto& [a, b] : p.covers()) sets.Union(a, b);
    for (int i = 0; i < n; ++i) component[i] = sets.Find(i);
  }
  std::map<int, std::set<int>> lengths_by_component;
  for (int i = 0; i < n; ++i) {
    if (p.lower_covers(i) != 0) continue;
    for (const auto& [len, count] : chains_up[i]) {
      report.max_chain_lengths[len] += count;
      lengths_by_component[component[i]].insert(len);
    }
  }
  report.is_graded = std::all_of(
      lengths_by_component.begin(), lengths_by_component.end(),
      [](const auto& entry) { return entry.second.size() == 1; });
  if (report.is_graded) {
    std::vector<int> rank(n, 0);
    for (int j = 0; j < n; ++j) {
      ForEachBit(p.lower_covers(j),
                 [&](int i) { rank[j] = std::max(rank[j], rank[i] + 1); });
    }
    report.rank_of = std::move(rank);
  }
  return report;
}

bool is_antichain(const Poset& p, const IndexSet& elements) {
  for (std::size_t a = 0; a < elements.size(); ++a) {
    if (elements[a] < 0 || elements[a] >= p.size()) return false;
    if (a > 0 && elements[a] <= elements[a - 1]) return false;
    for (std::size_t b = 0; b < a; ++b) {
      if (p.comparable(elements[a], elements[b])) return false;
    }
  }
  return true;
}

std::vector<Antichain> antichains(const Poset& p, std::size_t cap) {
  const int n = p.size();
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : Bit(n) - 1;
  std::vector<std::uint64_t> comparable(n);
  for (int i = 0; i < n; ++i) comparable[i] = p.up_set(i) | p.down_set(i);

  std::vector<Antichain> out;
  IndexSet current;
  std::function<void(int, std::uint64_t)> extend = [&](int next,
                                                       std::uint64_t blocked) {
    if (out.size() >= cap) {
      throw CapExceeded("more than " + std::to_string(cap) + " antichains");
    }
    out.push_back({current, blocked == all});
    for (int i = next; i < n; ++i) {
      if (blocked & Bit(i)) continue;
      current.push_back(i);
      extend(i + 1, blocked | comparable[i]);
      current.pop_back();
    }
  };
  extend(0, 0);
  return out;
}

bool is_automorphism(const Poset& p, const Permutation& perm) {
  const int n = p.size();
  if (static_cast<int>(perm.size()) != n) return false;
  std::uint64_t seen = 0;
  for (int v : perm) {
    if (v < 0 || v >= n || (seen & Bit(v))) return false;
    seen |= Bit(v);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (p.leq(i, j) != p.leq(perm[i], perm[j])) return false;
    }
  }
  return true;
}

namespace {

// Equitable coloring by order statistics, refined by the colors of covers.
std::vector<int> RefinedColors(const Poset& p) {
  const int n = p.size();
  using Key = std::vector<int>;
  std::vector<int> color(n);
  auto assign = [&](const std::vector<Key>& keys) {
    std::vector<Key> distinct = keys;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()),
                   distinct.end());
    for (int i = 0; i < n; ++i) {
      color[i] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), keys[i]) -
          distinct.begin());
    }
    return static_cast<int>(distinct.size());
  };
  std::vector<Key> keys(n);
  for (int i = 0; i < n; ++i) {
    keys[i] = {PopCount(p.down_set(i)), PopCount(p.up_set(i)),
               PopCount(p.lower_covers(i)), PopCount(p.upper_covers(i))};
  }
  int classes = assign(keys);
  while (true) {
    for (int i = 0; i < n; ++i) {
      Key up;
      Key down;
      ForEachBit(p.upper_covers(i), [&](int j) { up.push_back(color[j]); });
      ForEachBit(p.lower_covers(i), [&](int j) { down.push_back(color[j]); });
      std::sort(up.begin(), up.end());
      std::sort(down.begin(), down.end());
      Key key = {color[i], -1};
      key.insert(key.end(), up.begin(), up.end());
      key.push_back(-1);
      key.insert(key.end(), down.begin(), down.end());
      keys[i] = std::move(key);
    }
    const int refined = assign(keys);
    if (refined == classes) break;
    classes = refined;
  }
  return color;
}

class AutomorphismSearch {
 public:
  AutomorphismSearch(const Poset& p, std::vector<int> colors)
      : p_(p), colors_(std::move(colors)) {}

  // Finds an automorphism fixing 0..fixed-1 and sending `fixed` to `target`.
  std::optional<Permutation> Find(int fixed, int target) {
    const int n = p_.size();
    image_.assign(n, -1);
    used_ = 0;
    for (int i = 0; i < fixed; ++i) Assign(i, i);
    if (!Consistent(fixed, target)) return std::nullopt;
    Assign(fixed, target);
    if (!Extend(0)) return std::nullopt;
    return image_;
  }

 private:
  void Assign(int point, int target) {
    image_[point] = target;
    used_ |= Bit(target);
  }

  bool Consistent(int point, int target) const {
    if (colors_[point] != colors_[target] || (used_ & Bit(target))) {
      return false;
    }
    for (int q = 0; q < p_.size(); ++q) {
      const int iq = image_[q];
      if (iq < 0) continue;
      if (p_.leq(point, q) != p_.leq(target, iq)) return false;
      if (p_.leq(q, point) != p_.leq(iq, target)) return false;
    }
    return true;
  }

  bool Extend(int from) {
    int point = from;
    while (point < p_.size() && image_[point] >= 0) ++point;
    if (point == p_.size()) return true;
    for (int target = 0; target < p_.size(); ++target) {
      if (!Consistent(point, target)) continue;
      Assign(point, target);
      if (Extend(point + 1)) return true;
      image_[point] = -1;
      used_ &= ~Bit(target);
    }
    return false;
  }

  const Poset& p_;
  std::vector<int> colors_;
  Permutation image_;
  std::uint64_t used_ = 0;
};

std::uint64_t OrbitOf(int point, const std::vector<Permutation>& generators) {
  std::uint64_t orbit = Bit(point);
  std::vector<int> frontier = {point};
  while (!frontier.empty()) {
    const int v = frontier.back();
    frontier.pop_back();
    for (const Permutation& g : generators) {
      if (!(orbit & Bit(g[v]))) {
        orbit |= Bit(g[v]);
        frontier.push_back(g[v]);
      }
    }
  }
  return orbit;
}

}  // namespace

AutomorphismGroup automorphisms(const Poset& p) {
  const int n = p.size();
  const std::vector<int> colors = RefinedColors(p);
  AutomorphismSearch search(p, colors);
  AutomorphismGroup group;
  group.order = 1;
  // Level k: pointwise stabilizer of x_1..x_k acting on x_{k+1}. Deeper
  // levels go first so their generators are available for orbit closure.
  std::vector<std::vector<Permutation>> by_level(n);
  std::vector<Permutation> known;
  for (int level = n - 1; level >= 0; --level) {
    std::uint64_t orbit = OrbitOf(level, known);
    for (int target = level + 1; target < n; ++target) {
      if ((orbit & Bit(target)) || colors[target] != colors[level]) continue;
      if (std::optional<Permutation> g = search.Find(level, target)) {
        known.push_back(*g);
        by_level[level].push_back(*std::move(g));
        orbit = OrbitOf(level, known);
      }
    }
    group.order *= PopCount(orbit);
  }
  for (auto& gens : by_level) {
    for (auto& g : gens) group.generators.push_back(std::move(g));
  }
  return group;
}

std::vector<Component> connected_components(const Poset& p) {
  const int n = p.size();
  DisjointSets sets(n);
  for (const auto& [a, b] : p.covers()) sets.Union(a, b);
  std::map<int, std::vector<int>> members;
  for (int i = 0; i < n; ++i) members[sets.Find(i)].push_back(i);

  std::vector<Component> out;
  for (auto& [root, to_parent] : members) {
    const int k = static_cast<int>(to_parent.size());
    std::vector<std::string> labels(k);
    std::vector<std::uint64_t> up(k, 0);
    for (int a = 0; a < k; ++a) {
      labels[a] = p.label(to_parent[a]);
      for (int b = 0; b < k; ++b) {
        if (p.leq(to_parent[a], to_parent[b])) up[a] |= Bit(b);
      }
    }
    out.push_back(
        {Poset::FromUpSets(std::move(labels), std::move(up)), to_parent});
  }
  return out;
}

}  // namespace incmon
