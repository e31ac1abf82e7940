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

#ifndef INCMON_POSET_H_
#define INCMON_POSET_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "incmon/rational.h"

namespace incmon {

// Element sets are stored as 64-bit masks, which bounds the poset size.
inline constexpr int kMaxPosetSize = 64;

// Sorted, duplicate-free list of element indices.
using IndexSet = std::vector<int>;

inline constexpr std::uint64_t Bit(int i) { return std::uint64_t{1} << i; }

// A finite poset whose element indices form a linear extension: x_i <= x_j
// implies i <= j. Immutable once built; all factories validate.
class Poset {
 public:
  // The empty poset.
  Poset() = default;

  // up_sets[i] has bit j set iff x_i <= x_j. Throws DomainError unless the
  // relation is a partial order whose indices are a linear extension.
  static Poset FromUpSets(std::vector<std::string> labels,
                          std::vector<std::uint64_t> up_sets);

  // Same as FromUpSets, from a dense boolean relation.
  static Poset FromRelation(std::vector<std::string> labels,
                            const std::vector<std::vector<bool>>& leq);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  std::optional<int> index_of(std::string_view label) const;

  bool leq(int i, int j) const { return (up_[i] >> j) & 1; }
  bool less(int i, int j) const { return i != j && leq(i, j); }
  bool comparable(int i, int j) const { return leq(i, j) || leq(j, i); }

  std::uint64_t up_set(int i) const { return up_[i]; }
  std::uint64_t down_set(int i) const { return down_[i]; }
  std::uint64_t upper_covers(int i) const { return upper_covers_[i]; }
  std::uint64_t lower_covers(int i) const { return lower_covers_[i]; }

  // Covering pairs (i, j), x_j covers x_i, sorted lexicographically.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  // Number of pairs (i, j) with x_i <= x_j, i.e. Z(P, 3).
  int relation_count() const;
  int nontrivial_relation_count() const { return relation_count() - size(); }

  std::vector<std::vector<bool>> relation() const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.labels_ == b.labels_ && a.up_ == b.up_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::uint64_t> up_;
  std::vector<std::uint64_t> down_;
  std::vector<std::uint64_t> upper_covers_;
  std::vector<std::uint64_t> lower_covers_;
  std::vector<std::pair<int, int>> covers_;
};

// Builds a poset from its Hasse diagram. Elements are re-indexed by a
// topological order that keeps the input order among incomparable elements.
// Throws DomainError on duplicate labels, unknown labels, duplicate pairs,
// directed cycles, and pairs implied transitively by the others.
Poset from_covers(const std::vector<std::string>& labels,
                  const std::vector<std::pair<std::string, std::string>>&
                      cover_pairs);

struct CircuitStats {
  // E - V + #components of the undirected Hasse graph.
  int cycle_rank = 0;
  // Number of simple cycles as edge sets; empty when the enumeration cap was
  // hit.
  std::optional<std::uint64_t> simple_circuit_count;
};

inline constexpr std::uint64_t kDefaultCycleCap = 1'000'000;

// E - V + #components of the undirected Hasse graph, without enumerating
// cycles.
int cycle_rank(const Poset& p);

CircuitStats circuit_stats(const Poset& p,
                           std::uint64_t cap = kDefaultCycleCap);

// Z(P, m): the number of multichains t_1 <= ... <= t_{m-1}, computed as the
// sum of the entries of zeta^(m-2). Throws DomainError for m < 2.
BigInt zeta_poly_eval(const Poset& p, std::int64_t m);

struct GradedReport {
  bool is_graded = false;
  // Per-element rank, minimal elements of each component at 0. Present only
  // for graded posets.
  std::optional<std::vector<int>> rank_of;
  // Maximal-chain length -> number of maximal chains of that length.
  std::map<int, std::uint64_t> max_chain_lengths;
};

// Graded means: within every connected component all maximal chains have
// the same length.
GradedReport graded_report(const Poset& p);

// Length of the longest chain (0 for an antichain, -1 for the empty poset).
int height(const Poset& p);

struct Antichain {
  IndexSet elements;
  bool is_maximal = false;
};

inline constexpr std::size_t kDefaultAntichainCap = 1'000'000;

bool is_antichain(const Poset& p, const IndexSet& elements);

// All antichains including the empty one, in lexicographic order of their
// sorted index lists. Throws CapExceeded past `cap` antichains.
std::vector<Antichain> antichains(const Poset& p,
                                  std::size_t cap = kDefaultAntichainCap);

// perm[i] is the image of element i.
using Permutation = std::vector<int>;

struct AutomorphismGroup {
  BigInt order;
  std::vector<Permutation> generators;
};

bool is_automorphism(const Poset& p, const Permutation& perm);

// Exact automorphism group of the order relation. Generators are a strong
// generating set along the base x_1, ..., x_n; the identity group has none.
AutomorphismGroup automorphisms(const Poset& p);

struct Component {
  Poset poset;
  // Component index -> parent index.
  std::vector<int> to_parent;
};

// Components of the undirected Hasse diagram, ordered by smallest member.
std::vector<Component> connected_components(const Poset& p);

}  // namespace incmon

#endif  // INCMON_POSET_H_
