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

#ifndef INCMON_ANTICHAIN_SUBMONOIDS_H_
#define INCMON_ANTICHAIN_SUBMONOIDS_H_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "incmon/incidence_algebra.h"
#include "incmon/poset.h"
#include "json.hpp"

namespace incmon {

// What a matrix cell of a parametrized submonoid may hold.
enum class Cell {
  kZero,      // forced 0
  kOne,       // forced 1
  kFreeUnit,  // any nonzero scalar (any scalar in the closure)
  kFree,      // any scalar
};

const char* cell_name(Cell c);

// Extensional description of a submonoid of I(P) as a grid of cell symbols.
// Diagonal cells are One or FreeUnit; off-diagonal cells are Free on strict
// order pairs and Zero elsewhere. `closure` marks the Zariski closure of the
// group described by the grid, where FreeUnit cells may also vanish.
class SupportMask {
 public:
  // Throws DomainError if the grid breaks the shape rules above.
  SupportMask(PosetRef poset, std::vector<Cell> grid, bool closure,
              std::string name);

  const Poset& poset() const { return *poset_; }
  const PosetRef& poset_ref() const { return poset_; }
  int size() const { return poset_->size(); }
  Cell at(int i, int j) const { return grid_[i * size() + j]; }
  bool closure() const { return closure_; }
  const std::string& name() const { return name_; }

  // Number of FreeUnit and Free cells.
  int dimension() const;

  SupportMask with_closure(bool closure) const;

 private:
  PosetRef poset_;
  std::vector<Cell> grid_;
  bool closure_;
  std::string name_;
};

// I(P)_A: the closure of S_A x| U_P, where S_A is the antichain torus with
// free diagonal coordinates exactly on A. Throws DomainError unless A is an
// antichain.
SupportMask submonoid_mask(const PosetRef& p, const IndexSet& a);

// G(P) = T x| U_P; with the closure flag set it describes I(P) itself.
SupportMask unit_group_mask(const PosetRef& p);

// {"name", "closure", "grid": [["One","Free",...], ...]}.
nlohmann::json mask_to_json(const SupportMask& mask);

enum class WeightKind { kPlus, kMinus, kZero };

// Weight of the antichain torus on the root space E_{ij} of Lie(U_P):
// +eps_i, -eps_j, or 0.
struct CellWeight {
  int i = 0;
  int j = 0;
  WeightKind kind = WeightKind::kZero;
  // The coordinate the weight lives on; -1 for zero weights.
  int coordinate = -1;

  // "+e1", "-e3", "0" with 1-based coordinates.
  std::string name() const;
};

struct WeightReport {
  std::vector<CellWeight> cells;
};

// Throws DomainError unless A is an antichain. Every weight is checked to lie
// in X(S_A) u -X(S_A).
WeightReport weight_report(const Poset& p, const IndexSet& a);

struct IntersectionLattice {
  // Antichains, lexicographic; node 0 is the empty antichain (U_P).
  std::vector<IndexSet> nodes;
  std::vector<bool> maximal;
  // (lower, upper) node indices with upper = lower plus one element.
  std::vector<std::pair<int, int>> cover_edges;
  // meet[a * size + b] is the node index of nodes[a] n nodes[b].
  std::vector<int> meet;

  int size() const { return static_cast<int>(nodes.size()); }
  int meet_of(int a, int b) const { return meet[a * size() + b]; }
};

inline constexpr std::size_t kDefaultLatticeCap = 4096;

// Throws CapExceeded past `cap` antichains (the meet table is quadratic).
IntersectionLattice intersection_lattice(const Poset& p,
                                         std::size_t cap = kDefaultLatticeCap);

std::string antichain_label(const Poset& p, const IndexSet& a);
std::string lattice_to_dot(const Poset& p, const IntersectionLattice& lattice);

}  // namespace incmon

#endif  // INCMON_ANTICHAIN_SUBMONOIDS_H_
