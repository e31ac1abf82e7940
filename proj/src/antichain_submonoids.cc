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

#include "incmon/antichain_submonoids.h"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "incmon/errors.h"

namespace incmon {

const char* cell_name(Cell c) {
  switch (c) {
    case Cell::kZero:
      return "Zero";
    case Cell::kOne:
      return "One";
    case Cell::kFreeUnit:
      return "FreeUnit";
    case Cell::kFree:
      return "Free";
  }
  return "?";
}

SupportMask::SupportMask(PosetRef poset, std::vector<Cell> grid, bool closure,
                         std::string name)
    : poset_(std::move(poset)),
      grid_(std::move(grid)),
      closure_(closure),
      name_(std::move(name)) {
  const int n = poset_->size();
  if (static_cast<int>(grid_.size()) != n * n) {
    throw DomainError("support mask needs n*n cells");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Cell c = at(i, j);
      if (i == j) {
        if (c != Cell::kOne && c != Cell::kFreeUnit) {
          throw DomainError("diagonal mask cells must be One or FreeUnit");
        }
      } else if (!poset_->leq(i, j)) {
        if (c != Cell::kZero) {
          throw DomainError("mask cell outside the order relation");
        }
      } else if (c != Cell::kFree) {
        throw DomainError("strict order cells must be Free");
      }
    }
  }
}

int SupportMask::dimension() const {
  return static_cast<int>(std::count_if(grid_.begin(), grid_.end(), [](Cell c) {
    return c == Cell::kFreeUnit || c == Cell::kFree;
  }));
}

SupportMask SupportMask::with_closure(bool closure) const {
  return SupportMask(poset_, grid_, closure, name_);
}

namespace {

std::vector<Cell> StrictCells(const Poset& p) {
  const int n = p.size();
  std::vector<Cell> grid(n * n, Cell::kZero);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        grid[i * n + j] = Cell::kOne;
      } else if (p.leq(i, j)) {
        grid[i * n + j] = Cell::kFree;
      }
    }
  }
  return grid;
}

void RequireAntichain(const Poset& p, const IndexSet& a) {
  if (!is_antichain(p, a)) {
    throw DomainError(antichain_label(p, a) + " is not an antichain");
  }
}

}  // namespace

std::string antichain_label(const Poset& p, const IndexSet& a) {
  std::string out = "{";
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (k > 0) out += ",";
    if (a[k] >= 0 && a[k] < p.size()) {
      out += p.label(a[k]);
    } else {
      out += "#" + std::to_string(a[k]);
    }
  }
  return out + "}";
}

SupportMask submonoid_mask(const PosetRef& p, const IndexSet& a) {
  RequireAntichain(*p, a);
  const int n = p->size();
  std::vector<Cell> grid = StrictCells(*p);
  for (int i : a) grid[i * n + i] = Cell::kFreeUnit;
  return SupportMask(p, std::move(grid), /*closure=*/true,
                     "I(P)_" + antichain_label(*p, a));
}

SupportMask unit_group_mask(const PosetRef& p) {
  const int n = p->size();
  std::vector<Cell> grid = StrictCells(*p);
  for (int i = 0; i < n; ++i) grid[i * n + i] = Cell::kFreeUnit;
  return SupportMask(p, std::move(grid), /*closure=*/false, "G(P)");
}

nlohmann::json mask_to_json(const SupportMask& mask) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < mask.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < mask.size(); ++j) row.push_back(cell_name(mask.at(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"name", mask.name()},
          {"closure", mask.closure()},
          {"dimension", mask.dimension()},
          {"grid", std::move(rows)}};
}

std::string CellWeight::name() const {
  switch (kind) {
    case WeightKind::kPlus:
      return "+e" + std::to_string(coordinate + 1);
    case WeightKind::kMinus:
      return "-e" + std::to_string(coordinate + 1);
    case WeightKind::kZero:
      return "0";
  }
  return "?";
}

WeightReport weight_report(const Poset& p, const IndexSet& a) {
  RequireAntichain(p, a);
  const int n = p.size();
  std::vector<bool> in_a(n, false);
  for (int i : a) in_a[i] = true;

  WeightReport report;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!p.leq(i, j)) continue;
      // t acts on E_ij by t_i / t_j; coordinates outside A are 1.
      std::vector<int> weight(n, 0);
      if (in_a[i]) weight[i] += 1;
      if (in_a[j]) weight[j] -= 1;
      const bool nonneg = std::all_of(weight.begin(), weight.end(),
                                      [](int c) { return c >= 0; });
      const bool nonpos = std::all_of(weight.begin(), weight.end(),
                                      [](int c) { return c <= 0; });
      if (!nonneg && !nonpos) {
        throw std::logic_error("weight of E_ij outside X(S_A) u -X(S_A)");
      }
      CellWeight w{i, j, WeightKind::kZero, -1};
      if (in_a[i]) {
        w.kind = WeightKind::kPlus;
        w.coordinate = i;
      } else if (in_a[j]) {
        w.kind = WeightKind::kMinus;
        w.coordinate = j;
      }
      report.cells.push_back(w);
    }
  }
  return report;
}

IntersectionLattice intersection_lattice(const Poset& p, std::size_t cap) {
  IntersectionLattice lattice;
  std::map<std::uint64_t, int> index_of_mask;
  std::vector<std::uint64_t> masks;
  for (Antichain& a : antichains(p, cap)) {
    std::uint64_t mask = 0;
    for (int i : a.elements) mask |= Bit(i);
    index_of_mask[mask] = lattice.size();
    masks.push_back(mask);
    lattice.nodes.push_back(std::move(a.elements));
    lattice.maximal.push_back(a.is_maximal);
  }
  const int size = lattice.size();
  for (int upper = 0; upper < size; ++upper) {
    for (int i : lattice.nodes[upper]) {
      lattice.cover_edges.emplace_back(index_of_mask.at(masks[upper] & ~Bit(i)),
                                       upper);
    }
  }
  std::sort(lattice.cover_edges.begin(), lattice.cover_edges.end());
  lattice.meet.resize(static_cast<std::size_t>(size) * size);
  for (int a = 0; a < size; ++a) {
    for (int b = 0; b < size; ++b) {
      lattice.meet[a * size + b] = index_of_mask.at(masks[a] & masks[b]);
    }
  }
  return lattice;
}

std::string lattice_to_dot(const Poset& p, const IntersectionLattice& lattice) {
  std::ostringstream out;
  out << "digraph antichain_lattice {\n  rankdir=BT;\n";
  std::map<std::size_t, std::vector<int>> by_size;
  for (int v = 0; v < lattice.size(); ++v) {
    by_size[lattice.nodes[v].size()].push_back(v);
    out << "  n" << v << " [label=\"" << antichain_label(p, lattice.nodes[v])
        << "\"" << (lattice.maximal[v] ? ", peripheries=2" : "") << "];\n";
  }
  for (const auto& [rank, nodes] : by_size) {
    out << "  { rank=same;";
    for (int v : nodes) out << " n" << v << ";";
    out << " }\n";
  }
  for (const auto& [lo, hi] : lattice.cover_edges) {
    out << "  n" << lo << " -> n" << hi << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace incmon
