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

#include "incmon/star_adherence.h"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "incmon/errors.h"
#include "incmon/poset_generators.h"

namespace incmon {

Poset star_poset(int n) {
  if (n < 2 || n > kMaxPosetSize) {
    throw DomainError("star poset needs 2 <= n <= " +
                      std::to_string(kMaxPosetSize));
  }
  std::vector<std::uint64_t> up(n);
  up[0] = n == 64 ? ~std::uint64_t{0} : Bit(n) - 1;
  for (int i = 1; i < n; ++i) up[i] = Bit(i);
  return Poset::FromUpSets(default_labels(n), std::move(up));
}

OrbitWord::OrbitWord(int n, std::span<const int> letters) {
  if (n < 2 || n > kMaxOrbitWordLength) {
    throw DomainError("orbit words need 2 <= n <= " +
                      std::to_string(kMaxOrbitWordLength));
  }
  if (static_cast<int>(letters.size()) != n) {
    throw DomainError("orbit word length does not match n");
  }
  n_ = static_cast<std::uint8_t>(n);
  for (int j = 0; j < n; ++j) {
    const int a = letters[j];
    // Column 1 only has the cell (1,1); column j > 1 has (1,j) and (j,j).
    const bool ok = j == 0 ? (a == 0 || a == 1) : (a == 0 || a == 1 || a == j + 1);
    if (!ok) {
      throw DomainError("letter " + std::to_string(a) + " in column " +
                        std::to_string(j + 1) + " is off the star shape");
    }
    letters_[j] = static_cast<std::uint8_t>(a);
  }
  if (letters_[0] == 1) {
    for (int j = 1; j < n; ++j) {
      if (letters_[j] == 1) {
        throw DomainError("row 1 must be empty past (1,1) when (1,1) is set");
      }
    }
  }
}

OrbitWord OrbitWord::Parse(std::string_view text) {
  std::vector<int> letters;
  if (text.find('.') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t dot = std::min(text.find('.', start), text.size());
      const std::string_view part = text.substr(start, dot - start);
      if (part.empty() ||
          !std::all_of(part.begin(), part.end(),
                       [](char c) { return c >= '0' && c <= '9'; })) {
        throw DomainError("malformed orbit word: " + std::string(text));
      }
      letters.push_back(std::stoi(std::string(part)));
      start = dot + 1;
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw DomainError("malformed orbit word: " + std::string(text));
      }
      letters.push_back(c - '0');
    }
  }
  return OrbitWord(static_cast<int>(letters.size()), letters);
}

bool OrbitWord::is_rook() const {
  int row_one = 0;
  for (int j = 0; j < n_; ++j) row_one += letters_[j] == 1;
  return row_one <= 1;
}

std::string OrbitWord::str() const {
  std::string out;
  for (int j = 0; j < n_; ++j) {
    if (n_ > 9 && j > 0) out += '.';
    out += std::to_string(letters_[j]);
  }
  return out;
}

std::vector<OrbitWord> enumerate_reps(int n) {
  if (n < 2 || n > kMaxOrbitWordLength) {
    throw DomainError("enumerate_reps needs 2 <= n <= " +
                      std::to_string(kMaxOrbitWordLength));
  }
  std::vector<OrbitWord> out;
  out.reserve((std::size_t{1} << (n - 1)) + [n] {
    std::size_t p = 1;
    for (int i = 1; i < n; ++i) p *= 3;
    return p;
  }());
  std::vector<int> letters(n, 0);
  // Column j > 1 is empty, holds (1,j), or holds (j,j); the (1,j) choice is
  // unavailable once (1,1) is set.
  auto fill = [&](auto&& self, int column) -> void {
    if (column == n) {
      out.emplace_back(n, letters);
      return;
    }
    letters[column] = 0;
    self(self, column + 1);
    if (letters[0] == 0) {
      letters[column] = 1;
      self(self, column + 1);
    }
    letters[column] = column + 1;
    self(self, column + 1);
    letters[column] = 0;
  };
  for (int first : {0, 1}) {
    letters.assign(n, 0);
    letters[0] = first;
    fill(fill, 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int orbit_dim(const OrbitWord& w) {
  const int n = w.n();
  int dim = 0;
  if (w.at(0, 0)) {
    dim = n - 1;
    for (int i = 0; i < n; ++i) dim += w.at(i, i);
    return dim;
  }
  for (int i = 1; i < n; ++i) dim += 2 * w.at(i, i) + w.at(0, i);
  return dim;
}

bool covers(const OrbitWord& x, const OrbitWord& y) {
  if (x.n() != y.n()) throw DomainError("orbit words of different lengths");
  if (x == y) return false;
  const int n = x.n();
  const bool x11 = x.at(0, 0);
  const bool y11 = y.at(0, 0);
  if (x11 && y11) {
    int dropped = 0;
    for (int r = 1; r < n; ++r) {
      if (x.at(r, r) == y.at(r, r)) continue;
      if (!x.at(r, r)) return false;
      ++dropped;
    }
    return dropped == 1;
  }
  if (x11 && !y11) {
    for (int r = 1; r < n; ++r) {
      if (x.at(r, r) != y.at(r, r)) return false;
      if (y.at(0, r) == x.at(r, r)) return false;
    }
    return true;
  }
  if (!x11 && !y11) {
    int column = -1;
    for (int r = 1; r < n; ++r) {
      if (x.letter(r) == y.letter(r)) continue;
      if (column >= 0) return false;
      column = r;
    }
    if (column < 0) return false;
    if (x.at(column, column) && y.at(0, column)) return true;
    return x.at(0, column) && y.letter(column) == 0;
  }
  return false;
}

std::vector<OrbitWord> lower_covers(const OrbitWord& x) {
  const int n = x.n();
  std::vector<int> letters(n);
  for (int j = 0; j < n; ++j) letters[j] = x.letter(j);
  std::vector<OrbitWord> out;
  if (x.at(0, 0)) {
    for (int r = 1; r < n; ++r) {
      if (!x.at(r, r)) continue;
      std::vector<int> y = letters;
      y[r] = 0;
      out.emplace_back(n, y);
    }
    std::vector<int> y = letters;
    y[0] = 0;
    for (int r = 1; r < n; ++r) {
      if (!x.at(r, r)) y[r] = 1;
    }
    out.emplace_back(n, y);
  } else {
    for (int r = 1; r < n; ++r) {
      std::vector<int> y = letters;
      if (x.at(r, r)) {
        y[r] = 1;
      } else if (x.at(0, r)) {
        y[r] = 0;
      } else {
        continue;
      }
      out.emplace_back(n, y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

OrbitPoset adherence_hasse(int n) {
  if (n < 2 || n > 12) throw DomainError("adherence_hasse needs 2 <= n <= 12");
  OrbitPoset poset;
  poset.nodes = enumerate_reps(n);
  const auto index_of = [&](const OrbitWord& w) {
    const auto it = std::lower_bound(poset.nodes.begin(), poset.nodes.end(), w);
    if (it == poset.nodes.end() || !(*it == w)) {
      throw std::logic_error("cover target missing from R_{P_n}: " + w.str());
    }
    return static_cast<int>(it - poset.nodes.begin());
  };
  const int size = static_cast<int>(poset.nodes.size());
  poset.dim_of.resize(size);
  for (int v = 0; v < size; ++v) poset.dim_of[v] = orbit_dim(poset.nodes[v]);

  std::vector<bool> has_lower(size, false);
  std::vector<bool> has_upper(size, false);
  for (int upper = 0; upper < size; ++upper) {
    for (const OrbitWord& y : lower_covers(poset.nodes[upper])) {
      if (!covers(poset.nodes[upper], y)) {
        throw std::logic_error("generated pair is not a cover: " + y.str() +
                               " < " + poset.nodes[upper].str());
      }
      const int lower = index_of(y);
      if (poset.dim_of[upper] != poset.dim_of[lower] + 1) {
        throw std::logic_error("cover does not raise the orbit dimension by 1");
      }
      poset.cover_edges.emplace_back(lower, upper);
      has_lower[upper] = true;
      has_upper[lower] = true;
    }
  }
  std::sort(poset.cover_edges.begin(), poset.cover_edges.end());

  // Bottom is the zero word (first in lexicographic order); top is the
  // identity 12...n (last).
  for (int v = 0; v < size; ++v) {
    if (!has_lower[v] && !(v == 0 && poset.dim_of[v] == 0)) {
      throw std::logic_error("adherence order has a second minimal element");
    }
    if (!has_upper[v] && !(v == size - 1 && poset.dim_of[v] == 2 * n - 1)) {
      throw std::logic_error("adherence order has a second maximal element");
    }
  }
  return poset;
}

std::string orbit_poset_to_dot(const OrbitPoset& poset) {
  std::ostringstream out;
  out << "digraph adherence {\n  rankdir=BT;\n";
  std::map<int, std::vector<int>> by_dim;
  for (std::size_t v = 0; v < poset.nodes.size(); ++v) {
    by_dim[poset.dim_of[v]].push_back(static_cast<int>(v));
    out << "  w" << v << " [label=\"" << poset.nodes[v].str() << "\"];\n";
  }
  for (const auto& [dim, nodes] : by_dim) {
    out << "  { rank=same;";
    for (int v : nodes) out << " w" << v << ";";
    out << " }  // dim " << dim << "\n";
  }
  for (const auto& [lo, hi] : poset.cover_edges) {
    out << "  w" << lo << " -> w" << hi << ";\n";
  }
  out << "}\n";
  return out.str();
}

nlohmann::json orbit_poset_to_json(const OrbitPoset& poset) {
  std::vector<std::vector<std::string>> below(poset.nodes.size());
  for (const auto& [lo, hi] : poset.cover_edges) {
    below[hi].push_back(poset.nodes[lo].str());
  }
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t v = 0; v < poset.nodes.size(); ++v) {
    out.push_back({{"word", poset.nodes[v].str()},
                   {"dim", poset.dim_of[v]},
                   {"covers", below[v]}});
  }
  return out;
}

namespace {

// Rank over Q of small integer vectors, by fraction-free elimination.
int IntegerRank(std::vector<std::vector<std::int64_t>> rows) {
  int rank = 0;
  const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][c] == 0) continue;
      const std::int64_t a = rows[rank][c];
      const std::int64_t b = rows[r][c];
      std::int64_t g = 0;
      for (int k = 0; k < cols; ++k) {
        rows[r][k] = a * rows[r][k] - b * rows[rank][k];
        g = std::gcd(g, rows[r][k]);
      }
      if (g > 1) {
        for (int k = 0; k < cols; ++k) rows[r][k] /= g;
      }
    }
    ++rank;
  }
  return rank;
}

// Cells of A as (row, column), in the order used by torus_zero_set.
std::vector<std::pair<int, int>> TorusCells(int n) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n; ++i) cells.emplace_back(i, i);
  for (int j = 1; j < n; ++j) cells.emplace_back(0, j);
  return cells;
}

}  // namespace

std::uint64_t torus_zero_set(int n, std::span<const std::int64_t> x) {
  if (n < 1 || n > 32 || static_cast<int>(x.size()) != n * n) {
    throw DomainError("torus_zero_set needs an n x n matrix with n <= 32");
  }
  std::uint64_t zeros = 0;
  const auto cells = TorusCells(n);
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (x[cells[k].first * n + cells[k].second] == 0) zeros |= Bit(static_cast<int>(k));
  }
  return zeros;
}

TorusLatticeSummary torus_orbit_lattice(int n) {
  if (n < 2 || n > 20) throw DomainError("torus_orbit_lattice needs 2 <= n <= 20");
  const int cells = 2 * n - 1;
  TorusLatticeSummary summary;
  summary.n = n;
  summary.orbit_count = std::uint64_t{1} << cells;
  summary.cover_count = static_cast<std::uint64_t>(cells) << (cells - 1);
  if (n > kMaxTorusMaterialize) return summary;

  // (a, b) in T x T scales cell (i, j) by a_i b_j: character e_i + f_j.
  const auto cell_list = TorusCells(n);
  std::vector<std::vector<std::int64_t>> characters;
  for (const auto& [i, j] : cell_list) {
    std::vector<std::int64_t> chi(2 * n, 0);
    chi[i] = 1;
    chi[n + j] = 1;
    characters.push_back(std::move(chi));
  }
  // The orbit of a point with support S is a torsor of dimension rank(S).
  const std::uint64_t subsets = std::uint64_t{1} << cells;
  std::vector<int> orbit_dim_of(subsets);
  bool boolean = true;
  for (std::uint64_t s = 0; s < subsets; ++s) {
    std::vector<std::vector<std::int64_t>> rows;
    for (int k = 0; k < cells; ++k) {
      if (s & Bit(k)) rows.push_back(characters[k]);
    }
    orbit_dim_of[s] = IntegerRank(std::move(rows));
    boolean = boolean && orbit_dim_of[s] == std::popcount(s);
  }
  // Closure of the orbit with support S is the set of points with support
  // inside S; covers are inclusions that drop the orbit dimension by one.
  std::uint64_t cover_count = 0;
  for (std::uint64_t s = 1; s < subsets; ++s) {
    for (std::uint64_t t = (s - 1) & s;; t = (t - 1) & s) {
      if (orbit_dim_of[t] + 1 == orbit_dim_of[s]) {
        ++cover_count;
        boolean = boolean && std::popcount(s & ~t) == 1;
      }
      if (t == 0) break;
    }
  }
  summary.materialized = true;
  summary.boolean_iso_check = boolean && cover_count == summary.cover_count;
  summary.orbit_count = subsets;
  summary.cover_count = cover_count;
  return summary;
}

}  // namespace incmon
