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

#ifndef INCMON_STAR_ADHERENCE_H_
#define INCMON_STAR_ADHERENCE_H_

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "incmon/poset.h"
#include "json.hpp"

namespace incmon {

// The star poset P_n: x1 below each of x2, ..., xn.
Poset star_poset(int n);

inline constexpr int kMaxOrbitWordLength = 16;

// A G(P_n) x G(P_n)-orbit representative of I(P_n): a 0/1 matrix supported
// on the star shape {(1,1), (j,j), (1,j)} with at most one 1 per column and
// an empty rest of row 1 whenever (1,1) is set.
//
// Word form reads columns: letter j is the (1-based) row of the 1 in column j,
// or 0 for an empty column. So 011 is the matrix with ones at (1,2), (1,3).
// Matrix cells are addressed 0-based below.
class OrbitWord {
 public:
  // Throws DomainError unless `letters` is a valid representative.
  OrbitWord(int n, std::span<const int> letters);

  // Parses "021" (n <= 9) or dot-separated letters such as "0.2.1".
  static OrbitWord Parse(std::string_view text);

  int n() const { return n_; }
  int letter(int column) const { return letters_[column]; }
  bool at(int row, int column) const {
    return letters_[column] == row + 1;
  }
  // Partial transformations whose matrix is a rook matrix.
  bool is_rook() const;

  std::string str() const;

  friend auto operator<=>(const OrbitWord&, const OrbitWord&) = default;
  friend bool operator==(const OrbitWord&, const OrbitWord&) = default;

 private:
  OrbitWord() = default;

  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxOrbitWordLength> letters_{};
};

// R_{P_n}, sorted lexicographically by word; 2^(n-1) + 3^(n-1) entries.
// Throws DomainError unless 2 <= n <= 16.
std::vector<OrbitWord> enumerate_reps(int n);

// Dimension of the G x G orbit of w:
//   (n-1) + sum_i x_ii             if x_11 = 1,
//   sum_{i>=2} (2 x_ii + x_1i)     otherwise.
int orbit_dim(const OrbitWord& w);

// True iff y is covered by x in the adherence order. The covering pairs are:
//   (1) x_11 = y_11 = 1 and y drops one diagonal 1 of x at (r,r), r >= 2;
//   (2) x_11 = 1, y_11 = 0, the diagonals agree, and y fills row 1 at every
//       column whose diagonal is 0 (with no diagonal 1 this is the pair
//       x = E_11, y = E_12 + ... + E_1n);
//   (4) x_11 = y_11 = 0 and a diagonal 1 of x at (r,r) moves to (1,r) in y;
//   (5) x_11 = y_11 = 0 and y drops a row-1 entry (1,r) of x.
// Throws DomainError when the words have different lengths.
bool covers(const OrbitWord& x, const OrbitWord& y);

// All y covered by x, built directly from the cases above.
std::vector<OrbitWord> lower_covers(const OrbitWord& x);

struct OrbitPoset {
  std::vector<OrbitWord> nodes;
  std::vector<int> dim_of;
  // (lower, upper) node indices, upper covers lower; sorted.
  std::vector<std::pair<int, int>> cover_edges;
};

// Adherence order on R_{P_n}. Verifies that every cover raises orbit_dim by
// one and that the zero word and the identity are the unique bottom and top.
// Throws DomainError unless 2 <= n <= 12.
OrbitPoset adherence_hasse(int n);

std::string orbit_poset_to_dot(const OrbitPoset& poset);
// [{"word", "dim", "covers": [lower words]}, ...]
nlohmann::json orbit_poset_to_json(const OrbitPoset& poset);

// T x T orbits of I(P_n) correspond to zero sets Z(x) inside the 2n-1 cells
// A = {(1,1), ..., (n,n), (1,2), ..., (1,n)}; adherence is reverse inclusion.
struct TorusLatticeSummary {
  int n = 0;
  std::uint64_t orbit_count = 0;
  std::uint64_t cover_count = 0;
  bool materialized = false;
  // Set when materialized: every support pattern is a single orbit of
  // dimension |support| and covers are exactly one-cell differences.
  std::optional<bool> boolean_iso_check;
};

inline constexpr int kMaxTorusMaterialize = 8;

// Throws DomainError unless 2 <= n <= 20. Materializes for n <= 8.
TorusLatticeSummary torus_orbit_lattice(int n);

// Bit k of the result is set iff the k-th cell of A is zero in x, with cells
// ordered (1,1), ..., (n,n), (1,2), ..., (1,n). `x` is n x n, row-major.
std::uint64_t torus_zero_set(int n, std::span<const std::int64_t> x);

}  // namespace incmon

#endif  // INCMON_STAR_ADHERENCE_H_
