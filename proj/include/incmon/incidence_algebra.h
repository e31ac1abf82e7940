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

#ifndef INCMON_INCIDENCE_ALGEBRA_H_
#define INCMON_INCIDENCE_ALGEBRA_H_

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "incmon/poset.h"
#include "incmon/rational.h"
#include "json.hpp"

namespace incmon {

using PosetRef = std::shared_ptr<const Poset>;

inline PosetRef share(Poset p) {
  return std::make_shared<const Poset>(std::move(p));
}

// An element f of the incidence algebra, stored as the n x n matrix
// (f(x_i, x_j)) under the poset's linear extension. Entries outside the
// order relation are zero, so the matrix is upper triangular.
class IncidenceMatrix {
 public:
  // Row-major entries. Throws DomainError if a nonzero entry sits on a pair
  // with x_i not <= x_j.
  IncidenceMatrix(PosetRef poset, std::vector<Rational> entries);

  const Poset& poset() const { return *poset_; }
  const PosetRef& poset_ref() const { return poset_; }
  int size() const { return poset_->size(); }
  const Rational& at(int i, int j) const { return entries_[i * size() + j]; }

  friend bool operator==(const IncidenceMatrix& a, const IncidenceMatrix& b) {
    return a.poset() == b.poset() && a.entries_ == b.entries_;
  }

 private:
  PosetRef poset_;
  std::vector<Rational> entries_;
};

IncidenceMatrix zero_matrix(const PosetRef& p);
// The identity of the algebra.
IncidenceMatrix delta_matrix(const PosetRef& p);
// The primitive idempotent e_{x_i}.
IncidenceMatrix idempotent_matrix(const PosetRef& p, int i);
IncidenceMatrix zeta_matrix(const PosetRef& p);
// mu(s,s) = 1, mu(s,u) = -sum_{s <= t < u} mu(s,t).
IncidenceMatrix mobius_matrix(const PosetRef& p);

IncidenceMatrix scale(const IncidenceMatrix& f, const Rational& c);

// (f*g)(x,y) = sum_{x <= z <= y} f(x,z) g(z,y). Throws DomainError when the
// operands live over different posets.
IncidenceMatrix convolve(const IncidenceMatrix& f, const IncidenceMatrix& g);

// Two-sided inverse by back-substitution along the linear extension. Throws
// DomainError if some diagonal entry is zero (f is not a unit).
IncidenceMatrix invert_unit(const IncidenceMatrix& f);

// Relation (i, j) -> [e_i * I(P) * e_j != 0], computed through products of
// the primitive idempotents with zeta, which spans every allowed cell.
std::vector<std::vector<bool>> recover_order(const PosetRef& p);

// A 0/1 matrix with at most one 1 per row and column, supported on the order
// relation.
class RookMatrix {
 public:
  // row_of_column[j] is the row holding the 1 of column j, or -1.
  RookMatrix(PosetRef poset, std::vector<int> row_of_column);

  const Poset& poset() const { return *poset_; }
  int size() const { return poset_->size(); }
  int row_of_column(int j) const { return row_of_column_[j]; }
  bool at(int i, int j) const { return row_of_column_[j] == i; }
  // Column word: entry j is 1 + row of the 1 in column j, or 0.
  std::string word() const;

  friend bool operator==(const RookMatrix& a, const RookMatrix& b) {
    return a.poset() == b.poset() && a.row_of_column_ == b.row_of_column_;
  }

 private:
  PosetRef poset_;
  std::vector<int> row_of_column_;
};

inline constexpr std::size_t kDefaultRookCap = 1'000'000;

// Rook matrices of [0, id_n] lying in I(P), modeled as the rooks whose
// support lies in the order relation. Lexicographic by column word.
std::vector<RookMatrix> rook_representatives(const PosetRef& p,
                                             std::size_t cap = kDefaultRookCap);

// [["1","-1/2"],["0","1"]], row-major.
nlohmann::json matrix_to_json(const IncidenceMatrix& f);
std::string matrix_to_text(const IncidenceMatrix& f);

}  // namespace incmon

#endif  // INCMON_INCIDENCE_ALGEBRA_H_
