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

#ifndef INCMON_FFLAB_H_
#define INCMON_FFLAB_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "incmon/antichain_submonoids.h"
#include "incmon/finite_field.h"
#include "incmon/rational.h"
#include "json.hpp"

namespace incmon {

inline constexpr std::size_t kMaxFinitePoints = 1'000'000;

// The F_q-points of a SupportMask monoid, stored densely. Element k is the
// k-th point in mixed-radix order over the variable cells (row-major), so the
// element list is a bijection with the points and index_of is arithmetic.
class FiniteMonoid {
 public:
  using Matrix = std::vector<std::uint8_t>;

  const FiniteField& field() const { return field_; }
  int q() const { return field_.q(); }
  int n() const { return n_; }
  bool closure() const { return closure_; }
  const std::string& mask_id() const { return mask_id_; }
  std::size_t size() const { return size_; }

  // Row-major n x n entries of element k.
  Matrix element(std::size_t k) const;
  // Index of a matrix, or nullopt if it is not a point of the monoid.
  std::optional<std::size_t> index_of(std::span<const std::uint8_t> m) const;
  Matrix multiply(std::span<const std::uint8_t> a,
                  std::span<const std::uint8_t> b) const;

 private:
  friend FiniteMonoid enumerate_points(const SupportMask&, int, bool,
                                       std::size_t);
  struct Variable {
    int cell;
    bool nonzero;
  };

  explicit FiniteMonoid(FiniteField field) : field_(std::move(field)) {}

  FiniteField field_;
  int n_ = 0;
  bool closure_ = false;
  std::string mask_id_;
  std::size_t size_ = 0;
  Matrix fixed_;  // entries of the constant cells, 0 elsewhere
  std::vector<Variable> variables_;
};

// Throws DomainError for an unsupported q and CapExceeded past `cap` points.
// With `closure` set, FreeUnit cells range over all of F_q.
FiniteMonoid enumerate_points(const SupportMask& mask, int q, bool closure,
                              std::size_t cap = kMaxFinitePoints);

struct PropertyResult {
  bool holds = true;
  // Smallest element index that fails, when `holds` is false.
  std::optional<std::size_t> witness;
};

// For every a some x in the monoid has a x a = a.
PropertyResult is_regular(const FiniteMonoid& m);
// Every x satisfies x^(k+1) = x for some k >= 1.
PropertyResult is_completely_regular(const FiniteMonoid& m);
// Full multiplication table check.
bool is_closed_under_product(const FiniteMonoid& m);
std::size_t idempotent_count(const FiniteMonoid& m);

// Units of the group part of `mask`: the product over diagonal cells of
// (q-1 for FreeUnit, 1 for One) times q^(number of Free strict cells).
// Independent of the closure flag.
BigInt unit_count(const SupportMask& mask, int q);
// Counts points of full rank.
std::size_t count_units_by_enumeration(const FiniteMonoid& m);

// {mask_id, q, closure, size, units, idempotents, regular,
//  completely_regular, witness, note}; witness is the first non-regular
// element, else the first element outside every subgroup, else null.
nlohmann::json fflab_report(const SupportMask& mask, int q, bool closure,
                            std::size_t cap = kMaxFinitePoints);

}  // namespace incmon

#endif  // INCMON_FFLAB_H_
