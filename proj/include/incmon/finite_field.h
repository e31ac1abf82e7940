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

#ifndef INCMON_FINITE_FIELD_H_
#define INCMON_FINITE_FIELD_H_

#include <cstdint>
#include <vector>

namespace incmon {

// Table-driven arithmetic in F_q for q in {2, 3, 4, 5, 7, 8, 9}.
// Elements are 0..q-1: the base-p digits of an element are its coefficients
// in the polynomial basis of F_p[t] / (f), with f = t^2+t+1 for F4,
// t^3+t+1 for F8 and t^2+1 for F9. 0 and 1 are the field's 0 and 1.
class FiniteField {
 public:
  // Throws DomainError for any other q.
  explicit FiniteField(int q);

  int q() const { return q_; }
  int characteristic() const { return p_; }

  std::uint8_t add(std::uint8_t a, std::uint8_t b) const {
    return add_[a * q_ + b];
  }
  std::uint8_t sub(std::uint8_t a, std::uint8_t b) const {
    return add_[a * q_ + neg_[b]];
  }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const {
    return mul_[a * q_ + b];
  }
  std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }
  // Throws DomainError on zero.
  std::uint8_t inv(std::uint8_t a) const;

  // Rank of a rows x cols matrix (row-major) by Gaussian elimination.
  int rank(std::vector<std::uint8_t> m, int rows, int cols) const;

 private:
  int q_;
  int p_;
  std::vector<std::uint8_t> add_;
  std::vector<std::uint8_t> mul_;
  std::vector<std::uint8_t> neg_;
  std::vector<std::uint8_t> inv_;
};

bool is_supported_field_size(int q);

}  // namespace incmon

#endif  // INCMON_FINITE_FIELD_H_
