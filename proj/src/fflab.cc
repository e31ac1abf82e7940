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

#include "incmon/fflab.h"

#include <unordered_set>
#include <utility>

#include "incmon/errors.h"

namespace incmon {

FiniteMonoid::Matrix FiniteMonoid::element(std::size_t k) const {
  Matrix m = fixed_;
  for (auto it = variables_.rbegin(); it != variables_.rend(); ++it) {
    const std::size_t radix = it->nonzero ? q() - 1 : q();
    const auto digit = static_cast<std::uint8_t>(k % radix);
    k /= radix;
    m[it->cell] = it->nonzero ? digit + 1 : digit;
  }
  return m;
}

std::optional<std::size_t> FiniteMonoid::index_of(
    std::span<const std::uint8_t> m) const {
  if (m.size() != fixed_.size()) return std::nullopt;
  Matrix residue(m.begin(), m.end());
  std::size_t k = 0;
  for (const Variable& v : variables_) {
    const std::uint8_t x = residue[v.cell];
    if (v.nonzero && x == 0) return std::nullopt;
    k = k * (v.nonzero ? q() - 1 : q()) + (v.nonzero ? x - 1 : x);
    residue[v.cell] = 0;
  }
  // Variable cells were cleared above and are 0 in fixed_.
  if (residue != fixed_) return std::nullopt;
  return k;
}

FiniteMonoid::Matrix FiniteMonoid::multiply(
    std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) const {
  Matrix c(n_ * n_, 0);
  for (int i = 0; i < n_; ++i) {
    for (int k = 0; k < n_; ++k) {
      const std::uint8_t aik = a[i * n_ + k];
      if (aik == 0) continue;
      for (int j = 0; j < n_; ++j) {
        c[i * n_ + j] =
            field_.add(c[i * n_ + j], field_.mul(aik, b[k * n_ + j]));
      }
    }
  }
  return c;
}

FiniteMonoid enumerate_points(const SupportMask& mask, int q, bool closure,
                              std::size_t cap) {
  FiniteMonoid m{FiniteField(q)};
  const int n = mask.size();
  m.n_ = n;
  m.closure_ = closure;
  m.mask_id_ = mask.name();
  m.fixed_.assign(n * n, 0);
  std::size_t size = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int cell = i * n + j;
      switch (mask.at(i, j)) {
        case Cell::kZero:
          continue;
        case Cell::kOne:
          m.fixed_[cell] = 1;
          continue;
        case Cell::kFreeUnit:
          m.variables_.push_back({cell, !closure});
          break;
        case Cell::kFree:
          m.variables_.push_back({cell, false});
          break;
      }
      const std::size_t radix = m.variables_.back().nonzero ? q - 1 : q;
      if (size > cap / radix) {
        throw CapExceeded("mask " + mask.name() + " has more than " +
                          std::to_string(cap) + " points over F_" +
                          std::to_string(q));
      }
      size *= radix;
    }
  }
  m.size_ = size;
  return m;
}

PropertyResult is_regular(const FiniteMonoid& m) {
  std::vector<FiniteMonoid::Matrix> elements(m.size());
  for (std::size_t k = 0; k < m.size(); ++k) elements[k] = m.element(k);
  for (std::size_t a = 0; a < m.size(); ++a) {
    bool found = false;
    for (std::size_t x = 0; x < m.size() && !found; ++x) {
      found = m.multiply(m.multiply(elements[a], elements[x]), elements[a]) ==
              elements[a];
    }
    if (!found) return {false, a};
  }
  return {};
}

PropertyResult is_completely_regular(const FiniteMonoid& m) {
  for (std::size_t k = 0; k < m.size(); ++k) {
    const FiniteMonoid::Matrix x = m.element(k);
    // Powers of x are eventually periodic; x lies in a subgroup iff x itself
    // is on the cycle.
    std::unordered_set<std::string> seen;
    FiniteMonoid::Matrix power = x;
    bool on_cycle = false;
    while (seen.insert(std::string(power.begin(), power.end())).second) {
      power = m.multiply(power, x);
      if (power == x) {
        on_cycle = true;
        break;
      }
    }
    if (!on_cycle) return {false, k};
  }
  return {};
}

bool is_closed_under_product(const FiniteMonoid& m) {
  std::vector<FiniteMonoid::Matrix> elements(m.size());
  for (std::size_t k = 0; k < m.size(); ++k) elements[k] = m.element(k);
  for (const auto& a : elements) {
    for (const auto& b : elements) {
      if (!m.index_of(m.multiply(a, b))) return false;
    }
  }
  return true;
}

std::size_t idempotent_count(const FiniteMonoid& m) {
  std::size_t count = 0;
  for (std::size_t k = 0; k < m.size(); ++k) {
    const FiniteMonoid::Matrix x = m.element(k);
    count += m.multiply(x, x) == x;
  }
  return count;
}

BigInt unit_count(const SupportMask& mask, int q) {
  if (!is_supported_field_size(q)) {
    throw DomainError("unsupported field size q=" + std::to_string(q));
  }
  BigInt count = 1;
  for (int i = 0; i < mask.size(); ++i) {
    for (int j = 0; j < mask.size(); ++j) {
      const Cell c = mask.at(i, j);
      if (i == j && c == Cell::kFreeUnit) count *= q - 1;
      if (i != j && c == Cell::kFree) count *= q;
    }
  }
  return count;
}

std::size_t count_units_by_enumeration(const FiniteMonoid& m) {
  std::size_t count = 0;
  for (std::size_t k = 0; k < m.size(); ++k) {
    count += m.field().rank(m.element(k), m.n(), m.n()) == m.n();
  }
  return count;
}

namespace {

nlohmann::json MatrixJson(const FiniteMonoid& m, std::size_t k) {
  const FiniteMonoid::Matrix x = m.element(k);
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.n(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.n(); ++j) row.push_back(x[i * m.n() + j]);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

nlohmann::json fflab_report(const SupportMask& mask, int q, bool closure,
                            std::size_t cap) {
  const FiniteMonoid m = enumerate_points(mask, q, closure, cap);
  const PropertyResult regular = is_regular(m);
  const PropertyResult complete = is_completely_regular(m);
  nlohmann::json witness = nullptr;
  if (regular.witness) {
    witness = MatrixJson(m, *regular.witness);
  } else if (complete.witness) {
    witness = MatrixJson(m, *complete.witness);
  }
  return {{"mask_id", m.mask_id()},
          {"q", q},
          {"closure", closure},
          {"size", m.size()},
          {"units", count_units_by_enumeration(m)},
          {"idempotents", idempotent_count(m)},
          {"regular", regular.holds},
          {"completely_regular", complete.holds},
          {"witness", witness},
          {"note", "finite-point shadow"}};
}

}  // namespace incmon
