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

#include "incmon/finite_field.h"

#include <array>
#include <string>
#include <utility>

#include "incmon/errors.h"

namespace incmon {
namespace {

struct FieldSpec {
  int q;
  int p;
  int k;
  // Low coefficients of the monic modulus t^k + c_{k-1} t^{k-1} + ... + c_0.
  std::array<int, 3> modulus;
};

constexpr std::array<FieldSpec, 7> kFields = {{
    {2, 2, 1, {0, 0, 0}},
    {3, 3, 1, {0, 0, 0}},
    {4, 2, 2, {1, 1, 0}},
    {5, 5, 1, {0, 0, 0}},
    {7, 7, 1, {0, 0, 0}},
    {8, 2, 3, {1, 1, 0}},
    {9, 3, 2, {1, 0, 0}},
}};

const FieldSpec* FindField(int q) {
  for (const FieldSpec& f : kFields) {
    if (f.q == q) return &f;
  }
  return nullptr;
}

std::vector<int> Digits(int x, const FieldSpec& f) {
  std::vector<int> d(f.k);
  for (int i = 0; i < f.k; ++i) {
    d[i] = x % f.p;
    x /= f.p;
  }
  return d;
}

int FromDigits(const std::vector<int>& d, const FieldSpec& f) {
  int x = 0;
  for (int i = f.k - 1; i >= 0; --i) x = x * f.p + d[i];
  return x;
}

int PolyMul(int a, int b, const FieldSpec& f) {
  const std::vector<int> da = Digits(a, f);
  const std::vector<int> db = Digits(b, f);
  std::vector<int> prod(2 * f.k - 1, 0);
  for (int i = 0; i < f.k; ++i) {
    for (int j = 0; j < f.k; ++j) {
      prod[i + j] = (prod[i + j] + da[i] * db[j]) % f.p;
    }
  }
  // t^k = -(c_{k-1} t^{k-1} + ... + c_0).
  for (int d = 2 * f.k - 2; d >= f.k; --d) {
    const int lead = prod[d];
    if (lead == 0) continue;
    prod[d] = 0;
    for (int i = 0; i < f.k; ++i) {
      prod[d - f.k + i] =
          ((prod[d - f.k + i] - lead * f.modulus[i]) % f.p + f.p) % f.p;
    }
  }
  prod.resize(f.k);
  return FromDigits(prod, f);
}

}  // namespace

bool is_supported_field_size(int q) { return FindField(q) != nullptr; }

FiniteField::FiniteField(int q) : q_(q) {
  const FieldSpec* f = FindField(q);
  if (f == nullptr) {
    throw DomainError("unsupported field size q=" + std::to_string(q) +
                      " (expected 2, 3, 4, 5, 7, 8 or 9)");
  }
  p_ = f->p;
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  for (int a = 0; a < q; ++a) {
    const std::vector<int> da = Digits(a, *f);
    std::vector<int> dn(f->k);
    for (int i = 0; i < f->k; ++i) dn[i] = (f->p - da[i]) % f->p;
    neg_[a] = static_cast<std::uint8_t>(FromDigits(dn, *f));
    for (int b = 0; b < q; ++b) {
      const std::vector<int> db = Digits(b, *f);
      std::vector<int> ds(f->k);
      for (int i = 0; i < f->k; ++i) ds[i] = (da[i] + db[i]) % f->p;
      add_[a * q + b] = static_cast<std::uint8_t>(FromDigits(ds, *f));
      mul_[a * q + b] = static_cast<std::uint8_t>(PolyMul(a, b, *f));
    }
  }
  for (int a = 1; a < q; ++a) {
    for (int b = 1; b < q; ++b) {
      if (mul_[a * q + b] == 1) inv_[a] = static_cast<std::uint8_t>(b);
    }
  }
}

std::uint8_t FiniteField::inv(std::uint8_t a) const {
  if (a == 0) throw DomainError("zero has no inverse");
  return inv_[a];
}

int FiniteField::rank(std::vector<std::uint8_t> m, int rows, int cols) const {
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = r;
    while (pivot < rows && m[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    for (int k = 0; k < cols; ++k) std::swap(m[r * cols + k], m[pivot * cols + k]);
    const std::uint8_t scale = inv_[m[r * cols + c]];
    for (int k = 0; k < cols; ++k) m[r * cols + k] = mul(scale, m[r * cols + k]);
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i * cols + c] == 0) continue;
      const std::uint8_t factor = m[i * cols + c];
      for (int k = 0; k < cols; ++k) {
        m[i * cols + k] = sub(m[i * cols + k], mul(factor, m[r * cols + k]));
      }
    }
    ++r;
  }
  return r;
}

}  // namespace incmon
