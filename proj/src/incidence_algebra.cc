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

#include "incmon/incidence_algebra.h"

#include <algorithm>
#include <functional>
#include <sstream>

#include "incmon/errors.h"

namespace incmon {

IncidenceMatrix::IncidenceMatrix(PosetRef poset, std::vector<Rational> entries)
    : poset_(std::move(poset)), entries_(std::move(entries)) {
  const int n = poset_->size();
  if (static_cast<int>(entries_.size()) != n * n) {
    throw DomainError("incidence matrix needs n*n entries");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!poset_->leq(i, j) && !entries_[i * n + j].is_zero()) {
        throw DomainError("nonzero entry at (" + poset_->label(i) + ", " +
                          poset_->label(j) + ") outside the order relation");
      }
    }
  }
}

IncidenceMatrix zero_matrix(const PosetRef& p) {
  const int n = p->size();
  return IncidenceMatrix(p, std::vector<Rational>(n * n));
}

IncidenceMatrix delta_matrix(const PosetRef& p) {
  const int n = p->size();
  std::vector<Rational> e(n * n);
  for (int i = 0; i < n; ++i) e[i * n + i] = 1;
  return IncidenceMatrix(p, std::move(e));
}

IncidenceMatrix idempotent_matrix(const PosetRef& p, int i) {
  const int n = p->size();
  if (i < 0 || i >= n) throw DomainError("idempotent index out of range");
  std::vector<Rational> e(n * n);
  e[i * n + i] = 1;
  return IncidenceMatrix(p, std::move(e));
}

IncidenceMatrix zeta_matrix(const PosetRef& p) {
  const int n = p->size();
  std::vector<Rational> e(n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (p->leq(i, j)) e[i * n + j] = 1;
    }
  }
  return IncidenceMatrix(p, std::move(e));
}

IncidenceMatrix mobius_matrix(const PosetRef& p) {
  const int n = p->size();
  std::vector<BigInt> mu(n * n);
  for (int s = 0; s < n; ++s) {
    mu[s * n + s] = 1;
    // Strictly above s in increasing index order, so every t < u is done.
    for (int u = s + 1; u < n; ++u) {
      if (!p->leq(s, u)) continue;
      BigInt sum = 0;
      for (int t = s; t < u; ++t) {
        if (p->leq(s, t) && p->leq(t, u)) sum += mu[s * n + t];
      }
      mu[s * n + u] = -sum;
    }
  }
  std::vector<Rational> e(mu.begin(), mu.end());
  return IncidenceMatrix(p, std::move(e));
}

IncidenceMatrix scale(const IncidenceMatrix& f, const Rational& c) {
  const int n = f.size();
  std::vector<Rational> e(n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) e[i * n + j] = c * f.at(i, j);
  }
  return IncidenceMatrix(f.poset_ref(), std::move(e));
}

namespace {

// acc += a * b, skipping the gcd normalization when all three are integers.
void AddProduct(Rational& acc, const Rational& a, const Rational& b) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(a) == 1 && denominator(b) == 1 && denominator(acc) == 1) {
    acc = Rational(BigInt(numerator(acc) + numerator(a) * numerator(b)));
  } else {
    acc += a * b;
  }
}

}  // namespace

IncidenceMatrix convolve(const IncidenceMatrix& f, const IncidenceMatrix& g) {
  if (f.poset_ref() != g.poset_ref() && !(f.poset() == g.poset())) {
    throw DomainError("convolution of elements over different posets");
  }
  const Poset& p = f.poset();
  const int n = p.size();
  std::vector<Rational> e(n * n);
  for (int i = 0; i < n; ++i) {
    for (int z = i; z < n; ++z) {
      const Rational& left = f.at(i, z);
      if (left.is_zero()) continue;
      for (int j = z; j < n; ++j) {
        const Rational& right = g.at(z, j);
        if (!right.is_zero()) AddProduct(e[i * n + j], left, right);
      }
    }
  }
  return IncidenceMatrix(f.poset_ref(), std::move(e));
}

IncidenceMatrix invert_unit(const IncidenceMatrix& f) {
  const Poset& p = f.poset();
  const int n = p.size();
  for (int i = 0; i < n; ++i) {
    if (f.at(i, i).is_zero()) {
      throw DomainError("not a unit: zero diagonal entry at " + p.label(i));
    }
  }
  std::vector<Rational> g(n * n);
  for (int i = n - 1; i >= 0; --i) {
    const Rational inv_diag = 1 / f.at(i, i);
    g[i * n + i] = inv_diag;
    for (int j = i + 1; j < n; ++j) {
      if (!p.leq(i, j)) continue;
      Rational sum = 0;
      for (int k = i + 1; k <= j; ++k) {
        if (!f.at(i, k).is_zero() && !g[k * n + j].is_zero()) {
          AddProduct(sum, f.at(i, k), g[k * n + j]);
        }
      }
      g[i * n + j] = -inv_diag * sum;
    }
  }
  return IncidenceMatrix(f.poset_ref(), std::move(g));
}

std::vector<std::vector<bool>> recover_order(const PosetRef& p) {
  const int n = p->size();
  const IncidenceMatrix zeta = zeta_matrix(p);
  std::vector<IncidenceMatrix> idempotents;
  idempotents.reserve(n);
  for (int i = 0; i < n; ++i) idempotents.push_back(idempotent_matrix(p, i));

  std::vector<std::vector<bool>> relation(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    const IncidenceMatrix row = convolve(idempotents[i], zeta);
    for (int j = 0; j < n; ++j) {
      const IncidenceMatrix cell = convolve(row, idempotents[j]);
      bool nonzero = false;
      for (int a = 0; a < n && !nonzero; ++a) {
        for (int b = 0; b < n && !nonzero; ++b) nonzero = !cell.at(a, b).is_zero();
      }
      relation[i][j] = nonzero;
    }
  }
  return relation;
}

RookMatrix::RookMatrix(PosetRef poset, std::vector<int> row_of_column)
    : poset_(std::move(poset)), row_of_column_(std::move(row_of_column)) {
  const int n = poset_->size();
  if (static_cast<int>(row_of_column_.size()) != n) {
    throw DomainError("rook matrix needs one entry per column");
  }
  std::vector<bool> row_used(n, false);
  for (int j = 0; j < n; ++j) {
    const int r = row_of_column_[j];
    if (r < 0) continue;
    if (r >= n || row_used[r]) throw DomainError("not a rook matrix");
    if (!poset_->leq(r, j)) {
      throw DomainError("rook entry outside the order relation");
    }
    row_used[r] = true;
  }
}

std::string RookMatrix::word() const {
  std::string out;
  for (int j = 0; j < size(); ++j) {
    if (size() > 9 && j > 0) out += '.';
    out += std::to_string(row_of_column_[j] + 1);
  }
  return out;
}

std::vector<RookMatrix> rook_representatives(const PosetRef& p,
                                             std::size_t cap) {
  const int n = p->size();
  std::vector<RookMatrix> out;
  std::vector<int> rows(n, -1);
  std::uint64_t used = 0;
  std::function<void(int)> place = [&](int column) {
    if (column == n) {
      if (out.size() >= cap) {
        throw CapExceeded("more than " + std::to_string(cap) + " rooks");
      }
      out.emplace_back(p, rows);
      return;
    }
    rows[column] = -1;
    place(column + 1);
    for (int r = 0; r <= column; ++r) {
      if ((used & Bit(r)) || !p->leq(r, column)) continue;
      rows[column] = r;
      used |= Bit(r);
      place(column + 1);
      used &= ~Bit(r);
    }
    rows[column] = -1;
  };
  place(0);
  return out;
}

nlohmann::json matrix_to_json(const IncidenceMatrix& f) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < f.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < f.size(); ++j) row.push_back(FormatRational(f.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string matrix_to_text(const IncidenceMatrix& f) {
  const int n = f.size();
  std::vector<std::string> cells(n * n);
  std::size_t width = 1;
  for (int k = 0; k < n * n; ++k) {
    cells[k] = FormatRational(f.at(k / n, k % n));
    width = std::max(width, cells[k].size());
  }
  std::ostringstream out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const std::string& c = cells[i * n + j];
      if (j > 0) out << ' ';
      out << std::string(width - c.size(), ' ') << c;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace incmon
