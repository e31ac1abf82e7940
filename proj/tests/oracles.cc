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

#include "oracles.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "incmon/poset_generators.h"

namespace incmon::testing {

Poset CrownOverPoint() {
  return from_covers({"x1", "x2", "x3", "x4", "x5"},
                     {{"x1", "x2"}, {"x1", "x3"}, {"x2", "x4"},
                      {"x2", "x5"}, {"x3", "x4"}, {"x3", "x5"}});
}

std::vector<Poset> LowComplexityTriples() {
  const std::vector<std::string> l = {"x1", "x2", "x3"};
  return {
      from_covers(l, {}),
      from_covers(l, {{"x1", "x2"}}),
      from_covers(l, {{"x1", "x3"}, {"x2", "x3"}}),
      from_covers(l, {{"x1", "x2"}, {"x1", "x3"}}),
      from_covers(l, {{"x1", "x2"}, {"x2", "x3"}}),
  };
}

Poset Chain(int n) {
  const std::vector<std::string> labels = default_labels(n);
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 0; i + 1 < n; ++i) covers.emplace_back(labels[i], labels[i + 1]);
  return from_covers(labels, covers);
}

Poset Antichain(int n) { return from_covers(default_labels(n), {}); }

Poset Crown4() {
  return from_covers({"a1", "a2", "b1", "b2"}, {{"a1", "b1"},
                                                {"a1", "b2"},
                                                {"a2", "b1"},
                                                {"a2", "b2"}});
}

Poset DoubleCrown() {
  std::vector<std::pair<std::string, std::string>> covers;
  for (const char* lo : {"a1", "a2"}) {
    for (const char* hi : {"b1", "b2", "c1", "c2"}) covers.emplace_back(lo, hi);
  }
  return from_covers({"a1", "a2", "b1", "b2", "c1", "c2"}, covers);
}

BigInt BruteMultichains(const Poset& p, int m) {
  const int n = p.size();
  const int len = m - 1;
  if (len == 0) return 1;
  std::vector<int> t(len, 0);
  BigInt count = 0;
  while (true) {
    bool ok = true;
    for (int k = 0; k + 1 < len && ok; ++k) ok = p.leq(t[k], t[k + 1]);
    if (ok) ++count;
    int k = len - 1;
    while (k >= 0 && ++t[k] == n) t[k--] = 0;
    if (k < 0) break;
  }
  return count;
}

std::vector<Rational> HallMobius(const Poset& p) {
  const int n = p.size();
  std::vector<Rational> mu(n * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!p.leq(x, y)) continue;
      // Signed count of strict chains x = z0 < ... < zk = y.
      std::function<std::int64_t(int, int)> chains = [&](int at,
                                                         int sign) -> std::int64_t {
        if (at == y) return sign;
        std::int64_t total = 0;
        for (int z = 0; z < n; ++z) {
          if (p.less(at, z) && p.leq(z, y)) total += chains(z, -sign);
        }
        return total;
      };
      mu[x * n + y] = chains(x, 1);
    }
  }
  return mu;
}

std::uint64_t BruteAutomorphismCount(const Poset& p) {
  std::vector<int> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (int i = 0; i < p.size() && ok; ++i) {
      for (int j = 0; j < p.size() && ok; ++j) {
        ok = p.leq(i, j) == p.leq(perm[i], perm[j]);
      }
    }
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

std::uint64_t BruteSimpleCycles(const Poset& p) {
  const auto& edges = p.covers();
  const int e = static_cast<int>(edges.size());
  std::uint64_t count = 0;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << e); ++s) {
    std::vector<int> degree(p.size(), 0);
    std::vector<int> parent(p.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
      return parent[v] == v ? v : parent[v] = find(parent[v]);
    };
    for (int k = 0; k < e; ++k) {
      if (!(s >> k & 1)) continue;
      ++degree[edges[k].first];
      ++degree[edges[k].second];
      parent[find(edges[k].first)] = find(edges[k].second);
    }
    bool ok = true;
    int root = -1;
    for (int v = 0; v < p.size() && ok; ++v) {
      if (degree[v] == 0) continue;
      ok = degree[v] == 2;
      if (root < 0) root = find(v);
      ok = ok && find(v) == root;
    }
    count += ok;
  }
  return count;
}

std::vector<std::vector<int>> BruteAntichains(const Poset& p) {
  std::vector<std::vector<int>> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << p.size()); ++s) {
    std::vector<int> members;
    for (int i = 0; i < p.size(); ++i) {
      if (s >> i & 1) members.push_back(i);
    }
    bool ok = true;
    for (int a : members) {
      for (int b : members) ok = ok && (a == b || !p.comparable(a, b));
    }
    if (ok) out.push_back(members);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t BruteNaturalPosetCount(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::uint64_t count = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << pairs.size()); ++s) {
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (s >> k & 1) r[pairs[k].first][pairs[k].second] = true;
    }
    bool transitive = true;
    for (int a = 0; a < n && transitive; ++a) {
      for (int b = 0; b < n && transitive; ++b) {
        for (int c = 0; c < n && transitive; ++c) {
          transitive = !(r[a][b] && r[b][c]) || r[a][c];
        }
      }
    }
    count += transitive;
  }
  return count;
}

std::uint64_t BruteRookCount(const Poset& p) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < p.size(); ++i) {
    for (int j = 0; j < p.size(); ++j) {
      if (p.leq(i, j)) cells.emplace_back(i, j);
    }
  }
  std::uint64_t count = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << cells.size()); ++s) {
    std::vector<int> rows(p.size(), 0);
    std::vector<int> cols(p.size(), 0);
    bool ok = true;
    for (std::size_t k = 0; k < cells.size() && ok; ++k) {
      if (!(s >> k & 1)) continue;
      ok = ++rows[cells[k].first] == 1 && ++cols[cells[k].second] == 1;
    }
    count += ok;
  }
  return count;
}

namespace {

using IntMatrix = std::vector<int>;

IntMatrix MulModQ(const IntMatrix& a, const IntMatrix& b, int n, int q) {
  IntMatrix c(n * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      for (int j = 0; j < n; ++j) c[i * n + j] += a[i * n + k] * b[k * n + j];
    }
  }
  for (int& v : c) v %= q;
  return c;
}

// Star-shaped cells: the diagonal, then row 1.
std::vector<int> StarCells(int n) {
  std::vector<int> cells;
  for (int i = 0; i < n; ++i) cells.push_back(i * n + i);
  for (int j = 1; j < n; ++j) cells.push_back(j);
  return cells;
}

}  // namespace

FiniteOrbitCount StarFiniteOrbits(int n, int q,
                                  const std::vector<std::vector<int>>& words) {
  const std::vector<int> cells = StarCells(n);
  std::vector<IntMatrix> points;
  std::vector<IntMatrix> group;
  std::vector<int> digits(cells.size(), 0);
  while (true) {
    IntMatrix m(n * n, 0);
    bool unit = true;
    for (std::size_t k = 0; k < cells.size(); ++k) {
      m[cells[k]] = digits[k];
      if (k < static_cast<std::size_t>(n)) unit = unit && digits[k] != 0;
    }
    points.push_back(m);
    if (unit) group.push_back(m);
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == q) digits[k++] = 0;
    if (k == digits.size()) break;
  }
  std::map<IntMatrix, int> orbit_id;
  FiniteOrbitCount result;
  for (const IntMatrix& x : points) {
    if (orbit_id.count(x)) continue;
    for (const IntMatrix& g : group) {
      const IntMatrix gx = MulModQ(g, x, n, q);
      for (const IntMatrix& h : group) orbit_id[MulModQ(gx, h, n, q)] = result.orbits;
    }
    ++result.orbits;
  }
  for (const std::vector<int>& w : words) {
    IntMatrix m(n * n, 0);
    for (int j = 0; j < n; ++j) {
      if (w[j] > 0) m[(w[j] - 1) * n + j] = 1;
    }
    result.orbit_of_word.push_back(orbit_id.at(m));
  }
  return result;
}

std::string StarNormalForm(int n, const std::vector<std::int64_t>& x) {
  // x11 != 0 clears row 1 by column operations; otherwise each nonzero
  // diagonal x_jj clears x_1j by a row operation. Torus scaling sends the
  // surviving entries to 1.
  std::string word;
  const bool corner = x[0] != 0;
  word += corner ? '1' : '0';
  for (int j = 1; j < n; ++j) {
    if (x[j * n + j] != 0) {
      word += std::to_string(j + 1);
    } else if (!corner && x[j] != 0) {
      word += '1';
    } else {
      word += '0';
    }
  }
  return word;
}

namespace {

// Laurent polynomial: exponent -> coefficient.
using Laurent = std::map<int, std::int64_t>;
using LaurentMatrix = std::vector<Laurent>;

LaurentMatrix LaurentMul(const LaurentMatrix& a, const LaurentMatrix& b, int n) {
  LaurentMatrix c(n * n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      for (int j = 0; j < n; ++j) {
        for (const auto& [ea, ca] : a[i * n + k]) {
          for (const auto& [eb, cb] : b[k * n + j]) c[i * n + j][ea + eb] += ca * cb;
        }
      }
    }
  }
  return c;
}

}  // namespace

std::set<std::pair<std::string, std::string>> SampledAdherence(
    int n, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> exponent(-1, 1);
  std::uniform_int_distribution<int> coefficient(1, 3);
  std::uniform_int_distribution<int> coin(0, 2);
  const auto random_unit = [&] {
    LaurentMatrix g(n * n);
    for (int i = 0; i < n; ++i) {
      g[i * n + i][exponent(rng)] = coefficient(rng) * (coin(rng) ? 1 : -1);
    }
    for (int j = 1; j < n; ++j) {
      if (coin(rng)) g[j][exponent(rng)] = coefficient(rng) * (coin(rng) ? 1 : -1);
    }
    return g;
  };

  std::set<std::pair<std::string, std::string>> pairs;
  // Every star-shaped 0/1 word with at most one 1 per column; the normal
  // form picks the orbit.
  std::vector<int> letters(n, 0);
  std::function<void(int)> each = [&](int column) {
    if (column == n) {
      LaurentMatrix x(n * n);
      std::vector<std::int64_t> plain(n * n, 0);
      for (int j = 0; j < n; ++j) {
        if (letters[j] > 0) {
          x[(letters[j] - 1) * n + j][0] = 1;
          plain[(letters[j] - 1) * n + j] = 1;
        }
      }
      const std::string upper = StarNormalForm(n, plain);
      for (int s = 0; s < samples; ++s) {
        const LaurentMatrix y =
            LaurentMul(LaurentMul(random_unit(), x, n), random_unit(), n);
        std::vector<std::int64_t> limit(n * n, 0);
        bool bounded = true;
        for (int c = 0; c < n * n && bounded; ++c) {
          for (const auto& [e, coeff] : y[c]) {
            if (e < 0 && coeff != 0) bounded = false;
            if (e == 0) limit[c] = coeff;
          }
        }
        if (!bounded) continue;
        const std::string lower = StarNormalForm(n, limit);
        if (lower != upper) pairs.emplace(lower, upper);
      }
      return;
    }
    const std::vector<int> options =
        column == 0 ? std::vector<int>{0, 1} : std::vector<int>{0, 1, column + 1};
    for (int letter : options) {
      letters[column] = letter;
      each(column + 1);
    }
  };
  each(0);
  return pairs;
}

std::set<std::pair<std::string, std::string>> HasseOfClosure(
    const std::set<std::string>& nodes,
    const std::set<std::pair<std::string, std::string>>& relation) {
  const std::vector<std::string> v(nodes.begin(), nodes.end());
  const int n = static_cast<int>(v.size());
  std::map<std::string, int> id;
  for (int i = 0; i < n; ++i) id[v[i]] = i;
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  for (const auto& [lo, hi] : relation) below[id.at(lo)][id.at(hi)] = true;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (below[i][k] && below[k][j]) below[i][j] = true;
      }
    }
  }
  std::set<std::pair<std::string, std::string>> hasse;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || !below[i][j]) continue;
      bool cover = true;
      for (int k = 0; k < n && cover; ++k) {
        cover = k == i || k == j || !(below[i][k] && below[k][j]);
      }
      if (cover) hasse.emplace(v[i], v[j]);
    }
  }
  return hasse;
}

int DeterminantModQ(const std::vector<int>& m, int n, int q) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t det = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    std::int64_t term = inversions % 2 ? -1 : 1;
    for (int i = 0; i < n; ++i) term *= m[i * n + perm[i]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<int>(((det % q) + q) % q);
}

}  // namespace incmon::testing
