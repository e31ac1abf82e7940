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

#include "incmon/poset_generators.h"

#include "incmon/errors.h"

namespace incmon {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
  return labels;
}

namespace {

void Grow(int n, std::vector<std::uint64_t>& down,
          const std::vector<std::string>& labels,
          const std::function<void(const Poset&)>& visit) {
  const int k = static_cast<int>(down.size());
  if (k == n) {
    std::vector<std::uint64_t> up(n, 0);
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i <= j; ++i) {
        if (down[j] & Bit(i)) up[i] |= Bit(j);
      }
    }
    visit(Poset::FromUpSets(labels, std::move(up)));
    return;
  }
  for (std::uint64_t below = 0; below < Bit(k); ++below) {
    bool closed = true;
    for (int i = 0; i < k && closed; ++i) {
      if ((below & Bit(i)) && (down[i] & ~below & ~Bit(i)) != 0) closed = false;
    }
    if (!closed) continue;
    down.push_back(below | Bit(k));
    Grow(n, down, labels, visit);
    down.pop_back();
  }
}

}  // namespace

void for_each_natural_poset(int n,
                            const std::function<void(const Poset&)>& visit) {
  if (n < 0 || n > 16) throw DomainError("natural poset enumeration needs 0 <= n <= 16");
  std::vector<std::uint64_t> down;
  Grow(n, down, default_labels(n), visit);
}

Poset random_poset(int n, double density, std::mt19937_64& rng) {
  if (n < 0 || n > kMaxPosetSize) throw DomainError("random poset size out of range");
  std::bernoulli_distribution coin(density);
  std::vector<std::uint64_t> up(n, 0);
  for (int i = n - 1; i >= 0; --i) {
    up[i] = Bit(i);
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) up[i] |= up[j];
    }
  }
  return Poset::FromUpSets(default_labels(n), std::move(up));
}

}  // namespace incmon
