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

#ifndef INCMON_POSET_GENERATORS_H_
#define INCMON_POSET_GENERATORS_H_

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "incmon/poset.h"

namespace incmon {

// "x1", ..., "xn".
std::vector<std::string> default_labels(int n);

// Visits every partial order on {x1..xn} for which the index order is a
// linear extension (naturally labeled posets), each exactly once.
// Each poset is built by placing x_n on top of a down-set of the first n-1.
void for_each_natural_poset(int n,
                            const std::function<void(const Poset&)>& visit);

// Random naturally labeled poset: each pair i < j is related with
// probability `density`, then transitively closed.
Poset random_poset(int n, double density, std::mt19937_64& rng);

}  // namespace incmon

#endif  // INCMON_POSET_GENERATORS_H_
