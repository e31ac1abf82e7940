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

#ifndef INCMON_COMPLEXITY_H_
#define INCMON_COMPLEXITY_H_

#include <cstdint>
#include <string>
#include <vector>

#include "incmon/poset.h"
#include "incmon/rational.h"
#include "json.hpp"

namespace incmon {

struct ComponentComplexity {
  int size = 0;
  int nontrivial_relations = 0;
  std::int64_t complexity = 0;
};

struct ComplexityReport {
  // dim I(P) = Z(P, 3).
  std::int64_t dim_ip = 0;
  // Torus complexity c_{TxT}(I(P)). For a connected poset this is
  // Z(P,3) - 2 Z(P,2) + 1; a disconnected poset sums its components.
  std::int64_t complexity = 0;
  // 2 Z(P,2) - #components.
  std::int64_t rank = 0;
  std::vector<ComponentComplexity> per_component;
};

ComplexityReport complexity_report(const Poset& p);

enum class PosetTag {
  kToric,
  kComplexity1Circuit,
  kComplexity1TwoChain,
  kHigher,
  // Disconnected poset with at least one non-toric component.
  kProduct,
};

struct PosetClass {
  PosetTag tag = PosetTag::kToric;
  std::int64_t complexity = 0;
  bool graded = false;
  // Per-component classes; empty for connected posets.
  std::vector<PosetClass> components;

  // "Toric", "Complexity1Circuit", "Complexity1TwoChain", "Higher(3)",
  // "Product(Toric x Higher(2))".
  std::string name() const;
};

// Structural classification of connected posets (empty posets count as
// Toric):
//   Toric                 no chain of length 2, Hasse diagram a tree;
//   Complexity1Circuit    no chain of length 2, exactly one circuit;
//   Complexity1TwoChain   a tree with exactly one saturated chain of length 2
//                         and none longer;
//   Higher(c)             everything else.
// A disconnected poset is Toric when every component is, else a Product.
PosetClass classify(const Poset& p);

// The four conditions that characterize connected toric incidence monoids,
// each evaluated on its own.
struct ToricConditions {
  bool toric_class = false;
  bool dim_is_2n_minus_1 = false;
  bool relations_n_minus_1 = false;
  bool short_chains_no_circuits = false;

  bool agree() const {
    return toric_class == dim_is_2n_minus_1 &&
           dim_is_2n_minus_1 == relations_n_minus_1 &&
           relations_n_minus_1 == short_chains_no_circuits;
  }
};

// Throws DomainError unless p is connected.
ToricConditions toric_conditions(const Poset& p);
bool classification_consistency(const Poset& p);

// Out_{s.g.}(I(P)) = H^1(H_P, k^x) x| Aut(P), described by the rank of the
// cohomology factor and the automorphism group of P.
struct OutDescriptor {
  int betti1 = 0;
  BigInt aut_order;
  std::vector<Permutation> aut_generators;
};

OutDescriptor out_descriptor(const Poset& p);

// {dim, complexity, rank, class, betti1, aut_order, per_component}.
nlohmann::json analysis_to_json(const Poset& p);

}  // namespace incmon

#endif  // INCMON_COMPLEXITY_H_
