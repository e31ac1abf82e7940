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

// Brute-force reference implementations and fixture posets for the tests.
// Nothing here calls the library routine it is meant to check.

#ifndef INCMON_TESTS_ORACLES_H_
#define INCMON_TESTS_ORACLES_H_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "incmon/poset.h"
#include "incmon/rational.h"

namespace incmon::testing {

// Five elements, x1 < x2, x3 < x4, x5 with both middle elements below both
// tops.
Poset CrownOverPoint();
// The five three-element posets of complexity <= 1 in the order antichain,
// x1 < x2 plus x3, x1, x2 < x3, x1 < x2, x3, chain.
std::vector<Poset> LowComplexityTriples();
Poset Chain(int n);
Poset Antichain(int n);
// a1, a2 < b1, b2.
Poset Crown4();
// Two 4-crowns glued along the bottom pair: a1, a2 < b1, b2, c1, c2.
Poset DoubleCrown();

// Z(P, m) by enumerating all (m-1)-tuples.
BigInt BruteMultichains(const Poset& p, int m);
// mu(x, y) as the alternating count of strict chains from x to y.
std::vector<Rational> HallMobius(const Poset& p);
// Order of Aut(P) by trying all n! permutations.
std::uint64_t BruteAutomorphismCount(const Poset& p);
// Simple cycles of the undirected Hasse graph: edge subsets that are
// connected and 2-regular on their vertices.
std::uint64_t BruteSimpleCycles(const Poset& p);
// Antichains as sorted index lists, in lexicographic order.
std::vector<std::vector<int>> BruteAntichains(const Poset& p);
// Number of partial orders on {1..n} contained in the natural order, by
// testing transitivity of every subset of pairs.
std::uint64_t BruteNaturalPosetCount(int n);
// 0/1 matrices supported on the relation with at most one 1 per row and per
// column, by scanning all subsets of relation cells.
std::uint64_t BruteRookCount(const Poset& p);

// Number of G(P_n) x G(P_n) orbits on the F_q-points of I(P_n), q prime.
// Also reports which orbit each word-matrix lands in when `words` is given.
struct FiniteOrbitCount {
  int orbits = 0;
  // Orbit id per word; all distinct iff the words are a transversal.
  std::vector<int> orbit_of_word;
};
FiniteOrbitCount StarFiniteOrbits(int n, int q,
                                  const std::vector<std::vector<int>>& words);

// Degenerations a(t) x b(t) -> t^0 limit with a, b in G(P_n) built from
// Laurent monomials t^e, |e| <= 1. Returns (lower, upper) word pairs,
// lower != upper, where the limit of the upper word's curve lands in the
// lower word's orbit; `samples` random draws per word.
std::set<std::pair<std::string, std::string>> SampledAdherence(
    int n, int samples, std::uint64_t seed);

// Word of the G x G orbit containing an integer star-shaped matrix.
std::string StarNormalForm(int n, const std::vector<std::int64_t>& x);

// Hasse diagram of the transitive closure of a relation on strings.
std::set<std::pair<std::string, std::string>> HasseOfClosure(
    const std::set<std::string>& nodes,
    const std::set<std::pair<std::string, std::string>>& relation);

// Leibniz determinant mod q.
int DeterminantModQ(const std::vector<int>& m, int n, int q);

}  // namespace incmon::testing

#endif  // INCMON_TESTS_ORACLES_H_
