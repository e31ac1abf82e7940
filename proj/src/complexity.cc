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

#include "incmon/complexity.h"

#include <algorithm>
#include <bit>

#include "incmon/errors.h"

namespace incmon {
namespace {

std::int64_t ToInt(const BigInt& v) { return static_cast<std::int64_t>(v); }

std::int64_t ConnectedComplexity(const Poset& p) {
  return ToInt(zeta_poly_eval(p, 3)) - 2 * ToInt(zeta_poly_eval(p, 2)) + 1;
}

// Saturated chains x < y < z made of two covers.
std::int64_t CountTwoChains(const Poset& p) {
  std::int64_t total = 0;
  for (int y = 0; y < p.size(); ++y) {
    total += static_cast<std::int64_t>(std::popcount(p.lower_covers(y))) *
             std::popcount(p.upper_covers(y));
  }
  return total;
}

PosetClass ClassifyConnected(const Poset& p) {
  PosetClass c;
  c.complexity = p.size() == 0 ? 0 : ConnectedComplexity(p);
  c.graded = graded_report(p).is_graded;
  const int h = height(p);
  const int circuits = cycle_rank(p);
  if (h <= 1 && circuits == 0) {
    c.tag = PosetTag::kToric;
  } else if (h == 1 && circuits == 1) {
    c.tag = PosetTag::kComplexity1Circuit;
  } else if (h == 2 && circuits == 0 && CountTwoChains(p) == 1) {
    c.tag = PosetTag::kComplexity1TwoChain;
  } else {
    c.tag = PosetTag::kHigher;
  }
  return c;
}

}  // namespace

ComplexityReport complexity_report(const Poset& p) {
  ComplexityReport report;
  report.dim_ip = ToInt(zeta_poly_eval(p, 3));
  const std::vector<Component> components = connected_components(p);
  for (const Component& comp : components) {
    ComponentComplexity cc;
    cc.size = comp.poset.size();
    cc.nontrivial_relations = comp.poset.nontrivial_relation_count();
    cc.complexity = ConnectedComplexity(comp.poset);
    report.complexity += cc.complexity;
    report.per_component.push_back(cc);
  }
  report.rank = 2 * ToInt(zeta_poly_eval(p, 2)) -
                static_cast<std::int64_t>(components.size());
  return report;
}

std::string PosetClass::name() const {
  switch (tag) {
    case PosetTag::kToric:
      return "Toric";
    case PosetTag::kComplexity1Circuit:
      return "Complexity1Circuit";
    case PosetTag::kComplexity1TwoChain:
      return "Complexity1TwoChain";
    case PosetTag::kHigher:
      return "Higher(" + std::to_string(complexity) + ")";
    case PosetTag::kProduct: {
      std::string out = "Product(";
      for (std::size_t i = 0; i < components.size(); ++i) {
        if (i > 0) out += " x ";
        out += components[i].name();
      }
      return out + ")";
    }
  }
  return "?";
}

PosetClass classify(const Poset& p) {
  const std::vector<Component> components = connected_components(p);
  if (components.size() <= 1) return ClassifyConnected(p);
  PosetClass c;
  c.graded = graded_report(p).is_graded;
  bool all_toric = true;
  for (const Component& comp : components) {
    PosetClass part = ClassifyConnected(comp.poset);
    all_toric = all_toric && part.tag == PosetTag::kToric;
    c.complexity += part.complexity;
    c.components.push_back(std::move(part));
  }
  c.tag = all_toric ? PosetTag::kToric : PosetTag::kProduct;
  return c;
}

ToricConditions toric_conditions(const Poset& p) {
  if (connected_components(p).size() != 1) {
    throw DomainError("toric conditions are defined for connected posets");
  }
  const std::int64_t n = p.size();
  ToricConditions t;
  t.toric_class = classify(p).tag == PosetTag::kToric;
  t.dim_is_2n_minus_1 = zeta_poly_eval(p, 3) == 2 * n - 1;
  std::int64_t strict = 0;
  for (int i = 0; i < p.size(); ++i) {
    for (int j = 0; j < p.size(); ++j) strict += p.less(i, j);
  }
  t.relations_n_minus_1 = strict == n - 1;
  const GradedReport graded = graded_report(p);
  const bool short_chains = std::all_of(
      graded.max_chain_lengths.begin(), graded.max_chain_lengths.end(),
      [](const auto& entry) { return entry.first <= 1; });
  t.short_chains_no_circuits = short_chains && circuit_stats(p).cycle_rank == 0;
  return t;
}

bool classification_consistency(const Poset& p) {
  return toric_conditions(p).agree();
}

OutDescriptor out_descriptor(const Poset& p) {
  OutDescriptor out;
  out.betti1 = cycle_rank(p);
  AutomorphismGroup group = automorphisms(p);
  out.aut_order = std::move(group.order);
  out.aut_generators = std::move(group.generators);
  return out;
}

nlohmann::json analysis_to_json(const Poset& p) {
  const ComplexityReport report = complexity_report(p);
  const PosetClass cls = classify(p);
  const OutDescriptor out = out_descriptor(p);
  nlohmann::json components = nlohmann::json::array();
  for (const ComponentComplexity& cc : report.per_component) {
    components.push_back({{"size", cc.size},
                          {"nontrivial_relations", cc.nontrivial_relations},
                          {"complexity", cc.complexity}});
  }
  nlohmann::json generators = nlohmann::json::array();
  for (const Permutation& g : out.aut_generators) {
    nlohmann::json images = nlohmann::json::array();
    for (int v : g) images.push_back(p.label(v));
    generators.push_back(std::move(images));
  }
  return {{"dim", report.dim_ip},
          {"complexity", report.complexity},
          {"rank", report.rank},
          {"class", cls.name()},
          {"graded", cls.graded},
          {"betti1", out.betti1},
          {"aut_order", out.aut_order.str()},
          {"aut_generators", std::move(generators)},
          {"per_component", std::move(components)}};
}

}  // namespace incmon
