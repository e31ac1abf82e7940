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

#include "incmon/verify.h"

#include <algorithm>
#include <sstream>
#include <thread>

#include "incmon/antichain_submonoids.h"
#include "incmon/complexity.h"
#include "incmon/errors.h"
#include "incmon/fflab.h"
#include "incmon/incidence_algebra.h"
#include "incmon/poset_generators.h"
#include "incmon/poset_io.h"

namespace incmon {
namespace {

// Posets are checked in batches so that n = 7 never holds all 96428 at once.
constexpr std::size_t kBatchSize = 4096;
// fflab enumerations stay tiny: all of I(P) over F_2 for n <= 3.
constexpr int kMaxFflabSize = 3;

bool CheckMobius(const Poset& p) {
  const PosetRef ref = share(p);
  const IncidenceMatrix zeta = zeta_matrix(ref);
  const IncidenceMatrix mu = mobius_matrix(ref);
  const IncidenceMatrix delta = delta_matrix(ref);
  return convolve(mu, zeta) == delta && convolve(zeta, mu) == delta &&
         invert_unit(zeta) == mu;
}

bool CheckZeta(const Poset& p) {
  return zeta_poly_eval(p, 2) == p.size() &&
         zeta_poly_eval(p, 3) == p.relation_count();
}

bool CheckComplexity(const Poset& p) {
  const ComplexityReport report = complexity_report(p);
  const std::vector<Component> parts = connected_components(p);
  std::int64_t sum = 0;
  for (const Component& part : parts) {
    const int n = part.poset.size();
    const std::int64_t dim = part.poset.relation_count();
    const std::int64_t c = dim - (2 * n - 1);
    if (c < 0 || dim < 2 * n - 1 + cycle_rank(part.poset)) return false;
    const BigInt formula =
        zeta_poly_eval(part.poset, 3) - 2 * zeta_poly_eval(part.poset, 2) + 1;
    if (formula != c) return false;
    sum += c;
  }
  return report.dim_ip == p.relation_count() && report.complexity == sum &&
         report.rank == 2 * p.size() - static_cast<std::int64_t>(parts.size());
}

bool CheckClassification(const Poset& p) {
  const PosetClass cls = classify(p);
  const bool connected = connected_components(p).size() <= 1;
  if (connected && p.size() > 0 && !classification_consistency(p)) return false;
  const std::int64_t c = complexity_report(p).complexity;
  if (cls.complexity != c) return false;
  switch (cls.tag) {
    case PosetTag::kToric:
      return c == 0;
    case PosetTag::kComplexity1Circuit:
    case PosetTag::kComplexity1TwoChain:
      return c == 1 && connected;
    case PosetTag::kHigher:
      return connected && c >= 1;
    case PosetTag::kProduct:
      return !connected && c >= 1;
  }
  return false;
}

bool CheckOrderRecovery(const Poset& p) {
  return recover_order(share(p)) == p.relation();
}

bool CheckAntichainLattice(const Poset& p) {
  const IntersectionLattice lattice = intersection_lattice(p);
  for (int a = 0; a < lattice.size(); ++a) {
    for (int b = 0; b < lattice.size(); ++b) {
      IndexSet meet;
      std::set_intersection(lattice.nodes[a].begin(), lattice.nodes[a].end(),
                            lattice.nodes[b].begin(), lattice.nodes[b].end(),
                            std::back_inserter(meet));
      if (lattice.nodes[lattice.meet_of(a, b)] != meet) return false;
    }
  }
  for (const auto& [lo, hi] : lattice.cover_edges) {
    if (lattice.nodes[hi].size() != lattice.nodes[lo].size() + 1) return false;
  }
  return !lattice.nodes.empty() && lattice.nodes[0].empty();
}

bool CheckOutDescriptor(const Poset& p) {
  const OutDescriptor out = out_descriptor(p);
  if (out.betti1 != cycle_rank(p) || out.aut_order < 1) return false;
  return std::all_of(
      out.aut_generators.begin(), out.aut_generators.end(),
      [&](const Permutation& g) { return is_automorphism(p, g); });
}

bool CheckRooks(const Poset& p) {
  const PosetRef ref = share(p);
  for (const RookMatrix& r : rook_representatives(ref)) {
    for (int j = 0; j < p.size(); ++j) {
      const int i = r.row_of_column(j);
      if (i >= 0 && !p.leq(i, j)) return false;
    }
  }
  return true;
}

bool CheckFflab(const Poset& p) {
  if (p.size() > kMaxFflabSize) return true;
  const PosetRef ref = share(p);
  const SupportMask group = unit_group_mask(ref);
  for (bool closure : {false, true}) {
    const FiniteMonoid m = enumerate_points(group, 2, closure);
    if (unit_count(group, 2) != count_units_by_enumeration(m) ||
        !is_closed_under_product(m)) {
      return false;
    }
  }
  return true;
}

struct Suite {
  const char* name;
  bool (*check)(const Poset&);
};

constexpr Suite kSuites[] = {
    {"mobius-inversion", CheckMobius},
    {"zeta-values", CheckZeta},
    {"complexity", CheckComplexity},
    {"classification", CheckClassification},
    {"order-recovery", CheckOrderRecovery},
    {"antichain-lattice", CheckAntichainLattice},
    {"out-descriptor", CheckOutDescriptor},
    {"rook-support", CheckRooks},
    {"fflab-units", CheckFflab},
};
constexpr std::size_t kSuiteCount = std::size(kSuites);

bool RunSuite(const Suite& suite, const Poset& p) {
  try {
    return suite.check(p);
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

bool VerifySummary::ok() const {
  return std::all_of(suites.begin(), suites.end(),
                     [](const SuiteResult& s) { return s.failed == 0; });
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const Suite& s : kSuites) out.emplace_back(s.name);
    return out;
  }();
  return names;
}

std::vector<std::string> failing_suites(const Poset& p) {
  std::vector<std::string> out;
  for (const Suite& s : kSuites) {
    if (!RunSuite(s, p)) out.emplace_back(s.name);
  }
  return out;
}

VerifySummary verify(int n_max, unsigned threads) {
  if (n_max < 0) throw DomainError("verify needs n_max >= 0");
  if (n_max > kMaxVerifySize) {
    throw CapExceeded("verify is limited to n_max <= " +
                      std::to_string(kMaxVerifySize));
  }
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  VerifySummary summary;
  summary.n_max = n_max;
  for (const Suite& s : kSuites) summary.suites.push_back({s.name, 0, 0, {}});

  std::vector<Poset> batch;
  // Per batch slot, the bitmask of failing suites.
  std::vector<std::uint32_t> failures;
  const auto flush = [&] {
    failures.assign(batch.size(), 0);
    const unsigned workers =
        std::min<unsigned>(threads, static_cast<unsigned>(batch.size()));
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          for (std::size_t k = w; k < batch.size(); k += workers) {
            for (std::size_t s = 0; s < kSuiteCount; ++s) {
              if (!RunSuite(kSuites[s], batch[k])) failures[k] |= 1u << s;
            }
          }
        });
      }
    }
    for (std::size_t k = 0; k < batch.size(); ++k) {
      for (std::size_t s = 0; s < kSuiteCount; ++s) {
        SuiteResult& result = summary.suites[s];
        if (failures[k] & (1u << s)) {
          ++result.failed;
          if (!result.first_counterexample) {
            result.first_counterexample = poset_to_json(batch[k]).dump();
          }
        } else {
          ++result.passed;
        }
      }
    }
    summary.posets_checked += batch.size();
    batch.clear();
  };

  for (int n = 1; n <= n_max; ++n) {
    for_each_natural_poset(n, [&](const Poset& p) {
      batch.push_back(p);
      if (batch.size() == kBatchSize) flush();
    });
  }
  flush();
  return summary;
}

std::string verify_to_text(const VerifySummary& summary) {
  std::ostringstream out;
  out << "n_max=" << summary.n_max << " posets=" << summary.posets_checked
      << " status=" << (summary.ok() ? "pass" : "fail") << "\n";
  for (const SuiteResult& s : summary.suites) {
    out << s.name << " passed=" << s.passed << " failed=" << s.failed << "\n";
    if (s.first_counterexample) {
      out << "  counterexample " << *s.first_counterexample << "\n";
    }
  }
  return out.str();
}

nlohmann::json verify_to_json(const VerifySummary& summary) {
  nlohmann::json suites = nlohmann::json::array();
  for (const SuiteResult& s : summary.suites) {
    nlohmann::json entry = {
        {"name", s.name}, {"passed", s.passed}, {"failed", s.failed}};
    entry["first_counterexample"] =
        s.first_counterexample
            ? nlohmann::json::parse(*s.first_counterexample)
            : nlohmann::json(nullptr);
    suites.push_back(std::move(entry));
  }
  return {{"n_max", summary.n_max},
          {"posets_checked", summary.posets_checked},
          {"ok", summary.ok()},
          {"suites", suites}};
}

}  // namespace incmon
