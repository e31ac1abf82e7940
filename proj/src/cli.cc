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

#include "incmon/cli.h"

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "incmon/antichain_submonoids.h"
#include "incmon/complexity.h"
#include "incmon/errors.h"
#include "incmon/fflab.h"
#include "incmon/incidence_algebra.h"
#include "incmon/poset_io.h"
#include "incmon/star_adherence.h"
#include "incmon/verify.h"

namespace incmon {
namespace {

struct RunConfig {
  std::string command;
  std::optional<std::string> input;
  std::optional<int> n;
  std::optional<std::int64_t> m;
  std::optional<int> q;
  std::optional<std::string> format;
  std::optional<std::int64_t> cap;
  bool closure = false;
  std::optional<std::string> antichain;
};

struct CommandSpec {
  const char* default_format;
  std::vector<std::string> formats;
};

const std::map<std::string, CommandSpec>& Commands() {
  static const std::map<std::string, CommandSpec> commands = {
      {"analyze", {"json", {"json", "text"}}},
      {"mobius", {"json", {"json", "text"}}},
      {"zeta", {"json", {"json", "text"}}},
      {"classify", {"text", {"text", "json"}}},
      {"antichain-lattice", {"dot", {"dot", "json"}}},
      {"star-reps", {"text", {"text", "json"}}},
      {"star-hasse", {"dot", {"dot", "json", "text"}}},
      {"torus-lattice", {"json", {"json", "text"}}},
      {"fflab", {"json", {"json"}}},
      {"verify", {"text", {"text", "json"}}},
  };
  return commands;
}

Poset LoadPoset(const RunConfig& config) {
  if (!config.input) {
    throw DomainError(config.command + " needs --input");
  }
  return read_poset_file(*config.input);
}

int RequireN(const RunConfig& config) {
  if (!config.n) throw DomainError(config.command + " needs --n");
  return *config.n;
}

std::size_t CapOr(const RunConfig& config, std::size_t fallback) {
  return config.cap ? static_cast<std::size_t>(*config.cap) : fallback;
}

IndexSet ParseAntichain(const Poset& p, const std::string& text) {
  IndexSet out;
  std::stringstream in(text);
  std::string label;
  while (std::getline(in, label, ',')) {
    const auto first = label.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    label = label.substr(first, label.find_last_not_of(" \t") - first + 1);
    const std::optional<int> index = p.index_of(label);
    if (!index) throw DomainError("unknown element in --antichain: " + label);
    out.push_back(*index);
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw DomainError("repeated element in --antichain");
  }
  return out;
}

void EmitJson(std::ostream& out, const nlohmann::json& j) {
  out << j.dump(2) << "\n";
}

void Analyze(const RunConfig& config, const std::string& format,
             std::ostream& out) {
  const nlohmann::json report = analysis_to_json(LoadPoset(config));
  if (format == "json") {
    EmitJson(out, report);
    return;
  }
  out << "dim=" << report["dim"].get<std::int64_t>()
      << " complexity=" << report["complexity"].get<std::int64_t>()
      << " rank=" << report["rank"].get<std::int64_t>()
      << " class=" << report["class"].get<std::string>()
      << " graded=" << (report["graded"].get<bool>() ? "true" : "false")
      << " betti1=" << report["betti1"].get<int>()
      << " aut_order=" << report["aut_order"].get<std::string>() << "\n";
}

void Mobius(const RunConfig& config, const std::string& format,
            std::ostream& out) {
  const IncidenceMatrix mu = mobius_matrix(share(LoadPoset(config)));
  if (format == "json") {
    EmitJson(out, matrix_to_json(mu));
  } else {
    out << matrix_to_text(mu);
  }
}

// With --m, the zeta polynomial value Z(P, m); otherwise the zeta matrix.
void Zeta(const RunConfig& config, const std::string& format,
          std::ostream& out) {
  const Poset p = LoadPoset(config);
  if (config.m) {
    const std::string value = zeta_poly_eval(p, *config.m).str();
    if (format == "json") {
      EmitJson(out, {{"m", *config.m}, {"value", value}});
    } else {
      out << "Z(P," << *config.m << ")=" << value << "\n";
    }
    return;
  }
  const IncidenceMatrix zeta = zeta_matrix(share(p));
  if (format == "json") {
    EmitJson(out, matrix_to_json(zeta));
  } else {
    out << matrix_to_text(zeta);
  }
}

void Classify(const RunConfig& config, const std::string& format,
              std::ostream& out) {
  const Poset p = LoadPoset(config);
  const PosetClass cls = classify(p);
  const ComplexityReport report = complexity_report(p);
  if (format == "json") {
    EmitJson(out, {{"class", cls.name()},
                   {"dim", report.dim_ip},
                   {"complexity", report.complexity},
                   {"graded", cls.graded}});
  } else {
    out << "class=" << cls.name() << " dim=" << report.dim_ip
        << " c=" << report.complexity << "\n";
  }
}

void AntichainLattice(const RunConfig& config, const std::string& format,
                      std::ostream& out) {
  const Poset p = LoadPoset(config);
  const IntersectionLattice lattice =
      intersection_lattice(p, CapOr(config, kDefaultLatticeCap));
  if (format == "dot") {
    out << lattice_to_dot(p, lattice);
    return;
  }
  nlohmann::json nodes = nlohmann::json::array();
  for (int v = 0; v < lattice.size(); ++v) {
    nodes.push_back({{"antichain", antichain_label(p, lattice.nodes[v])},
                     {"maximal", static_cast<bool>(lattice.maximal[v])}});
  }
  nlohmann::json covers = nlohmann::json::array();
  for (const auto& [lo, hi] : lattice.cover_edges) {
    covers.push_back({antichain_label(p, lattice.nodes[lo]),
                      antichain_label(p, lattice.nodes[hi])});
  }
  nlohmann::json report = {{"nodes", nodes}, {"covers", covers}};
  if (config.antichain) {
    const IndexSet a = ParseAntichain(p, *config.antichain);
    nlohmann::json weights = nlohmann::json::array();
    for (const CellWeight& w : weight_report(p, a).cells) {
      weights.push_back(
          {{"cell", {p.label(w.i), p.label(w.j)}}, {"weight", w.name()}});
    }
    report["mask"] = mask_to_json(submonoid_mask(share(p), a));
    report["weights"] = weights;
  }
  EmitJson(out, report);
}

void StarReps(const RunConfig& config, const std::string& format,
              std::ostream& out) {
  const std::vector<OrbitWord> reps = enumerate_reps(RequireN(config));
  if (format == "text") {
    for (const OrbitWord& w : reps) out << w.str() << "\n";
    return;
  }
  nlohmann::json list = nlohmann::json::array();
  for (const OrbitWord& w : reps) {
    list.push_back({{"word", w.str()}, {"dim", orbit_dim(w)}});
  }
  EmitJson(out, list);
}

void StarHasse(const RunConfig& config, const std::string& format,
               std::ostream& out) {
  const OrbitPoset poset = adherence_hasse(RequireN(config));
  if (format == "dot") {
    out << orbit_poset_to_dot(poset);
  } else if (format == "json") {
    EmitJson(out, orbit_poset_to_json(poset));
  } else {
    for (const auto& [lo, hi] : poset.cover_edges) {
      out << poset.nodes[lo].str() << " < " << poset.nodes[hi].str() << "\n";
    }
  }
}

void TorusLattice(const RunConfig& config, const std::string& format,
                  std::ostream& out) {
  const TorusLatticeSummary s = torus_orbit_lattice(RequireN(config));
  if (format == "json") {
    nlohmann::json report = {{"n", s.n},
                             {"orbit_count", s.orbit_count},
                             {"cover_count", s.cover_count},
                             {"materialized", s.materialized}};
    report["boolean_iso_check"] = s.boolean_iso_check
                                      ? nlohmann::json(*s.boolean_iso_check)
                                      : nlohmann::json(nullptr);
    EmitJson(out, report);
    return;
  }
  out << "n=" << s.n << " orbits=" << s.orbit_count
      << " covers=" << s.cover_count;
  if (s.boolean_iso_check) {
    out << " boolean=" << (*s.boolean_iso_check ? "true" : "false");
  }
  out << "\n";
}

// Mask is I(P)_A with --antichain, otherwise the unit group G(P).
void Fflab(const RunConfig& config, std::ostream& out) {
  if (!config.q) throw DomainError("fflab needs --q");
  const PosetRef p = share(LoadPoset(config));
  const SupportMask mask =
      config.antichain
          ? submonoid_mask(p, ParseAntichain(*p, *config.antichain))
          : unit_group_mask(p);
  EmitJson(out, fflab_report(mask, *config.q, config.closure,
                             CapOr(config, kMaxFinitePoints)));
}

int Verify(const RunConfig& config, const std::string& format,
           std::ostream& out) {
  const VerifySummary summary = verify(RequireN(config));
  if (format == "json") {
    EmitJson(out, verify_to_json(summary));
  } else {
    out << verify_to_text(summary);
  }
  return summary.ok() ? kExitOk : kExitDomainError;
}

int Dispatch(const RunConfig& config, std::ostream& out) {
  const CommandSpec& cmd = Commands().at(config.command);
  const std::string format = config.format.value_or(cmd.default_format);
  if (std::find(cmd.formats.begin(), cmd.formats.end(), format) ==
      cmd.formats.end()) {
    throw DomainError(config.command + " does not support --format " + format);
  }
  if (config.cap && *config.cap <= 0) throw DomainError("--cap must be positive");

  const std::string& c = config.command;
  if (c == "analyze") Analyze(config, format, out);
  if (c == "mobius") Mobius(config, format, out);
  if (c == "zeta") Zeta(config, format, out);
  if (c == "classify") Classify(config, format, out);
  if (c == "antichain-lattice") AntichainLattice(config, format, out);
  if (c == "star-reps") StarReps(config, format, out);
  if (c == "star-hasse") StarHasse(config, format, out);
  if (c == "torus-lattice") TorusLattice(config, format, out);
  if (c == "fflab") Fflab(config, out);
  if (c == "verify") return Verify(config, format, out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Invariants of incidence monoids of finite posets", "incmon"};
  RunConfig config;
  std::vector<std::string> names;
  for (const auto& [name, cmd] : Commands()) names.push_back(name);

  app.add_option("command", config.command, "Command to run")
      ->required()
      ->check(CLI::IsMember(names));
  app.add_option("--input", config.input, "Poset JSON file");
  app.add_option("--n", config.n, "Size for star-reps, star-hasse, "
                                  "torus-lattice; n_max for verify");
  app.add_option("--m", config.m, "Zeta polynomial argument");
  app.add_option("--q", config.q, "Field size for fflab (2,3,4,5,7,8,9)");
  app.add_option("--format", config.format, "Output format")
      ->check(CLI::IsMember({"json", "dot", "text"}));
  app.add_option("--cap", config.cap, "Enumeration limit");
  app.add_option("--closure", config.closure,
                 "fflab: use the closure of the mask")
      ->default_val(false);
  app.add_option("--antichain", config.antichain,
                 "Comma-separated antichain labels, e.g. x2,x3");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "incmon: " << e.what() << "\n";
    return kExitDomainError;
  }

  std::ostringstream buffer;
  try {
    const int code = Dispatch(config, buffer);
    out << buffer.str();
    return code;
  } catch (const DomainError& e) {
    err << "incmon: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const CapExceeded& e) {
    err << "incmon: cap exceeded: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const IoError& e) {
    err << "incmon: " << e.what() << "\n";
    return kExitIoError;
  }
}

}  // namespace incmon
