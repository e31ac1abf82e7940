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

#include "incmon/poset_io.h"

#include <fstream>
#include <sstream>

#include "incmon/errors.h"

namespace incmon {

Poset parse_poset_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw IoError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("elements") ||
      !doc["elements"].is_array()) {
    throw IoError("poset JSON needs an \"elements\" array");
  }
  std::vector<std::string> labels;
  for (const auto& e : doc["elements"]) {
    if (!e.is_string()) throw IoError("element labels must be strings");
    labels.push_back(e.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  if (doc.contains("covers")) {
    if (!doc["covers"].is_array()) throw IoError("\"covers\" must be an array");
    for (const auto& c : doc["covers"]) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_string() ||
          !c[1].is_string()) {
        throw IoError("each cover must be a pair of label strings");
      }
      pairs.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
  }
  return from_covers(labels, pairs);
}

Poset read_poset_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path);
  return parse_poset_json(buffer.str());
}

nlohmann::json poset_to_json(const Poset& p) {
  nlohmann::json covers = nlohmann::json::array();
  for (const auto& [a, b] : p.covers()) {
    covers.push_back({p.label(a), p.label(b)});
  }
  return {{"elements", p.labels()}, {"covers", std::move(covers)}};
}

}  // namespace incmon
