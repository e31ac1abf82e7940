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

#ifndef INCMON_POSET_IO_H_
#define INCMON_POSET_IO_H_

#include <string>
#include <string_view>

#include "incmon/poset.h"
#include "json.hpp"

namespace incmon {

// Parses {"elements": [...], "covers": [[lo, hi], ...]}. Element order in the
// document is the tie-break for the linear extension. Malformed documents
// throw IoError; well-formed documents describing an invalid poset throw
// DomainError.
Poset parse_poset_json(std::string_view text);

Poset read_poset_file(const std::string& path);

// Inverse of parse_poset_json, with elements in linear-extension order.
nlohmann::json poset_to_json(const Poset& p);

}  // namespace incmon

#endif  // INCMON_POSET_IO_H_
