// Copyright 2026 The polyhardy authors.
//
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

#pragma once

#include <string>
#include <vector>

#include "polyhardy/submodule.hpp"

namespace polyhardy {

// Parses one spec object, an array of them, or {"specs": [...]}.
std::vector<SubmoduleSpec> parse_specs(const std::string& text);
std::vector<SubmoduleSpec> load_specs(const std::string& path);

// Compact JSON with sorted keys, used for fingerprints.
std::string canonical_json(const SubmoduleSpec& spec);
std::string sha256_hex(const std::string& data);
std::string fingerprint(const std::vector<const SubmoduleSpec*>& specs);

}  // namespace polyhardy
