// Copyright 2026 The vncert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VNCERT_TOOLS_RUN_RECORD_HPP
#define VNCERT_TOOLS_RUN_RECORD_HPP

#include <string>

#include <json.hpp>

namespace vncert::cli {

using json = nlohmann::json;

/// Top-level document every command prints:
/// {command, version, config, duration_s, result}.
struct RunRecord {
    std::string command;
    std::string version;
    json config = json::object();
    double duration_s = 0.0;
    json result = json::object();

    bool operator==(const RunRecord &) const = default;
};

void to_json(json &j, const RunRecord &record);
void from_json(const json &j, RunRecord &record);

/// Document without the duration field; identical for identical inputs.
json reproducible_payload(const RunRecord &record);

/// Version baked in at configure time (git describe when available).
std::string version_string();

}  // namespace vncert::cli

#endif  // VNCERT_TOOLS_RUN_RECORD_HPP
