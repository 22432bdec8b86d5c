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

#include "vncert/run_record.hpp"

#ifndef VNCERT_VERSION
#define VNCERT_VERSION "unknown"
#endif

namespace vncert::cli {

void to_json(json &j, const RunRecord &record) {
    j = json{
        {"command", record.command},
        {"version", record.version},
        {"config", record.config},
        {"duration_s", record.duration_s},
        {"result", record.result},
    };
}

void from_json(const json &j, RunRecord &record) {
    j.at("command").get_to(record.command);
    j.at("version").get_to(record.version);
    record.config = j.at("config");
    j.at("duration_s").get_to(record.duration_s);
    record.result = j.at("result");
}

json reproducible_payload(const RunRecord &record) {
    json j = record;
    j.erase("duration_s");
    return j;
}

std::string version_string() {
    return VNCERT_VERSION;
}

}  // namespace vncert::cli
