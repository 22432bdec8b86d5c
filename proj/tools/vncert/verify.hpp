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

#ifndef VNCERT_TOOLS_VERIFY_HPP
#define VNCERT_TOOLS_VERIFY_HPP

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "vncert/linalg.hpp"

namespace vncert::cli {

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

/// Injection points for exercising the suite against broken inputs.
struct VerifyHooks {
    /// Builds T = dephase(S) for dimension d.
    std::function<CMatrix(int)> diagonal_swap;
};

VerifyHooks default_hooks();

/// Runs every invariant check for d = 2..d_max. Each result is also written
/// to `log` as it completes ("PASS name: detail" / "FAIL name: detail").
std::vector<CheckResult> run_verification(int d_max, const VerifyHooks &hooks, std::ostream &log);

/// Exit code: 0 when all checks pass, 1 otherwise.
int cmd_verify(int d_max, const VerifyHooks &hooks, std::ostream &log);

}  // namespace vncert::cli

#endif  // VNCERT_TOOLS_VERIFY_HPP
