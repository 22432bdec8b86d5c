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

#ifndef VNCERT_TOOLS_COMMANDS_HPP
#define VNCERT_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vncert/discrimination.hpp"
#include "vncert/protocol.hpp"
#include "vncert/run_record.hpp"

namespace vncert::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Raised for invalid flag values discovered after parsing (exit code 2).
class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Raised when an output file cannot be written (exit code 1).
class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Dense d^4 x d^4 matrices limit numeric diamond bounds in the two-box game.
inline constexpr int kMaxNumericDim = 8;

RunRecord cmd_analytic(Mode mode, Scheme scheme, int d);

/// Config echo for the simulate command; fixed_u is described by the seed it
/// was drawn from.
struct SimulateOptions {
    ScenarioConfig config;
    std::optional<std::uint64_t> fixed_u_seed;
    int threads = 0;
};

/// Builds the ScenarioConfig (drawing fixed_u when a seed is given).
ScenarioConfig make_scenario(Mode mode, Scheme scheme, int d, long long trials, std::uint64_t seed,
                             std::optional<std::uint64_t> fixed_u_seed,
                             std::pair<int, int> pair = {0, 1});

RunRecord cmd_simulate(const SimulateOptions &options);

/// z = (estimate - analytic) / stderr; 0 when both the difference and the
/// standard error vanish, null when only the standard error does.
json z_score(double estimate, double std_error, double analytic);

enum class SweepFormat { csv, jsonl };

struct SweepOptions {
    std::vector<Mode> modes{Mode::both_unknown, Mode::one_fixed};
    std::vector<Scheme> schemes{Scheme::symmetric, Scheme::asymmetric};
    std::vector<int> dims{2, 3, 4, 5};
    long long trials = 100000;
    std::uint64_t seed = 1;
    std::string out_path;
    SweepFormat format = SweepFormat::csv;
    int threads = 0;
};

/// Column order of sweep output.
const std::vector<std::string> &sweep_columns();

/// One row per (scheme, mode, d); values keyed by sweep_columns(), null where
/// a quantity does not apply to the scheme.
std::vector<json> sweep_rows(const SweepOptions &options);

/// RFC-4180 style field quoting.
std::string csv_field(const json &value);

/// Writes the sweep file and returns the summary record. Throws IoError.
RunRecord cmd_sweep(const SweepOptions &options);

/// Default seed: VNCERT_SEED if set, otherwise 1. Throws UsageError if the
/// variable is not an unsigned integer.
std::uint64_t default_seed();

/// Entry point; returns the process exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace vncert::cli

#endif  // VNCERT_TOOLS_COMMANDS_HPP
