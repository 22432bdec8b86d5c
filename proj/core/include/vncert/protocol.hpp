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

#ifndef VNCERT_PROTOCOL_HPP
#define VNCERT_PROTOCOL_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "vncert/discrimination.hpp"
#include "vncert/quantum.hpp"
#include "vncert/rng.hpp"

namespace vncert {

// Outcome-level simulation of the black-box games. Each trial samples the
// hidden unitaries, samples the labels the boxes print, and applies a
// classical decision rule equivalent to the optimal effect Omega:
//
//   both-unknown: antisymmetric probe on X (x) Y, accept H0 iff labels differ
//                 (Omega = 1 - T).
//   one-fixed:    maximally entangled probe, unknown box on the first factor,
//                 ancilla tested against conj(|u_i>) for the printed label i
//                 (block-diagonal Omega).

enum class Hypothesis { h0, h1 };
enum class Decision { accept_h0, accept_h1 };

struct TrialOutcome {
    Hypothesis hypothesis;
    /// both-unknown: (i, j) from the two boxes. one-fixed: (i, click) where
    /// click is 1 when the ancilla test fired.
    std::vector<int> labels;
    Decision decision;
};

/// Draws an index with the given probabilities. Negative entries down to
/// -1e-12 are treated as zero and the rest renormalized; a total deviating
/// from 1 by more than 1e-9 throws std::invalid_argument.
int sample_outcome(std::span<const double> probs, RngStream &rng);

/// One both-unknown trial. `pair` selects the antisymmetric probe (|ij> - |ji>)/sqrt(2).
TrialOutcome run_trial_both_unknown(int d, Hypothesis hypothesis, RngStream &rng,
                                    std::pair<int, int> pair = {0, 1});

/// One one-fixed trial: the box is P_{fixed_u} under H0, Haar P_V under H1.
TrialOutcome run_trial_one_fixed(int d, const Unitary &fixed_u, Hypothesis hypothesis,
                                 RngStream &rng);

struct ScenarioConfig {
    Mode mode = Mode::both_unknown;
    Scheme scheme = Scheme::symmetric;
    int d = 2;
    long long trials = 100000;
    std::uint64_t seed = 0;
    /// one-fixed reference measurement; identity when empty.
    std::optional<Unitary> fixed_u;
    std::pair<int, int> antisymmetric_pair{0, 1};

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;
};

struct Estimate {
    long long hits = 0;
    long long n = 0;
    double value = 0.0;
    /// sqrt(p(1 - p) / n)
    double std_error = 0.0;

    static Estimate from_counts(long long hits, long long n);
};

struct SimResult {
    ScenarioConfig config;
    long long n_trials = 0;
    /// Symmetric scheme only.
    std::optional<Estimate> p_succ;
    /// Asymmetric scheme: measured on separate H0 / H1 runs of `trials` each.
    std::optional<Estimate> p1;
    std::optional<Estimate> p2;
    AnalyticRow analytic;
};

struct SimOptions {
    /// 0 means std::thread::hardware_concurrency().
    int threads = 0;
};

/// Trials are grouped in fixed-size batches, each with its own RngStream, so
/// results depend only on the config and never on the thread count.
SimResult simulate(const ScenarioConfig &config, const SimOptions &options = {});

inline constexpr long long kTrialBatchSize = 4096;

}  // namespace vncert

#endif  // VNCERT_PROTOCOL_HPP
