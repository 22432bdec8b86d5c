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

#include "vncert/protocol.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

#include "vncert/haar.hpp"

namespace vncert {

namespace {

constexpr double kNegativeSlack = 1e-12;
constexpr double kMassTolerance = 1e-9;

// Stream namespaces; batch index fills the low bits.
enum class Phase : std::uint64_t { symmetric = 0, h0 = 1, h1 = 2 };

std::uint64_t stream_id(Phase phase, std::uint64_t batch) {
    return (static_cast<std::uint64_t>(phase) << 56) | batch;
}

bool bernoulli(double p, RngStream &rng) {
    if (p >= 1.0 - kNegativeSlack) {
        return true;
    }
    if (p <= kNegativeSlack) {
        return false;
    }
    return rng.uniform() < p;
}

struct BatchCounts {
    long long hits = 0;
    long long n = 0;
};

template <typename TrialFn>
BatchCounts run_batches(long long trials, Phase phase, const ScenarioConfig &config, int threads,
                        TrialFn trial) {
    const long long batches = (trials + kTrialBatchSize - 1) / kTrialBatchSize;
    std::vector<BatchCounts> per_batch(static_cast<std::size_t>(batches));
    std::atomic<long long> next{0};
    auto worker = [&]() {
        for (long long b = next.fetch_add(1); b < batches; b = next.fetch_add(1)) {
            RngStream rng(config.seed, stream_id(phase, static_cast<std::uint64_t>(b)));
            const long long begin = b * kTrialBatchSize;
            const long long end = std::min(trials, begin + kTrialBatchSize);
            BatchCounts counts;
            for (long long t = begin; t < end; ++t) {
                counts.hits += trial(rng) ? 1 : 0;
                ++counts.n;
            }
            per_batch[static_cast<std::size_t>(b)] = counts;
        }
    };
    const int pool = static_cast<int>(std::min<long long>(std::max(threads, 1), batches));
    if (pool <= 1) {
        worker();
    } else {
        std::vector<std::jthread> workers;
        workers.reserve(pool);
        for (int w = 0; w < pool; ++w) {
            workers.emplace_back(worker);
        }
    }
    BatchCounts total;
    for (const BatchCounts &c : per_batch) {
        total.hits += c.hits;
        total.n += c.n;
    }
    return total;
}

}  // namespace

int sample_outcome(std::span<const double> probs, RngStream &rng) {
    if (probs.empty()) {
        throw std::invalid_argument("sample_outcome: empty distribution");
    }
    double total = 0.0;
    int last_positive = -1;
    for (std::size_t k = 0; k < probs.size(); ++k) {
        const double p = probs[k];
        if (std::isnan(p) || p < -kNegativeSlack) {
            throw std::invalid_argument("sample_outcome: negative or NaN probability");
        }
        if (p > 0.0) {
            total += p;
            last_positive = static_cast<int>(k);
        }
    }
    if (std::abs(total - 1.0) > kMassTolerance) {
        throw std::invalid_argument("sample_outcome: probabilities sum to " + std::to_string(total));
    }
    const double u = rng.uniform() * total;
    double cumulative = 0.0;
    for (std::size_t k = 0; k < probs.size(); ++k) {
        if (probs[k] > 0.0) {
            cumulative += probs[k];
            if (u < cumulative) {
                return static_cast<int>(k);
            }
        }
    }
    return last_positive;
}

TrialOutcome run_trial_both_unknown(int d, Hypothesis hypothesis, RngStream &rng,
                                    std::pair<int, int> pair) {
    if (d < 2) {
        throw std::invalid_argument("run_trial_both_unknown: dimension must be >= 2");
    }
    const auto [p, q] = pair;
    if (p < 0 || q < 0 || p >= d || q >= d || p == q) {
        throw std::invalid_argument("run_trial_both_unknown: invalid antisymmetric pair");
    }
    const Unitary u = sample_haar_unitary(d, rng);
    const Unitary w = hypothesis == Hypothesis::h0 ? u : sample_haar_unitary(d, rng);
    // conj(U) and conj(W): x(k, i) = conj(<k|u_i>).
    const CMatrix x = u.matrix().conjugate();
    const CMatrix y = w.matrix().conjugate();

    // <u_i, w_j | a> = (x_pi y_qj - x_qi y_pj) / sqrt(2). Written this way the
    // i == j amplitude is exactly zero when W == U, so H0 can never print
    // equal labels.
    const double norm = 1.0 / std::sqrt(2.0);
    std::vector<double> probs(static_cast<std::size_t>(d) * d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            const Complex amp = (x(p, i) * y(q, j) - x(q, i) * y(p, j)) * norm;
            probs[static_cast<std::size_t>(i) * d + j] = std::norm(amp);
        }
    }
    const int k = sample_outcome(probs, rng);
    const int i = k / d;
    const int j = k % d;
    return {hypothesis, {i, j}, i != j ? Decision::accept_h0 : Decision::accept_h1};
}

TrialOutcome run_trial_one_fixed(int d, const Unitary &fixed_u, Hypothesis hypothesis,
                                 RngStream &rng) {
    if (d < 2) {
        throw std::invalid_argument("run_trial_one_fixed: dimension must be >= 2");
    }
    if (fixed_u.dim() != d) {
        throw std::invalid_argument("run_trial_one_fixed: fixed unitary has the wrong dimension");
    }
    const Unitary box = hypothesis == Hypothesis::h0 ? fixed_u : sample_haar_unitary(d, rng);
    const CMatrix &w = box.matrix();
    const CMatrix &u = fixed_u.matrix();

    // Probe (1/sqrt(d)) sum_k |k>|k>. Label i leaves the ancilla in
    // (<w_i| (x) 1)|probe> whose k-th entry is conj(W(k, i)) / sqrt(d).
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    std::vector<double> probs(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        probs[i] = w.col(i).squaredNorm() * amp * amp;
    }
    const int label = sample_outcome(probs, rng);
    const CVector ancilla = w.col(label).conjugate().normalized();

    // Test the ancilla against conj(|u_label>): overlap sum_k U(k, i) ancilla_k.
    const double click_probability = std::norm(u.col(label).cwiseProduct(ancilla).sum());
    const bool click = bernoulli(click_probability, rng);
    return {hypothesis, {label, click ? 1 : 0}, click ? Decision::accept_h0 : Decision::accept_h1};
}

void ScenarioConfig::validate() const {
    if (d < 2) {
        throw std::invalid_argument("d: dimension must be >= 2");
    }
    if (trials < 1) {
        throw std::invalid_argument("trials: must be >= 1");
    }
    if (fixed_u && fixed_u->dim() != d) {
        throw std::invalid_argument("fixed_u: dimension " + std::to_string(fixed_u->dim()) +
                                    " does not match d = " + std::to_string(d));
    }
    const auto [i, j] = antisymmetric_pair;
    if (i < 0 || j < 0 || i >= d || j >= d || i == j) {
        throw std::invalid_argument("antisymmetric_pair: need distinct indices in [0, d)");
    }
}

Estimate Estimate::from_counts(long long hits, long long n) {
    Estimate e;
    e.hits = hits;
    e.n = n;
    if (n > 0) {
        e.value = static_cast<double>(hits) / static_cast<double>(n);
        e.std_error = std::sqrt(e.value * (1.0 - e.value) / static_cast<double>(n));
    }
    return e;
}

SimResult simulate(const ScenarioConfig &config, const SimOptions &options) {
    config.validate();
    int threads = options.threads;
    if (threads <= 0) {
        threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    }
    const Unitary fixed_u = config.fixed_u.value_or(Unitary::identity(config.d));

    auto decide = [&](Hypothesis h, RngStream &rng) {
        if (config.mode == Mode::both_unknown) {
            return run_trial_both_unknown(config.d, h, rng, config.antisymmetric_pair).decision;
        }
        return run_trial_one_fixed(config.d, fixed_u, h, rng).decision;
    };

    SimResult result;
    result.config = config;
    result.analytic = analytic_table(config.mode, config.d);

    if (config.scheme == Scheme::symmetric) {
        const BatchCounts c =
            run_batches(config.trials, Phase::symmetric, config, threads, [&](RngStream &rng) {
                const Hypothesis h = rng.uniform() < 0.5 ? Hypothesis::h0 : Hypothesis::h1;
                const Decision expected =
                    h == Hypothesis::h0 ? Decision::accept_h0 : Decision::accept_h1;
                return decide(h, rng) == expected;
            });
        result.p_succ = Estimate::from_counts(c.hits, c.n);
        result.n_trials = c.n;
        return result;
    }

    const BatchCounts rejections =
        run_batches(config.trials, Phase::h0, config, threads, [&](RngStream &rng) {
            return decide(Hypothesis::h0, rng) == Decision::accept_h1;
        });
    const BatchCounts acceptances =
        run_batches(config.trials, Phase::h1, config, threads, [&](RngStream &rng) {
            return decide(Hypothesis::h1, rng) == Decision::accept_h0;
        });
    result.p1 = Estimate::from_counts(rejections.hits, rejections.n);
    result.p2 = Estimate::from_counts(acceptances.hits, acceptances.n);
    result.n_trials = rejections.n + acceptances.n;
    return result;
}

}  // namespace vncert
