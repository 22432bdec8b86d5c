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

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "vncert/haar.hpp"
#include "vncert/protocol.hpp"

namespace vncert {
namespace {

double binomial_sigma(double p, long long n) {
    return std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

ScenarioConfig scenario(Mode mode, Scheme scheme, int d, long long trials, std::uint64_t seed) {
    ScenarioConfig config;
    config.mode = mode;
    config.scheme = scheme;
    config.d = d;
    config.trials = trials;
    config.seed = seed;
    return config;
}

TEST(SampleOutcome, DegenerateDistribution) {
    RngStream rng(51, 0);
    const std::vector<double> probs{1.0, 0.0, 0.0};
    for (int k = 0; k < 1000; ++k) {
        EXPECT_EQ(sample_outcome(probs, rng), 0);
    }
}

TEST(SampleOutcome, UniformFrequencies) {
    RngStream rng(52, 0);
    constexpr int d = 4;
    constexpr long long n = 100000;
    const std::vector<double> probs(d, 1.0 / d);
    std::vector<long long> counts(d, 0);
    for (long long k = 0; k < n; ++k) {
        ++counts[static_cast<std::size_t>(sample_outcome(probs, rng))];
    }
    for (int i = 0; i < d; ++i) {
        EXPECT_NEAR(double(counts[i]) / n, 1.0 / d, 4.0 * binomial_sigma(1.0 / d, n));
    }
}

TEST(SampleOutcome, HadamardMeasurementOfZero) {
    CMatrix h(2, 2);
    h << 1, 1, 1, -1;
    const VonNeumannMeasurement ph(Unitary(h / std::sqrt(2.0)));
    const QState zero = QState::from_pure(PureState(CVector::Unit(2, 0)));
    const CMatrix out = vn_measure_channel(ph, zero).matrix();
    const std::vector<double> probs{out(0, 0).real(), out(1, 1).real()};
    RngStream rng(53, 0);
    constexpr long long n = 100000;
    long long zeros = 0;
    for (long long k = 0; k < n; ++k) {
        zeros += sample_outcome(probs, rng) == 0;
    }
    EXPECT_NEAR(double(zeros) / n, 0.5, 4.0 * binomial_sigma(0.5, n));
}

TEST(SampleOutcome, ClipsTinyNegativesAndRejectsBadMass) {
    RngStream rng(54, 0);
    const std::vector<double> tiny_negative{-1e-13, 1.0 + 1e-13};
    for (int k = 0; k < 100; ++k) {
        EXPECT_EQ(sample_outcome(tiny_negative, rng), 1);
    }
    const std::vector<double> short_mass{0.5, 0.4};
    EXPECT_THROW(sample_outcome(short_mass, rng), std::invalid_argument);
    const std::vector<double> negative{-0.1, 1.1};
    EXPECT_THROW(sample_outcome(negative, rng), std::invalid_argument);
}

TEST(BothUnknownTrial, NullHypothesisNeverRejects) {
    RngStream rng(55, 0);
    for (int d = 2; d <= 5; ++d) {
        for (int k = 0; k < 2000; ++k) {
            const TrialOutcome t = run_trial_both_unknown(d, Hypothesis::h0, rng);
            ASSERT_EQ(t.labels.size(), 2u);
            ASSERT_NE(t.labels[0], t.labels[1]);
            ASSERT_EQ(t.decision, Decision::accept_h0);
        }
    }
}

TEST(BothUnknownTrial, AlternativeCollisionRate) {
    RngStream rng(56, 0);
    constexpr long long n = 100000;
    long long accepted = 0;
    for (long long k = 0; k < n; ++k) {
        const TrialOutcome t = run_trial_both_unknown(2, Hypothesis::h1, rng);
        EXPECT_EQ(t.decision == Decision::accept_h0, t.labels[0] != t.labels[1]);
        accepted += t.decision == Decision::accept_h0;
    }
    EXPECT_NEAR(double(accepted) / n, 0.5, 4.0 * binomial_sigma(0.5, n));
}

TEST(OneFixedTrial, NullHypothesisAlwaysClicks) {
    RngStream rng(57, 0);
    for (int d = 2; d <= 5; ++d) {
        // Complex reference bases catch a missing conjugation on the ancilla.
        const Unitary u = sample_haar_unitary(d, rng);
        for (int k = 0; k < 2000; ++k) {
            const TrialOutcome t = run_trial_one_fixed(d, u, Hypothesis::h0, rng);
            ASSERT_EQ(t.labels.size(), 2u);
            ASSERT_EQ(t.labels[1], 1);
            ASSERT_EQ(t.decision, Decision::accept_h0);
        }
    }
}

TEST(OneFixedTrial, AlternativeClickRate) {
    RngStream rng(58, 0);
    constexpr int d = 4;
    constexpr long long n = 100000;
    const Unitary u = sample_haar_unitary(d, rng);
    long long clicks = 0;
    for (long long k = 0; k < n; ++k) {
        clicks += run_trial_one_fixed(d, u, Hypothesis::h1, rng).labels[1];
    }
    EXPECT_NEAR(double(clicks) / n, 0.25, 4.0 * binomial_sigma(0.25, n));
}

TEST(Simulate, SymmetricSuccessRates) {
    const SimResult both = simulate(scenario(Mode::both_unknown, Scheme::symmetric, 2, 200000, 3));
    ASSERT_TRUE(both.p_succ.has_value());
    EXPECT_FALSE(both.p1.has_value());
    EXPECT_NEAR(both.p_succ->value, 0.75, 4.0 * both.p_succ->std_error);

    const SimResult one = simulate(scenario(Mode::one_fixed, Scheme::symmetric, 2, 200000, 4));
    EXPECT_NEAR(one.p_succ->value, 0.75, 4.0 * one.p_succ->std_error);
    EXPECT_EQ(one.n_trials, 200000);
}

TEST(Simulate, AsymmetricStructuralZero) {
    const SimResult r = simulate(scenario(Mode::both_unknown, Scheme::asymmetric, 3, 200000, 5));
    ASSERT_TRUE(r.p1.has_value() && r.p2.has_value());
    EXPECT_EQ(r.p1->hits, 0);
    EXPECT_EQ(r.p1->value, 0.0);
    EXPECT_EQ(r.p1->n, 200000);
    EXPECT_NEAR(r.p2->value, 2.0 / 3.0, 4.0 * r.p2->std_error);
    EXPECT_EQ(r.n_trials, 400000);
}

TEST(Simulate, SymmetricEstimateMatchesErrorAverage) {
    for (const Mode mode : {Mode::both_unknown, Mode::one_fixed}) {
        const SimResult sym = simulate(scenario(mode, Scheme::symmetric, 3, 100000, 6));
        const SimResult asym = simulate(scenario(mode, Scheme::asymmetric, 3, 100000, 7));
        const double implied = 1.0 - (asym.p1->value + asym.p2->value) / 2.0;
        const double se = std::hypot(sym.p_succ->std_error, asym.p2->std_error / 2.0);
        EXPECT_NEAR(sym.p_succ->value, implied, 4.0 * se) << to_string(mode);
    }
}

TEST(Simulate, SuccessMonotoneInDimension) {
    double previous_both = 1.0;
    double previous_one = 0.0;
    for (const int d : {2, 4, 8}) {
        const SimResult both = simulate(scenario(Mode::both_unknown, Scheme::symmetric, d, 50000, 8));
        const SimResult one = simulate(scenario(Mode::one_fixed, Scheme::symmetric, d, 50000, 9));
        EXPECT_NEAR(both.p_succ->value, both.analytic.p_succ, 4.0 * both.p_succ->std_error);
        EXPECT_NEAR(one.p_succ->value, one.analytic.p_succ, 4.0 * one.p_succ->std_error);
        EXPECT_LT(both.p_succ->value, previous_both);
        EXPECT_GT(one.p_succ->value, previous_one);
        previous_both = both.p_succ->value;
        previous_one = one.p_succ->value;
    }
}

TEST(Simulate, ReproducibleAcrossWorkerCounts) {
    for (const Mode mode : {Mode::both_unknown, Mode::one_fixed}) {
        for (const Scheme scheme : {Scheme::symmetric, Scheme::asymmetric}) {
            ScenarioConfig config = scenario(mode, scheme, 3, 3 * kTrialBatchSize + 17, 99);
            const SimResult one = simulate(config, SimOptions{1});
            const SimResult many = simulate(config, SimOptions{4});
            const SimResult again = simulate(config, SimOptions{1});
            for (const SimResult *r : {&many, &again}) {
                EXPECT_EQ(r->n_trials, one.n_trials);
                if (one.p_succ) {
                    EXPECT_EQ(r->p_succ->hits, one.p_succ->hits);
                } else {
                    EXPECT_EQ(r->p1->hits, one.p1->hits);
                    EXPECT_EQ(r->p2->hits, one.p2->hits);
                }
            }
        }
    }
}

TEST(Simulate, SeedChangesSample) {
    const SimResult a = simulate(scenario(Mode::both_unknown, Scheme::symmetric, 3, 20000, 1));
    const SimResult b = simulate(scenario(Mode::both_unknown, Scheme::symmetric, 3, 20000, 2));
    EXPECT_NE(a.p_succ->hits, b.p_succ->hits);
}

TEST(Simulate, AntisymmetricPairDoesNotMatter) {
    ScenarioConfig base = scenario(Mode::both_unknown, Scheme::asymmetric, 4, 100000, 10);
    ScenarioConfig other = base;
    other.antisymmetric_pair = {1, 3};
    const SimResult a = simulate(base);
    const SimResult b = simulate(other);
    EXPECT_EQ(b.p1->hits, 0);
    const double se = std::hypot(a.p2->std_error, b.p2->std_error);
    EXPECT_NEAR(a.p2->value, b.p2->value, 4.0 * se);
}

TEST(Simulate, FixedReferenceDoesNotMatter) {
    RngStream rng(59, 0);
    ScenarioConfig config = scenario(Mode::one_fixed, Scheme::asymmetric, 3, 100000, 11);
    config.fixed_u = sample_haar_unitary(3, rng);
    const SimResult r = simulate(config);
    EXPECT_EQ(r.p1->hits, 0);
    EXPECT_NEAR(r.p2->value, 1.0 / 3.0, 4.0 * r.p2->std_error);
}

TEST(ScenarioConfig, ValidationNamesField) {
    const auto message_of = [](const ScenarioConfig &config) {
        try {
            config.validate();
        } catch (const std::invalid_argument &e) {
            return std::string(e.what());
        }
        return std::string();
    };
    ScenarioConfig config;
    config.d = 1;
    EXPECT_EQ(message_of(config).rfind("d:", 0), 0u);
    config = ScenarioConfig{};
    config.trials = 0;
    EXPECT_EQ(message_of(config).rfind("trials:", 0), 0u);
    config = ScenarioConfig{};
    config.mode = Mode::one_fixed;
    config.fixed_u = Unitary::identity(3);
    EXPECT_EQ(message_of(config).rfind("fixed_u:", 0), 0u);
    config = ScenarioConfig{};
    config.antisymmetric_pair = {1, 1};
    EXPECT_EQ(message_of(config).rfind("antisymmetric_pair:", 0), 0u);
    EXPECT_THROW(simulate(config), std::invalid_argument);
    EXPECT_TRUE(message_of(ScenarioConfig{}).empty());
}

TEST(Estimate, FromCounts) {
    const Estimate e = Estimate::from_counts(25, 100);
    EXPECT_DOUBLE_EQ(e.value, 0.25);
    EXPECT_DOUBLE_EQ(e.std_error, std::sqrt(0.25 * 0.75 / 100.0));
    const Estimate zero = Estimate::from_counts(0, 10);
    EXPECT_EQ(zero.value, 0.0);
    EXPECT_EQ(zero.std_error, 0.0);
}

}  // namespace
}  // namespace vncert
