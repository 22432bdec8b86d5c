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

#include "vncert/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "vncert/discrimination.hpp"
#include "vncert/haar.hpp"
#include "vncert/protocol.hpp"
#include "vncert/rng.hpp"

namespace vncert::cli {

namespace {

constexpr double kTableTol = 1e-12;
constexpr double kBoundTol = 1e-10;
constexpr double kLemmaTol = 1e-10;
constexpr double kOperatorTol = 1e-12;
constexpr double kMarginFloor = -1e-12;
constexpr double kEqualityTol = 1e-10;
constexpr double kOracleTol = 0.05;
constexpr long kOracleSamples = 20000;
constexpr int kRandomTriples = 1000;
constexpr long long kSimTrials = 200000;
constexpr double kSigmas = 4.0;
constexpr std::uint64_t kVerifySeed = 20260101;

std::string fmt(const char *format, double a, double b = 0.0) {
    char buffer[160];
    std::snprintf(buffer, sizeof(buffer), format, a, b);
    return buffer;
}

class Recorder {
   public:
    explicit Recorder(std::ostream &log) : log_(log) {}

    void add(std::string name, bool passed, std::string detail) {
        log_ << (passed ? "PASS " : "FAIL ") << name << ": " << detail << '\n';
        log_.flush();
        results_.push_back({std::move(name), passed, std::move(detail)});
    }

    // Exceptions from a check count as failures rather than aborting the run.
    template <class F>
    void guard(const std::string &name, F &&check) {
        try {
            check();
        } catch (const std::exception &e) {
            add(name, false, std::string("exception: ") + e.what());
        }
    }

    std::vector<CheckResult> take() { return std::move(results_); }

   private:
    std::ostream &log_;
    std::vector<CheckResult> results_;
};

std::string tagged(const char *name, int d) {
    return std::string(name) + "[d=" + std::to_string(d) + "]";
}

void check_table(Recorder &rec, int d) {
    const double dd = d;
    double worst = 0.0;
    const AnalyticRow both = analytic_table(Mode::both_unknown, d);
    const AnalyticRow one = analytic_table(Mode::one_fixed, d);
    const double expected[] = {
        0.5 + 0.5 / dd, 0.5 - 0.5 / dd, 0.0, 1.0 - 1.0 / dd,
        1.0 - 0.5 / dd, 0.5 / dd,       0.0, 1.0 / dd,
    };
    const double actual[] = {both.p_succ, both.p_err, both.p1, both.p2,
                             one.p_succ,  one.p_err,  one.p1,  one.p2};
    for (int k = 0; k < 8; ++k) {
        worst = std::max(worst, std::abs(expected[k] - actual[k]));
    }
    rec.add(tagged("table", d), worst <= kTableTol, fmt("max deviation %.3e", worst));
}

void check_both_unknown_diamond(Recorder &rec, int d, const ChoiMatrix &j) {
    const double target = 2.0 / d;
    const DiamondBounds bounds = diamond_bounds(j);
    const PureState a = antisymmetric_state(d, 0, 1);
    const double achieved = achieved_distance(j, QState::from_pure(a));
    const double dev = std::max(std::abs(bounds.upper - target), std::abs(achieved - target));
    rec.add(tagged("both-unknown diamond = 2/d", d), dev <= kBoundTol,
            fmt("upper %.15f, achieved without ancilla %.15f", bounds.upper, achieved));
}

void check_lemma(Recorder &rec, int d, const ChoiMatrix &j) {
    const LemmaCheck lemma = lemma_wj_check(j, lemma_w_operator(d));
    const bool ok = lemma.relative_residual <= kLemmaTol &&
                    lemma.w_unitarity_error <= kOperatorTol &&
                    lemma.w_hermiticity_error <= kOperatorTol;
    rec.add(tagged("(WJ)^2 = J^2", d), ok,
            fmt("relative residual %.3e, W unitarity %.3e", lemma.relative_residual,
                lemma.w_unitarity_error));
}

void check_one_fixed_diamond(Recorder &rec, int d, RngStream &rng) {
    const double target = 2.0 - 2.0 / d;
    const Unitary haar_u = sample_haar_unitary(d, rng);
    double dev = 0.0;
    for (const Unitary &u : {Unitary::identity(d), haar_u}) {
        const DiamondBounds b = diamond_bounds(choi_fixed_minus_haar(VonNeumannMeasurement(u)));
        dev = std::max({dev, std::abs(b.lower - target), std::abs(b.upper - target)});
    }
    rec.add(tagged("one-fixed diamond = 2-2/d", d), dev <= kBoundTol,
            fmt("max bound deviation %.3e (identity and Haar U)", dev));
}

void check_configurations(Recorder &rec, int d, RngStream &rng) {
    const QState input = QState::from_pure(antisymmetric_state(d, 0, 1));
    const auto [b0, b1] = both_unknown_output_states(d, input);
    const BinaryPOVM omega_b = omega_both_unknown(d);
    const ErrorPair eb = type_errors(b0, b1, omega_b);

    const Unitary u = sample_haar_unitary(d, rng);
    const auto [f0, f1] = one_fixed_output_states(u);
    const BinaryPOVM omega_f = omega_one_fixed(u);
    const ErrorPair ef = type_errors(f0, f1, omega_f);

    const bool zeros = eb.p1 <= kTableTol && ef.p1 <= kTableTol;
    const double p2_dev =
        std::max(std::abs(eb.p2 - (1.0 - 1.0 / d)), std::abs(ef.p2 - 1.0 / d));
    rec.add(tagged("structural zero p1", d), zeros && p2_dev <= kBoundTol,
            fmt("p1 = %.3e, p2 deviation %.3e", std::max(eb.p1, ef.p1), p2_dev));

    const double margin_b = error_mean_inequality(b0, b1, omega_b);
    const double margin_f = error_mean_inequality(f0, f1, omega_f);
    const double worst = std::max(std::abs(margin_b), std::abs(margin_f));
    rec.add(tagged("error-mean equality", d), worst <= kEqualityTol,
            fmt("|margin| %.3e", worst));
}

void check_oracle(Recorder &rec) {
    constexpr int d = 2;
    struct Case {
        const char *name;
        ChoiSampler sampler;
        ChoiMatrix closed_form;
    };
    const Case cases[] = {
        {"unitary-UU",
         [](RngStream &r) {
             const Unitary u = sample_haar_unitary(d, r);
             return choi_of_unitary_pair(u, u);
         },
         avg_choi_unitary_uu(d).value},
        {"measurement-UU",
         [](RngStream &r) {
             const Unitary u = sample_haar_unitary(d, r);
             return choi_of_measurement_pair(u, u);
         },
         avg_choi_meas_uu(d).value},
        {"measurement-UV",
         [](RngStream &r) {
             const Unitary u = sample_haar_unitary(d, r);
             const Unitary v = sample_haar_unitary(d, r);
             return choi_of_measurement_pair(u, v);
         },
         avg_choi_meas_uv(d).value},
    };
    std::uint64_t stream = 0;
    for (const Case &c : cases) {
        RngStream rng(kVerifySeed, 100 + stream++);
        const ChoiMatrix estimate = mc_average_choi(c.sampler, kOracleSamples, rng);
        const double dist = frobenius_norm(estimate.matrix() - c.closed_form.matrix());
        rec.add(std::string("Monte Carlo oracle ") + c.name, dist <= kOracleTol,
                fmt("Frobenius distance %.4f", dist));
    }
}

void check_random_inequality(Recorder &rec, int d) {
    RngStream rng(kVerifySeed, 200 + static_cast<std::uint64_t>(d));
    double worst = 1.0;
    for (int k = 0; k < kRandomTriples; ++k) {
        const QState rho0 = sample_density_matrix(d, rng);
        const QState rho1 = sample_density_matrix(d, rng);
        const BinaryPOVM omega(sample_effect(d, rng));
        worst = std::min(worst, error_mean_inequality(rho0, rho1, omega));
    }
    rec.add(tagged("error-mean inequality (random)", d), worst >= kMarginFloor,
            fmt("min margin %.3e over 1000 triples", worst));
}

void check_simulation(Recorder &rec, int d) {
    for (const Mode mode : {Mode::both_unknown, Mode::one_fixed}) {
        const std::string label = std::string(to_string(mode));
        ScenarioConfig config;
        config.mode = mode;
        config.d = d;
        config.trials = kSimTrials;
        config.seed = kVerifySeed + static_cast<std::uint64_t>(d);

        config.scheme = Scheme::symmetric;
        const SimResult sym = simulate(config);
        const double z_succ = (sym.p_succ->value - sym.analytic.p_succ) / sym.p_succ->std_error;
        rec.add(tagged(("simulated p_succ " + label).c_str(), d), std::abs(z_succ) <= kSigmas,
                fmt("p_hat %.5f, z %.2f", sym.p_succ->value, z_succ));

        config.scheme = Scheme::asymmetric;
        const SimResult asym = simulate(config);
        const double z2 = (asym.p2->value - asym.analytic.p2) / asym.p2->std_error;
        const bool ok = asym.p1->hits == 0 && std::abs(z2) <= kSigmas;
        rec.add(tagged(("simulated p1, p2 " + label).c_str(), d), ok,
                fmt("p1 hits %.0f, p2 z %.2f", static_cast<double>(asym.p1->hits), z2));
    }
}

}  // namespace

VerifyHooks default_hooks() {
    return VerifyHooks{[](int d) { return dephase(swap_operator(d)); }};
}

std::vector<CheckResult> run_verification(int d_max, const VerifyHooks &hooks, std::ostream &log) {
    Recorder rec(log);
    RngStream rng(kVerifySeed, 0);
    for (int d = 2; d <= d_max; ++d) {
        rec.guard(tagged("table", d), [&] { check_table(rec, d); });
        rec.guard(tagged("difference Choi matrix", d), [&] {
            const ChoiMatrix j = choi_difference_J(d, hooks.diagonal_swap(d)).value;
            check_both_unknown_diamond(rec, d, j);
            check_lemma(rec, d, j);
        });
        rec.guard(tagged("one-fixed diamond = 2-2/d", d), [&] { check_one_fixed_diamond(rec, d, rng); });
        rec.guard(tagged("optimal configurations", d), [&] { check_configurations(rec, d, rng); });
    }
    rec.guard("Monte Carlo oracle", [&] { check_oracle(rec); });
    for (const int d : {2, 3, 4}) {
        if (d <= d_max) {
            rec.guard(tagged("error-mean inequality (random)", d),
                      [&] { check_random_inequality(rec, d); });
        }
    }
    for (const int d : {2, 3, 5}) {
        if (d <= d_max) {
            rec.guard(tagged("simulation", d), [&] { check_simulation(rec, d); });
        }
    }
    return rec.take();
}

int cmd_verify(int d_max, const VerifyHooks &hooks, std::ostream &log) {
    const auto results = run_verification(d_max, hooks, log);
    const auto failed = std::count_if(results.begin(), results.end(),
                                      [](const CheckResult &r) { return !r.passed; });
    log << results.size() - static_cast<std::size_t>(failed) << '/' << results.size()
        << " checks passed\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace vncert::cli
