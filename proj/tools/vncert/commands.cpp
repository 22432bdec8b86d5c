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

#include "vncert/commands.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <string_view>

#include <CLI11.hpp>

#include "vncert/haar.hpp"
#include "vncert/rng.hpp"
#include "vncert/verify.hpp"

namespace vncert::cli {

namespace {

constexpr std::string_view kDimensionMessage = "dimension must be ≥ 2";
constexpr int kMaxOneFixedNumericDim = 32;

class Stopwatch {
   public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

   private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void require_dimension(int d) {
    if (d < 2) {
        throw UsageError(std::string(kDimensionMessage));
    }
}

json analytic_json(const AnalyticRow &row) {
    return json{
        {"mode", to_string(row.mode)},
        {"d", row.d},
        {"p_succ", row.p_succ},
        {"p_err", row.p_err},
        {"p1", row.p1},
        {"p2", row.p2},
        {"ancilla_needed", row.ancilla_needed},
        {"diamond", row.diamond},
    };
}

json estimate_json(const Estimate &estimate, double analytic) {
    return json{
        {"p_hat", estimate.value},
        {"stderr", estimate.std_error},
        {"analytic", analytic},
        {"z", z_score(estimate.value, estimate.std_error, analytic)},
        {"hits", estimate.hits},
        {"n", estimate.n},
    };
}

std::optional<DiamondBounds> numeric_diamond(Mode mode, int d) {
    if (mode == Mode::both_unknown) {
        if (d > kMaxNumericDim) {
            return std::nullopt;
        }
        const ChoiMatrix j = choi_difference_J(d).value;
        DiamondBounds bounds = diamond_bounds(j);
        // Any input state certifies a lower bound; the antisymmetric one is tight.
        const double witness = achieved_distance(j, QState::from_pure(antisymmetric_state(d, 0, 1)));
        bounds.lower = std::max(bounds.lower, witness);
        return bounds;
    }
    if (d > kMaxOneFixedNumericDim) {
        return std::nullopt;
    }
    return diamond_bounds(
        choi_fixed_minus_haar(VonNeumannMeasurement(Unitary::identity(d))));
}

json optional_number(const std::optional<double> &value) {
    return value ? json(*value) : json(nullptr);
}

Mode require_mode(const std::string &text) {
    const auto mode = parse_mode(text);
    if (!mode) {
        throw UsageError("unknown mode '" + text + "' (expected both-unknown or one-fixed)");
    }
    return *mode;
}

Scheme require_scheme(const std::string &text) {
    const auto scheme = parse_scheme(text);
    if (!scheme) {
        throw UsageError("unknown scheme '" + text + "' (expected symmetric or asymmetric)");
    }
    return *scheme;
}

std::string format_double(double value) {
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, result.ptr);
}

void print_record(std::ostream &out, const RunRecord &record) {
    out << json(record).dump(2) << '\n';
}

}  // namespace

RunRecord cmd_analytic(Mode mode, Scheme scheme, int d) {
    require_dimension(d);
    const Stopwatch clock;
    const AnalyticRow row = analytic_table(mode, d);
    const auto bounds = numeric_diamond(mode, d);

    RunRecord record;
    record.command = "analytic";
    record.version = version_string();
    record.config = json{{"mode", to_string(mode)}, {"scheme", to_string(scheme)}, {"d", d}};
    record.result = analytic_json(row);
    record.result["diamond_lower"] =
        optional_number(bounds ? std::optional<double>(bounds->lower) : std::nullopt);
    record.result["diamond_upper"] =
        optional_number(bounds ? std::optional<double>(bounds->upper) : std::nullopt);
    record.duration_s = clock.seconds();
    return record;
}

ScenarioConfig make_scenario(Mode mode, Scheme scheme, int d, long long trials, std::uint64_t seed,
                             std::optional<std::uint64_t> fixed_u_seed, std::pair<int, int> pair) {
    require_dimension(d);
    ScenarioConfig config;
    config.mode = mode;
    config.scheme = scheme;
    config.d = d;
    config.trials = trials;
    config.seed = seed;
    config.antisymmetric_pair = pair;
    if (fixed_u_seed) {
        RngStream rng(*fixed_u_seed, 0);
        config.fixed_u = sample_haar_unitary(d, rng);
    }
    try {
        config.validate();
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    return config;
}

json z_score(double estimate, double std_error, double analytic) {
    const double diff = estimate - analytic;
    if (std_error > 0.0) {
        return diff / std_error;
    }
    if (diff == 0.0) {
        return 0.0;
    }
    return nullptr;
}

RunRecord cmd_simulate(const SimulateOptions &options) {
    const Stopwatch clock;
    const ScenarioConfig &config = options.config;
    const SimResult sim = simulate(config, SimOptions{options.threads});

    RunRecord record;
    record.command = "simulate";
    record.version = version_string();
    record.config = json{
        {"mode", to_string(config.mode)},
        {"scheme", to_string(config.scheme)},
        {"d", config.d},
        {"trials", config.trials},
        {"seed", config.seed},
        {"fixed_u_seed", options.fixed_u_seed ? json(*options.fixed_u_seed) : json(nullptr)},
        {"pair", json::array({config.antisymmetric_pair.first, config.antisymmetric_pair.second})},
    };
    json result{{"n_trials", sim.n_trials}, {"analytic", analytic_json(sim.analytic)}};
    if (sim.p_succ) {
        result["p_succ"] = estimate_json(*sim.p_succ, sim.analytic.p_succ);
    }
    if (sim.p1) {
        result["p1"] = estimate_json(*sim.p1, sim.analytic.p1);
    }
    if (sim.p2) {
        result["p2"] = estimate_json(*sim.p2, sim.analytic.p2);
    }
    record.result = std::move(result);
    record.duration_s = clock.seconds();
    return record;
}

const std::vector<std::string> &sweep_columns() {
    static const std::vector<std::string> columns{
        "mode",          "scheme",         "d",          "trials",         "seed",
        "p_succ_analytic", "p_err_analytic", "p1_analytic", "p2_analytic",   "diamond_analytic",
        "p_succ_hat",    "p_succ_stderr",  "p_succ_z",   "p1_hat",         "p1_stderr",
        "p1_z",          "p2_hat",         "p2_stderr",  "p2_z",
    };
    return columns;
}

std::vector<json> sweep_rows(const SweepOptions &options) {
    std::vector<json> rows;
    std::uint64_t row_index = 0;
    for (const Scheme scheme : options.schemes) {
        for (const Mode mode : options.modes) {
            for (const int d : options.dims) {
                const std::uint64_t seed = options.seed + row_index++;
                const ScenarioConfig config =
                    make_scenario(mode, scheme, d, options.trials, seed, std::nullopt);
                const SimResult sim = simulate(config, SimOptions{options.threads});
                json row = json::object();
                for (const auto &column : sweep_columns()) {
                    row[column] = nullptr;
                }
                row["mode"] = to_string(mode);
                row["scheme"] = to_string(scheme);
                row["d"] = d;
                row["trials"] = options.trials;
                row["seed"] = seed;
                row["p_succ_analytic"] = sim.analytic.p_succ;
                row["p_err_analytic"] = sim.analytic.p_err;
                row["p1_analytic"] = sim.analytic.p1;
                row["p2_analytic"] = sim.analytic.p2;
                row["diamond_analytic"] = sim.analytic.diamond;
                const auto fill = [&row](const std::string &prefix, const Estimate &e,
                                         double analytic) {
                    row[prefix + "_hat"] = e.value;
                    row[prefix + "_stderr"] = e.std_error;
                    row[prefix + "_z"] = z_score(e.value, e.std_error, analytic);
                };
                if (sim.p_succ) {
                    fill("p_succ", *sim.p_succ, sim.analytic.p_succ);
                }
                if (sim.p1) {
                    fill("p1", *sim.p1, sim.analytic.p1);
                }
                if (sim.p2) {
                    fill("p2", *sim.p2, sim.analytic.p2);
                }
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

std::string csv_field(const json &value) {
    if (value.is_null()) {
        return "";
    }
    if (value.is_number_float()) {
        return format_double(value.get<double>());
    }
    if (value.is_number_unsigned()) {
        return std::to_string(value.get<std::uint64_t>());
    }
    if (value.is_number_integer()) {
        return std::to_string(value.get<std::int64_t>());
    }
    if (value.is_boolean()) {
        return value.get<bool>() ? "true" : "false";
    }
    const std::string text = value.is_string() ? value.get<std::string>() : value.dump();
    if (text.find_first_of(",\"\r\n") == std::string::npos) {
        return text;
    }
    std::string quoted = "\"";
    for (const char c : text) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

RunRecord cmd_sweep(const SweepOptions &options) {
    if (options.dims.empty() || options.modes.empty() || options.schemes.empty()) {
        throw UsageError("sweep needs at least one mode, scheme and dimension");
    }
    for (const int d : options.dims) {
        require_dimension(d);
    }
    if (options.trials < 1) {
        throw UsageError("trials: must be positive");
    }
    const Stopwatch clock;

    std::ofstream file(options.out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw IoError("cannot open '" + options.out_path + "' for writing");
    }
    const std::vector<json> rows = sweep_rows(options);
    if (options.format == SweepFormat::csv) {
        const auto &columns = sweep_columns();
        for (std::size_t c = 0; c < columns.size(); ++c) {
            file << (c ? "," : "") << csv_field(columns[c]);
        }
        file << "\r\n";
        for (const auto &row : rows) {
            for (std::size_t c = 0; c < columns.size(); ++c) {
                file << (c ? "," : "") << csv_field(row.at(columns[c]));
            }
            file << "\r\n";
        }
    } else {
        for (const auto &row : rows) {
            nlohmann::ordered_json ordered;
            for (const auto &column : sweep_columns()) {
                ordered[column] = row.at(column);
            }
            file << ordered.dump() << '\n';
        }
    }
    file.close();
    if (!file) {
        throw IoError("failed writing '" + options.out_path + "'");
    }

    json modes = json::array();
    for (const Mode m : options.modes) {
        modes.push_back(to_string(m));
    }
    json schemes = json::array();
    for (const Scheme s : options.schemes) {
        schemes.push_back(to_string(s));
    }
    RunRecord record;
    record.command = "sweep";
    record.version = version_string();
    record.config = json{
        {"modes", modes},
        {"schemes", schemes},
        {"dims", options.dims},
        {"trials", options.trials},
        {"seed", options.seed},
        {"out", options.out_path},
        {"format", options.format == SweepFormat::csv ? "csv" : "jsonl"},
    };
    record.result = json{{"rows", rows.size()}, {"columns", sweep_columns()}};
    record.duration_s = clock.seconds();
    return record;
}

std::uint64_t default_seed() {
    const char *env = std::getenv("VNCERT_SEED");
    if (env == nullptr || *env == '\0') {
        return 1;
    }
    const std::string_view text(env);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw UsageError("VNCERT_SEED must be an unsigned integer, got '" + std::string(text) + "'");
    }
    return value;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Discrimination and certification of von Neumann measurements"};
    app.name("vncert");
    app.require_subcommand(1);
    app.set_version_flag("--version", version_string());

    std::string mode_text = "both-unknown";
    std::string scheme_text = "symmetric";
    int dim = 2;

    auto *analytic = app.add_subcommand("analytic", "Closed-form success and error probabilities");
    analytic->add_option("--mode", mode_text, "both-unknown | one-fixed")->capture_default_str();
    analytic->add_option("--scheme", scheme_text, "symmetric | asymmetric")->capture_default_str();
    analytic->add_option("--dim", dim, "Dimension d >= 2")->capture_default_str();

    long long trials = 100000;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> fixed_u_seed;
    std::vector<int> pair{0, 1};
    int threads = 0;

    auto *sim = app.add_subcommand("simulate", "Monte Carlo black-box protocol");
    sim->add_option("--mode", mode_text, "both-unknown | one-fixed")->capture_default_str();
    sim->add_option("--scheme", scheme_text, "symmetric | asymmetric")->capture_default_str();
    sim->add_option("--dim", dim, "Dimension d >= 2")->capture_default_str();
    sim->add_option("--trials", trials, "Trials (per hypothesis when asymmetric)")
        ->capture_default_str();
    sim->add_option("--seed", seed, "RNG seed (default: $VNCERT_SEED or 1)");
    sim->add_option("--fixed-u-seed", fixed_u_seed,
                    "Draw the one-fixed reference measurement from this seed (default: identity)");
    sim->add_option("--pair", pair, "Antisymmetric input pair i,j")
        ->delimiter(',')
        ->expected(2)
        ->capture_default_str();
    sim->add_option("--threads", threads, "Worker threads (0 = all cores)")
        ->check(CLI::NonNegativeNumber);

    int dmax = 6;
    auto *verify = app.add_subcommand("verify", "Run the invariant suite and report PASS/FAIL");
    verify->add_option("--dmax", dmax, "Largest dimension checked (2.." +
                                           std::to_string(kMaxNumericDim) + ")")
        ->capture_default_str();

    std::vector<std::string> sweep_modes{"both-unknown", "one-fixed"};
    std::vector<std::string> sweep_schemes{"symmetric", "asymmetric"};
    std::vector<int> dims{2, 3, 4, 5};
    std::string out_path;
    std::string format_text = "csv";
    auto *sweep = app.add_subcommand("sweep", "Tabulate analytic and empirical values over d");
    sweep->add_option("--modes", sweep_modes, "Comma-separated modes")->delimiter(',');
    sweep->add_option("--schemes", sweep_schemes, "Comma-separated schemes")->delimiter(',');
    sweep->add_option("--dims", dims, "Comma-separated dimensions")->delimiter(',');
    sweep->add_option("--trials", trials, "Trials per row")->capture_default_str();
    sweep->add_option("--seed", seed, "Base RNG seed (default: $VNCERT_SEED or 1)");
    sweep->add_option("--out", out_path, "Output file")->required();
    sweep->add_option("--format", format_text, "csv | jsonl")
        ->check(CLI::IsMember({"csv", "jsonl"}))
        ->capture_default_str();
    sweep->add_option("--threads", threads, "Worker threads (0 = all cores)")
        ->check(CLI::NonNegativeNumber);

    std::vector<const char *> argv{"vncert"};
    for (const auto &arg : args) {
        argv.push_back(arg.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            out << (e.get_name() == "CallForVersion" ? std::string(e.what()) + "\n"
                                                      : app.help());
            return kExitOk;
        }
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (analytic->parsed()) {
            print_record(out, cmd_analytic(require_mode(mode_text), require_scheme(scheme_text), dim));
        } else if (sim->parsed()) {
            SimulateOptions options;
            options.config = make_scenario(require_mode(mode_text), require_scheme(scheme_text), dim,
                                           trials, seed ? *seed : default_seed(), fixed_u_seed,
                                           {pair.at(0), pair.at(1)});
            options.fixed_u_seed = fixed_u_seed;
            options.threads = threads;
            print_record(out, cmd_simulate(options));
        } else if (verify->parsed()) {
            if (dmax < 2 || dmax > kMaxNumericDim) {
                throw UsageError("--dmax must be in [2, " + std::to_string(kMaxNumericDim) + "]");
            }
            return cmd_verify(dmax, default_hooks(), out);
        } else if (sweep->parsed()) {
            SweepOptions options;
            options.modes.clear();
            for (const auto &m : sweep_modes) {
                options.modes.push_back(require_mode(m));
            }
            options.schemes.clear();
            for (const auto &s : sweep_schemes) {
                options.schemes.push_back(require_scheme(s));
            }
            options.dims = dims;
            options.trials = trials;
            options.seed = seed ? *seed : default_seed();
            options.out_path = out_path;
            options.format = format_text == "jsonl" ? SweepFormat::jsonl : SweepFormat::csv;
            options.threads = threads;
            print_record(out, cmd_sweep(options));
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    } catch (const IoError &e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitOk;
}

}  // namespace vncert::cli
