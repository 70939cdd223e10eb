// Copyright 2026 The xebsim Authors
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

/**
 * @file
 * Experiment drivers behind the command-line tool. Each command writes its
 * artifacts into `RunConfig::out`, prints a short human-readable summary to
 * the given stream, and returns a process exit status (0 iff every check
 * the command performs passed).
 */
#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace xebsim::cli {

struct RunConfig {
    /// Qubit counts; pt-converge uses all of them, other commands the first.
    std::vector<int> n{10};
    /// Sweeps per circuit; 0 selects the calibrated default.
    int cycles = 0;
    std::size_t m = 1000;
    std::size_t circuits = 50;
    std::uint64_t seed = 0;
    std::string spoofer = "uniform"; ///< ideal | uniform | mixture
    double fidelity = 0.5;           ///< mixture spoofer fidelity
    std::string source = "circuit";  ///< circuit | haar
    std::vector<double> r_values{0.0};
    /// Gate count for the noise model; 0 uses each circuit's own size.
    std::uint64_t g = 0;
    std::vector<double> epsilons{0.1};
    std::size_t bins = 50;
    /// States per n for pt-converge; 0 pools at least 2^15 probabilities.
    std::size_t states = 0;
    std::vector<std::size_t> dims{2, 8};
    bool phase_fix = true;
    double baseline_c = 0.0;
    int workers = 1;
    std::filesystem::path out = ".";
};

/// One pass/fail verdict with its supporting numbers.
struct Check {
    std::string name;
    bool passed = false;
    double statistic = 0.0;
    double p_value = 0.0;
    std::string detail;
};

[[nodiscard]] nlohmann::json to_json(const Check &check);

/// Statistical suites for the Haar samplers; writes haar_test.json.
[[nodiscard]] std::vector<Check> haar_suites(const RunConfig &config);
int cmd_haar_test(const RunConfig &config, std::ostream &log);

struct ConvergenceRow {
    int n = 0;
    std::size_t states = 0;
    double tv_empirical_exact = 0.0;
    double tv_empirical_pt = 0.0;
    double tv_exact_pt = 0.0;
};

/// Porter-Thomas histograms per n; writes pt_hist_n<n>.csv and
/// pt_converge.csv.
[[nodiscard]] std::vector<ConvergenceRow>
pt_convergence(const RunConfig &config);
int cmd_pt_converge(const RunConfig &config, std::ostream &log);

/// Ensemble run; writes summary.json, circuits.csv and aep.csv, and prints
/// `alpha=<v> ± <se>, C=<baseline>, supremacy=<bool>`.
int cmd_xeb_run(const RunConfig &config, std::ostream &log);

struct LogRatioRow {
    double r = 0.0;
    double g = 0.0; ///< mean gate count over circuits
    double fidelity = 0.0;
    double observed = 0.0;
    double observed_stderr = 0.0;
    double predicted = 0.0;
    bool checked = false; ///< m F >= 50
    bool passed = true;
};

/// Noisy log-ratio sweep: device = mixture(e^{-rg}), spoofer = uniform.
[[nodiscard]] std::vector<LogRatioRow> log_ratio_sweep(const RunConfig &config);
int cmd_log_ratio_sweep(const RunConfig &config, std::ostream &log);

struct TailRow {
    int dim = 0;
    double quadrature = 0.0;
    double closed_form = 0.0;
    double reference = 0.0; ///< reference tail mass, 0 when absent
};

[[nodiscard]] std::vector<TailRow> tail_table();
int cmd_tail_table(const RunConfig &config, std::ostream &log);

} // namespace xebsim::cli
