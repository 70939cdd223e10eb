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

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "xebsim/commands.hpp"

int main(int argc, char **argv) {
    using namespace xebsim::cli;

    CLI::App app{"Random-circuit sampling and cross-entropy benchmarking"};
    app.set_config("--config", "", "Read key=value settings from a file");
    app.fallthrough();
    app.require_subcommand(1);

    RunConfig config;
    app.add_option("--n", config.n, "Qubit count(s)")->delimiter(',');
    app.add_option("--cycles", config.cycles,
                   "Sweeps per circuit (0: 20 per qubit)");
    app.add_option("--m", config.m, "Bitstrings per sample");
    app.add_option("--circuits", config.circuits, "Circuits per ensemble");
    app.add_option("--seed", config.seed, "Random seed")->required();
    app.add_option("--spoofer", config.spoofer, "Classical sampler")
        ->check(CLI::IsMember({"ideal", "uniform", "mixture"}));
    app.add_option("--fidelity", config.fidelity, "Mixture fidelity F")
        ->check(CLI::Range(0.0, 1.0));
    app.add_option("--source", config.source, "Random instances")
        ->check(CLI::IsMember({"circuit", "haar"}));
    app.add_option("--r", config.r_values, "Per-gate error rates")
        ->delimiter(',');
    app.add_option("--g", config.g, "Gate count for the noise model");
    app.add_option("--epsilon", config.epsilons, "Typical-set tolerances")
        ->delimiter(',');
    app.add_option("--bins", config.bins, "Histogram bins");
    app.add_option("--states", config.states, "States per n (pt-converge)");
    app.add_option("--dims", config.dims, "Unitary dimensions (haar-test)")
        ->delimiter(',');
    app.add_option("--baseline", config.baseline_c, "Classical baseline C");
    app.add_option("--workers", config.workers, "Worker threads")
        ->check(CLI::PositiveNumber);
    std::string out = ".";
    app.add_option("--out", out, "Output directory");
    bool no_phase_fix = false;
    app.add_flag("--no-phase-fix", no_phase_fix,
                 "Skip the QR phase correction (test hook)");

    auto *haar = app.add_subcommand("haar-test", "Haar sampler property suites");
    auto *converge =
        app.add_subcommand("pt-converge", "Porter-Thomas convergence per n");
    auto *xeb = app.add_subcommand("xeb-run", "Cross-entropy ensemble");
    auto *ratio = app.add_subcommand("log-ratio", "Noisy log-ratio sweep");
    auto *tail = app.add_subcommand("tail-table", "Tail mass J(N) table");

    CLI11_PARSE(app, argc, argv);
    config.out = out;
    config.phase_fix = !no_phase_fix;

    try {
        std::filesystem::create_directories(config.out);
        std::ofstream(config.out / "config.ini")
            << app.config_to_str(true, false);

        if (haar->parsed()) {
            return cmd_haar_test(config, std::cout);
        }
        if (converge->parsed()) {
            return cmd_pt_converge(config, std::cout);
        }
        if (xeb->parsed()) {
            return cmd_xeb_run(config, std::cout);
        }
        if (ratio->parsed()) {
            return cmd_log_ratio_sweep(config, std::cout);
        }
        if (tail->parsed()) {
            return cmd_tail_table(config, std::cout);
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
