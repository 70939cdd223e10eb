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
 * Cross-entropy benchmarking: cross entropies, the cross-entropy
 * difference and its ensemble mean alpha, the log-ratio experiment, and
 * typical-set diagnostics.
 *
 * Experiments compare two samplers against the ideal output distribution
 * p of a random circuit. The *device* plays the quantum computer (ideal,
 * or a noisy mixture with fidelity F); the *spoofer* plays the classical
 * competitor. Every log-probability is scored against p itself.
 */
#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "xebsim/haar.hpp"
#include "xebsim/probability_table.hpp"
#include "xebsim/rng.hpp"
#include "xebsim/sampling.hpp"

namespace xebsim {

/// A cross entropy in nats; +inf when the scored distribution puts mass
/// where the ideal table is zero.
struct CrossEntropy {
    double nats = 0.0;
    std::vector<BasisIndex> zero_support;

    [[nodiscard]] bool finite() const noexcept { return zero_support.empty(); }
};

/// H(p_a, p) = -sum_x p_a(x) log p(x).
[[nodiscard]] CrossEntropy cross_entropy_exact(const ProbabilityTable &p_a,
                                               const ProbabilityTable &p_ideal);

/// -(1/m) sum_{x in S} log p(x).
[[nodiscard]] CrossEntropy
cross_entropy_sampled(const BitstringSample &sample,
                      const ProbabilityTable &p_ideal);

/// Shannon entropy H(p) = H(p, p).
[[nodiscard]] double entropy(const ProbabilityTable &p);

/// h0(N) - h_cross, with h0(N) = log N + gamma.
[[nodiscard]] double delta_h(double h_cross, double dim);

enum class StateSource { GateCircuit, HaarState };

struct ExperimentConfig {
    int num_qubits = 10;
    /// Sweeps per circuit; 0 selects default_cycles(num_qubits).
    int cycles = 0;
    std::size_t m = 1000;
    StateSource source = StateSource::GateCircuit;
    GateSetSpec gate_set;
    SamplerKind device = IdealSampler{};
    SamplerKind spoofer = UniformSampler{};
};

struct XebReport {
    std::string circuit_id;
    int num_qubits = 0;
    std::size_t m = 0;
    std::uint64_t gate_count = 0;
    std::string device_id;
    std::string spoofer_id;
    double h_cross = 0.0;       ///< sampled H(p_spoof, p)
    double h_cross_exact = 0.0; ///< exact H(p_spoof, p)
    double delta_h = 0.0;       ///< h0 - h_cross
    double delta_h_exact = 0.0; ///< h0 - h_cross_exact
    double log_pr_ideal = 0.0;  ///< log Pr(S), S from the device
    double log_pr_spoof = 0.0;  ///< log Pr(S_cl), S_cl from the spoofer
    double log_ratio = 0.0;     ///< log_pr_ideal - log_pr_spoof
};

/// Scores device and spoofer samples against a given ideal table.
[[nodiscard]] XebReport run_table_experiment(const ProbabilityTable &ideal,
                                             const ExperimentConfig &config,
                                             RngStream &rng,
                                             std::string circuit_id = {});

/// Ideal output distribution of one random instance (circuit or Haar
/// state) drawn from `rng`. `gate_count` receives the circuit size (0 for
/// Haar states).
[[nodiscard]] ProbabilityTable sample_ideal_table(const ExperimentConfig &config,
                                                  RngStream &rng,
                                                  std::uint64_t *gate_count = nullptr);

/// One random instance: generate, evolve, sample, score.
[[nodiscard]] XebReport run_circuit_experiment(const ExperimentConfig &config,
                                               RngStream &rng,
                                               std::string circuit_id = {});

struct EnsembleConfig {
    ExperimentConfig experiment;
    std::size_t num_circuits = 50;
    std::uint64_t seed = 0;
    /// Classical baseline C; 0 is the uniform sampler.
    double baseline_c = 0.0;
    int workers = 1;
};

struct EnsembleSummary {
    std::size_t num_circuits = 0;
    double alpha = 0.0; ///< mean sampled delta_h
    double alpha_stderr = 0.0;
    double alpha_exact = 0.0;
    double alpha_exact_stderr = 0.0;
    double mean_log_ratio = 0.0;
    double mean_log_ratio_stderr = 0.0;
    double baseline_c = 0.0;
    /// alpha <= 1 + 3 stderr
    bool within_bound = true;
    /// alpha > C and within_bound
    bool supremacy = false;
    std::vector<XebReport> reports;
};

/// A circuit failed or produced a non-finite score. `partial` holds every
/// report that completed, in circuit order.
class EnsembleError : public std::runtime_error {
  public:
    EnsembleError(const std::string &what, std::vector<XebReport> partial)
        : std::runtime_error(what), partial_(std::move(partial)) {}

    [[nodiscard]] const std::vector<XebReport> &partial() const noexcept {
        return partial_;
    }

  private:
    std::vector<XebReport> partial_;
};

/// Circuit i uses RngStream(seed, i), so results do not depend on the
/// worker count. Throws ValidationError for fewer than two circuits.
[[nodiscard]] EnsembleSummary run_ensemble(const EnsembleConfig &config);

/// Aggregates already-computed reports.
[[nodiscard]] EnsembleSummary summarize_reports(std::vector<XebReport> reports,
                                                double baseline_c);

[[nodiscard]] nlohmann::json to_json(const XebReport &report);
[[nodiscard]] nlohmann::json to_json(const EnsembleSummary &summary);
[[nodiscard]] XebReport report_from_json(const nlohmann::json &j);

/// One row per circuit.
void write_reports_csv(const std::filesystem::path &path,
                       const std::vector<XebReport> &reports);

// ---------------------------------------------------------------- AEP

struct AepDiagnostic {
    std::size_t m = 0;
    double epsilon = 0.0;
    double lhs = 0.0; ///< |-(1/m) log Pr(S) - target|
    bool typical = false;
};

/// Typicality of a sample against `target` nats. lhs is +inf when the
/// sample contains a zero-probability bitstring.
[[nodiscard]] AepDiagnostic aep_diagnostic(const BitstringSample &sample,
                                           const ProbabilityTable &p_ideal,
                                           double target, double epsilon);

enum class AepTarget {
    EntropyFormula,      ///< log N - 1 + gamma
    CrossEntropyFormula, ///< log N + gamma
    CrossEntropyExact,   ///< H(p_sampler, p) from the tables
};

struct AepExperimentConfig {
    int num_qubits = 10;
    std::vector<std::size_t> sample_sizes{10, 100, 1000, 10000};
    std::size_t trials = 200;
    double epsilon = 0.1;
    StateSource source = StateSource::HaarState;
    SamplerKind sampler = IdealSampler{};
    AepTarget target = AepTarget::EntropyFormula;
    std::uint64_t seed = 0;
};

struct AepPoint {
    std::size_t m = 0;
    std::size_t trials = 0;
    std::size_t typical = 0;

    [[nodiscard]] double fraction() const noexcept {
        return trials ? static_cast<double>(typical) /
                            static_cast<double>(trials)
                      : 0.0;
    }
    [[nodiscard]] double binomial_sigma() const noexcept;
};

/// Fraction of typical samples per m; every trial uses a fresh instance.
[[nodiscard]] std::vector<AepPoint>
aep_typical_fraction(const AepExperimentConfig &config);

/// True when each fraction is at least the previous one minus
/// `sigmas` combined binomial standard deviations.
[[nodiscard]] bool monotone_within_noise(const std::vector<AepPoint> &points,
                                         double sigmas = 2.0);

} // namespace xebsim
