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
 * Bitstring sampling from output distributions and Pr(S) bookkeeping.
 */
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "xebsim/probability_table.hpp"
#include "xebsim/rng.hpp"

namespace xebsim {

/// Multiset S of m measured basis indices plus provenance labels.
struct BitstringSample {
    std::vector<BasisIndex> xs;
    std::string sampler_id;
    std::string circuit_id;

    [[nodiscard]] std::size_t m() const noexcept { return xs.size(); }
};

// Sampler variants.
struct IdealSampler {};
struct UniformSampler {};
/// F * p + (1 - F) / N.
struct NoisyMixture {
    double fidelity = 1.0;
};
struct ExternalSampler {
    ProbabilityTable table;
};

using SamplerKind =
    std::variant<IdealSampler, UniformSampler, NoisyMixture, ExternalSampler>;

/// Short label, e.g. "ideal", "uniform", "mixture(F=0.5)".
[[nodiscard]] std::string sampler_label(const SamplerKind &kind);

/// Inverse-CDF sampler over a fixed table; O(log N) per draw.
class DiscreteSampler {
  public:
    explicit DiscreteSampler(const ProbabilityTable &table);

    [[nodiscard]] BasisIndex operator()(RngStream &rng) const;

  private:
    std::vector<double> cumulative_;
};

/// m independent draws from the table. Throws ValidationError for m < 1.
[[nodiscard]] BitstringSample draw_sample(const ProbabilityTable &table,
                                          std::size_t m, RngStream &rng);

/// Distribution a sampler of the given kind draws from when the ideal
/// output distribution is `ideal`. Throws ValidationError for a fidelity
/// outside [0, 1] or an external table of the wrong size.
[[nodiscard]] ProbabilityTable spoofer_table(const SamplerKind &kind,
                                             const ProbabilityTable &ideal);

/// log Pr(S) in nats. `nats` is -inf when some sampled x has p(x) = 0;
/// `zero_probability` then lists those indices (first occurrence order,
/// without repeats).
struct LogProbability {
    double nats = 0.0;
    std::vector<BasisIndex> zero_probability;

    [[nodiscard]] bool finite() const noexcept {
        return zero_probability.empty();
    }
};

/// Sum of log p_ideal(x) over the sample. Always scores against the ideal
/// table, whichever sampler produced the bitstrings.
[[nodiscard]] LogProbability log_pr(const BitstringSample &sample,
                                    const ProbabilityTable &ideal);

/// Provenance written next to a sample CSV.
struct SampleMetadata {
    std::size_t m = 0;
    int num_qubits = 0;
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;
};

/// CSV columns: circuit_id,sampler_id,index.
void write_sample_csv(const std::filesystem::path &path,
                      const BitstringSample &sample);
[[nodiscard]] BitstringSample
read_sample_csv(const std::filesystem::path &path);

void write_sample_sidecar(const std::filesystem::path &path,
                          const SampleMetadata &meta);
[[nodiscard]] SampleMetadata
read_sample_sidecar(const std::filesystem::path &path);

} // namespace xebsim
