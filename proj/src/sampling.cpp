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

#include "xebsim/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "xebsim/errors.hpp"

namespace xebsim {

namespace {

template <class... Ts> struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts> Overloaded(Ts...) -> Overloaded<Ts...>;

std::string format_fidelity(double f) {
    std::ostringstream out;
    out.precision(6);
    out << f;
    return out.str();
}

} // namespace

std::string sampler_label(const SamplerKind &kind) {
    return std::visit(
        Overloaded{
            [](const IdealSampler &) -> std::string { return "ideal"; },
            [](const UniformSampler &) -> std::string { return "uniform"; },
            [](const NoisyMixture &mix) -> std::string {
                return "mixture(F=" + format_fidelity(mix.fidelity) + ")";
            },
            [](const ExternalSampler &) -> std::string { return "external"; },
        },
        kind);
}

DiscreteSampler::DiscreteSampler(const ProbabilityTable &table)
    : cumulative_(table.size()) {
    const auto p = table.values();
    std::partial_sum(p.begin(), p.end(), cumulative_.begin());
}

BasisIndex DiscreteSampler::operator()(RngStream &rng) const {
    // Scale by the accumulated total so rounding in the table sum never
    // leaves a gap at the top end.
    const double u = rng.uniform01() * cumulative_.back();
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    if (it == cumulative_.end()) {
        --it;
    }
    return static_cast<BasisIndex>(it - cumulative_.begin());
}

BitstringSample draw_sample(const ProbabilityTable &table, std::size_t m,
                            RngStream &rng) {
    if (m < 1) {
        throw ValidationError("sample size must be at least 1");
    }
    if (table.size() == 0) {
        throw ValidationError("cannot sample from an empty table");
    }
    const DiscreteSampler sampler(table);
    BitstringSample sample;
    sample.xs.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        sample.xs.push_back(sampler(rng));
    }
    return sample;
}

ProbabilityTable spoofer_table(const SamplerKind &kind,
                               const ProbabilityTable &ideal) {
    const std::size_t dim = ideal.size();
    return std::visit(
        Overloaded{
            [&](const IdealSampler &) { return ideal; },
            [&](const UniformSampler &) {
                return ProbabilityTable::uniform(dim);
            },
            [&](const NoisyMixture &mix) {
                const double f = mix.fidelity;
                if (!(f >= 0.0 && f <= 1.0)) {
                    throw ValidationError("mixture fidelity " +
                                          std::to_string(f) +
                                          " outside [0, 1]");
                }
                const double floor =
                    (1.0 - f) / static_cast<double>(dim);
                std::vector<double> p(dim);
                const auto src = ideal.values();
                for (std::size_t x = 0; x < dim; ++x) {
                    p[x] = f * src[x] + floor;
                }
                return ProbabilityTable(std::move(p));
            },
            [&](const ExternalSampler &ext) {
                if (ext.table.size() != dim) {
                    throw ValidationError(
                        "external table size does not match the ideal table");
                }
                return ext.table;
            },
        },
        kind);
}

LogProbability log_pr(const BitstringSample &sample,
                      const ProbabilityTable &ideal) {
    LogProbability out;
    std::unordered_set<BasisIndex> seen;
    for (BasisIndex x : sample.xs) {
        const double p = ideal.at(x);
        if (p > 0.0) {
            out.nats += std::log(p);
        } else if (seen.insert(x).second) {
            out.zero_probability.push_back(x);
        }
    }
    if (!out.zero_probability.empty()) {
        out.nats = -std::numeric_limits<double>::infinity();
    }
    return out;
}

// ---------------------------------------------------------------- files

void write_sample_csv(const std::filesystem::path &path,
                      const BitstringSample &sample) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string());
    }
    out << "circuit_id,sampler_id,index\n";
    for (BasisIndex x : sample.xs) {
        out << sample.circuit_id << ',' << sample.sampler_id << ',' << x
            << '\n';
    }
}

BitstringSample read_sample_csv(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::string line;
    if (!std::getline(in, line) || line != "circuit_id,sampler_id,index") {
        throw ValidationError("sample CSV has an unexpected header");
    }
    BitstringSample sample;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        // index is the last field
        const auto last = line.rfind(',');
        const auto first = line.find(',');
        if (first == std::string::npos || last == first) {
            throw ValidationError("malformed sample CSV row: " + line);
        }
        sample.circuit_id = line.substr(0, first);
        sample.sampler_id = line.substr(first + 1, last - first - 1);
        sample.xs.push_back(std::stoull(line.substr(last + 1)));
    }
    return sample;
}

void write_sample_sidecar(const std::filesystem::path &path,
                          const SampleMetadata &meta) {
    nlohmann::json j;
    j["m"] = meta.m;
    j["n"] = meta.num_qubits;
    j["seed"] = meta.seed;
    j["stream_id"] = meta.stream_id;
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string());
    }
    out << j.dump(2) << '\n';
}

SampleMetadata read_sample_sidecar(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    const auto j = nlohmann::json::parse(in);
    SampleMetadata meta;
    meta.m = j.at("m").get<std::size_t>();
    meta.num_qubits = j.at("n").get<int>();
    meta.seed = j.at("seed").get<std::uint64_t>();
    meta.stream_id = j.at("stream_id").get<std::uint64_t>();
    return meta;
}

} // namespace xebsim
