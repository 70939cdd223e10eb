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

#include "xebsim/noise.hpp"

#include <cmath>
#include <string>

#include "xebsim/errors.hpp"

namespace xebsim {

NoiseSpec::NoiseSpec(double rate, std::uint64_t gate_count)
    : rate_(rate), gate_count_(gate_count), fidelity_(1.0) {
    if (!(rate >= 0.0) || !std::isfinite(rate)) {
        throw ValidationError("error rate must be finite and >= 0, got " +
                              std::to_string(rate));
    }
    fidelity_ = std::exp(-rate_ * static_cast<double>(gate_count_));
}

double fidelity(const NoiseSpec &spec) { return spec.fidelity(); }

double fidelity(double rate, std::uint64_t gate_count) {
    return NoiseSpec(rate, gate_count).fidelity();
}

std::vector<NoiseSpec> sweep(std::span<const double> rates,
                             std::uint64_t gate_count) {
    if (rates.empty()) {
        throw ValidationError("rate sweep needs at least one rate");
    }
    std::vector<NoiseSpec> out;
    out.reserve(rates.size());
    for (double r : rates) {
        out.emplace_back(r, gate_count);
    }
    return out;
}

std::vector<NoiseSpec> sweep(std::span<const double> rates,
                             const Circuit &circuit) {
    return sweep(rates, static_cast<std::uint64_t>(circuit.gate_count()));
}

} // namespace xebsim
