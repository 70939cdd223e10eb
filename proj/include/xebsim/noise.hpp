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

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "xebsim/statevector.hpp"

namespace xebsim {

/// Per-gate error rate r and gate count g, with F = e^{-rg} cached.
class NoiseSpec {
  public:
    /// Throws ValidationError for negative or non-finite r.
    NoiseSpec(double rate, std::uint64_t gate_count);

    [[nodiscard]] double rate() const noexcept { return rate_; }
    [[nodiscard]] std::uint64_t gate_count() const noexcept {
        return gate_count_;
    }
    [[nodiscard]] double fidelity() const noexcept { return fidelity_; }

  private:
    double rate_;
    std::uint64_t gate_count_;
    double fidelity_;
};

/// e^{-r g}.
[[nodiscard]] double fidelity(const NoiseSpec &spec);
[[nodiscard]] double fidelity(double rate, std::uint64_t gate_count);

/// One spec per rate, all sharing the circuit's gate count.
[[nodiscard]] std::vector<NoiseSpec> sweep(std::span<const double> rates,
                                           const Circuit &circuit);
[[nodiscard]] std::vector<NoiseSpec> sweep(std::span<const double> rates,
                                           std::uint64_t gate_count);

} // namespace xebsim
