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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace xebsim {

using BasisIndex = std::uint64_t;

/// Output distribution p(x) over all N basis states.
///
/// Entries are finite and non-negative and sum to one within
/// `kNormTolerance`; construction throws ValidationError otherwise.
class ProbabilityTable {
  public:
    static constexpr double kNormTolerance = 1e-8;

    ProbabilityTable() = default;
    explicit ProbabilityTable(std::vector<double> values);

    /// Constant 1/N table.
    static ProbabilityTable uniform(std::size_t dim);

    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] double operator[](BasisIndex x) const { return values_[x]; }
    [[nodiscard]] double at(BasisIndex x) const;
    [[nodiscard]] std::span<const double> values() const noexcept {
        return values_;
    }
    [[nodiscard]] double sum() const noexcept;

    friend bool operator==(const ProbabilityTable &,
                           const ProbabilityTable &) = default;

  private:
    std::vector<double> values_;
};

} // namespace xebsim
