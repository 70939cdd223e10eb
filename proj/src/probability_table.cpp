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

#include "xebsim/probability_table.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "xebsim/errors.hpp"

namespace xebsim {

ProbabilityTable::ProbabilityTable(std::vector<double> values)
    : values_(std::move(values)) {
    if (values_.empty()) {
        throw ValidationError("probability table is empty");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i]) || values_[i] < 0.0) {
            throw ValidationError("probability table entry " +
                                  std::to_string(i) +
                                  " is negative or not finite");
        }
    }
    const double total = sum();
    if (std::abs(total - 1.0) > kNormTolerance) {
        throw ValidationError("probability table sums to " +
                              std::to_string(total) + ", expected 1");
    }
}

ProbabilityTable ProbabilityTable::uniform(std::size_t dim) {
    if (dim == 0) {
        throw ValidationError("uniform table needs at least one entry");
    }
    return ProbabilityTable(
        std::vector<double>(dim, 1.0 / static_cast<double>(dim)));
}

double ProbabilityTable::at(BasisIndex x) const {
    if (x >= values_.size()) {
        throw IndexError("basis index " + std::to_string(x) +
                         " out of range for table of size " +
                         std::to_string(values_.size()));
    }
    return values_[x];
}

double ProbabilityTable::sum() const noexcept {
    return std::accumulate(values_.begin(), values_.end(), 0.0);
}

} // namespace xebsim
