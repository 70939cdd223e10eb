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
 * Small statistics toolkit: summary moments, Kolmogorov-Smirnov and
 * chi-square tests.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace xebsim::stats {

struct Summary {
    std::size_t count = 0;
    double mean = 0.0;
    double sd = 0.0;        ///< sample standard deviation (n - 1)
    double std_error = 0.0; ///< sd / sqrt(count)
    double min = 0.0;
    double max = 0.0;
};

[[nodiscard]] Summary summarize(std::span<const double> values);

struct TestResult {
    double statistic = 0.0;
    double p_value = 1.0;
    double dof = 0.0; ///< chi-square only
};

/// P(K > lambda) for the Kolmogorov distribution.
[[nodiscard]] double kolmogorov_survival(double lambda);

/// Two-sample KS test with the asymptotic p-value (Stephens' correction).
[[nodiscard]] TestResult ks_two_sample(std::span<const double> a,
                                       std::span<const double> b);

/// One-sample KS test against a continuous CDF.
[[nodiscard]] TestResult
ks_one_sample(std::span<const double> values,
              const std::function<double(double)> &cdf);

/// Upper tail of the chi-square distribution.
[[nodiscard]] double chi_square_survival(double statistic, double dof);

/// Goodness of fit of observed counts against expected probabilities.
/// Cells with expected count below 5 are pooled into their neighbour.
[[nodiscard]] TestResult
chi_square_gof(std::span<const std::uint64_t> observed,
               std::span<const double> probabilities);

/// Homogeneity test for two histograms over the same bins.
[[nodiscard]] TestResult
chi_square_two_sample(std::span<const std::uint64_t> a,
                      std::span<const std::uint64_t> b);

} // namespace xebsim::stats
