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
 * Porter-Thomas theory: the exact and asymptotic laws for output
 * probabilities of Haar-random states, entropy constants, tail masses,
 * histograms and the sum-to-expectation identity.
 *
 * Throughout, N is the Hilbert-space dimension and logs are natural.
 */
#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "xebsim/probability_table.hpp"

namespace xebsim::ptheory {

/// Euler-Mascheroni constant.
inline constexpr double kEulerGamma = 0.57721566490153286061;

/// Asymptotic Porter-Thomas density N e^{-Np}. DomainError for p < 0.
[[nodiscard]] double pt_pdf(double p, double dim);
/// 1 - e^{-Np}.
[[nodiscard]] double pt_cdf(double p, double dim);

/// Exact finite-N density (N-1)(1-p)^{N-2} on [0, 1].
/// DomainError for p outside [0, 1] or N < 2.
[[nodiscard]] double exact_pdf(double p, double dim);
/// 1 - (1-p)^{N-1}, clamped to [0, 1] outside the support.
[[nodiscard]] double exact_cdf(double p, double dim);

/// J(N) = integral of N e^{-Np} over [1, inf), closed form e^{-N}.
[[nodiscard]] double tail_mass(double dim);
/// The same integral by adaptive quadrature.
[[nodiscard]] double tail_mass_quadrature(double dim);

struct PtConstants {
    double dim = 0.0;
    double gamma = kEulerGamma;
    double h_ideal = 0.0;        ///< log N - 1 + gamma
    double h0 = 0.0;             ///< log N + gamma
    double expected_log_p = 0.0; ///< -(log N + gamma)
};

/// Closed-form constants. DomainError for N < 2.
[[nodiscard]] PtConstants constants(double dim);

/// The same three quantities by quadrature of their defining integrals
/// against N e^{-Np}.
[[nodiscard]] PtConstants constants_quadrature(double dim);

/// Adaptive quadrature of f over [a, b] to the given absolute tolerance.
/// Tolerates integrable endpoint singularities (e.g. log p at 0).
[[nodiscard]] double integrate(const std::function<double(double)> &f,
                               double a, double b, double abs_tol = 1e-12);

/// E_PT[f(p)] by quadrature over [0, 50/N].
[[nodiscard]] double pt_expectation(const std::function<double(double)> &f,
                                    double dim);

struct Histogram {
    std::vector<double> edges;         ///< strictly increasing, bins + 1
    std::vector<std::uint64_t> counts; ///< one per bin
    std::uint64_t total = 0;           ///< sum of counts
    std::uint64_t overflow = 0;        ///< values above edges.back()

    [[nodiscard]] std::size_t bins() const noexcept { return counts.size(); }
    /// Every pooled value, in range or not.
    [[nodiscard]] std::uint64_t pooled() const noexcept {
        return total + overflow;
    }
};

/// Pools all probabilities from tables of one size into `bins` uniform
/// bins on [0, upper]. Without `upper` the range is [0, max p]. Values
/// above `upper` go to the overflow count.
/// ValidationError for mixed sizes, an empty list or bins < 10.
[[nodiscard]] Histogram
empirical_histogram(std::span<const ProbabilityTable> tables,
                    std::size_t bins, std::optional<double> upper = {});

/// The 50-bin, [0, 6/N] layout used for Porter-Thomas comparisons.
[[nodiscard]] Histogram
pt_histogram(std::span<const ProbabilityTable> tables);

/// Total-variation distance between the histogram (with its overflow as
/// one extra cell) and the bin masses of a model CDF.
[[nodiscard]] double
tv_distance(const Histogram &hist, const std::function<double(double)> &cdf);

/// TV distance between two model CDFs on the histogram's binning.
[[nodiscard]] double
tv_distance_models(const std::vector<double> &edges,
                   const std::function<double(double)> &cdf_a,
                   const std::function<double(double)> &cdf_b);

/// CSV columns: bin_left,bin_right,count,empirical_density,pt_density,
/// exact_density. Model densities are bin averages.
void write_histogram_csv(const std::filesystem::path &path,
                         const Histogram &hist, double dim);

enum class TestFunction { PLogP, LogP, P, PSquared };

struct SumIdentity {
    double lhs = 0.0; ///< sum over x of f(p(x))
    double rhs = 0.0; ///< N * E_PT[f(p)]
    /// Entries where f is undefined (log of zero); excluded from lhs.
    std::vector<BasisIndex> excluded;
};

[[nodiscard]] double apply_test_function(TestFunction f, double p);

[[nodiscard]] SumIdentity sum_identity_check(const ProbabilityTable &table,
                                             TestFunction f);

} // namespace xebsim::ptheory
