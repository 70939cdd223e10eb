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

#include "xebsim/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <boost/math/special_functions/gamma.hpp>

#include "xebsim/errors.hpp"

namespace xebsim::stats {

Summary summarize(std::span<const double> values) {
    Summary s;
    s.count = values.size();
    if (s.count == 0) {
        return s;
    }
    // Welford
    double mean = 0.0;
    double m2 = 0.0;
    std::size_t k = 0;
    for (double v : values) {
        ++k;
        const double delta = v - mean;
        mean += delta / static_cast<double>(k);
        m2 += delta * (v - mean);
    }
    s.mean = mean;
    s.min = *std::min_element(values.begin(), values.end());
    s.max = *std::max_element(values.begin(), values.end());
    if (s.count > 1) {
        s.sd = std::sqrt(m2 / static_cast<double>(s.count - 1));
        s.std_error = s.sd / std::sqrt(static_cast<double>(s.count));
    }
    return s;
}

double kolmogorov_survival(double lambda) {
    if (lambda <= 0.0) {
        return 1.0;
    }
    constexpr double pi2 = std::numbers::pi * std::numbers::pi;
    if (lambda < 1.18) {
        // Jacobi theta form of the CDF converges fast for small lambda.
        const double y = std::exp(-pi2 / (8.0 * lambda * lambda));
        double sum = 0.0;
        double term = y;
        const double y8 = std::pow(y, 8.0);
        for (int k = 1; k < 50; ++k) {
            sum += term;
            // exponents (2k-1)^2 step: y^{(2k+1)^2} = y^{(2k-1)^2} * y^{8k}
            term *= std::pow(y8, static_cast<double>(k));
            if (term < 1e-17 * sum) {
                break;
            }
        }
        const double cdf = std::sqrt(2.0 * std::numbers::pi) / lambda * sum;
        return std::clamp(1.0 - cdf, 0.0, 1.0);
    }
    double sum = 0.0;
    double sign = 1.0;
    for (int k = 1; k < 100; ++k) {
        const double term =
            std::exp(-2.0 * static_cast<double>(k * k) * lambda * lambda);
        sum += sign * term;
        sign = -sign;
        if (term < 1e-17) {
            break;
        }
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

namespace {

double stephens_lambda(double d, double ne) {
    const double s = std::sqrt(ne);
    return (s + 0.12 + 0.11 / s) * d;
}

} // namespace

TestResult ks_two_sample(std::span<const double> a,
                         std::span<const double> b) {
    if (a.empty() || b.empty()) {
        throw ValidationError("KS test needs non-empty samples");
    }
    std::vector<double> x(a.begin(), a.end());
    std::vector<double> y(b.begin(), b.end());
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    const double na = static_cast<double>(x.size());
    const double nb = static_cast<double>(y.size());
    std::size_t i = 0;
    std::size_t j = 0;
    double d = 0.0;
    while (i < x.size() && j < y.size()) {
        const double v = std::min(x[i], y[j]);
        while (i < x.size() && x[i] == v) {
            ++i;
        }
        while (j < y.size() && y[j] == v) {
            ++j;
        }
        d = std::max(d, std::abs(static_cast<double>(i) / na -
                                 static_cast<double>(j) / nb));
    }
    const double ne = na * nb / (na + nb);
    return {d, kolmogorov_survival(stephens_lambda(d, ne)), 0.0};
}

TestResult ks_one_sample(std::span<const double> values,
                         const std::function<double(double)> &cdf) {
    if (values.empty()) {
        throw ValidationError("KS test needs a non-empty sample");
    }
    std::vector<double> x(values.begin(), values.end());
    std::sort(x.begin(), x.end());
    const double n = static_cast<double>(x.size());
    double d = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double f = cdf(x[i]);
        d = std::max({d, std::abs(static_cast<double>(i + 1) / n - f),
                      std::abs(f - static_cast<double>(i) / n)});
    }
    return {d, kolmogorov_survival(stephens_lambda(d, n)), 0.0};
}

double chi_square_survival(double statistic, double dof) {
    if (dof <= 0.0) {
        throw DomainError("chi-square needs positive degrees of freedom");
    }
    if (statistic <= 0.0) {
        return 1.0;
    }
    return boost::math::gamma_q(dof / 2.0, statistic / 2.0);
}

TestResult chi_square_gof(std::span<const std::uint64_t> observed,
                          std::span<const double> probabilities) {
    if (observed.size() != probabilities.size() || observed.empty()) {
        throw ValidationError("chi-square needs matching non-empty cells");
    }
    const double total = static_cast<double>(
        std::accumulate(observed.begin(), observed.end(), std::uint64_t{0}));
    std::vector<std::pair<double, double>> groups; // (observed, expected)
    double obs = 0.0;
    double exp = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        obs += static_cast<double>(observed[i]);
        exp += probabilities[i] * total;
        if (exp >= 5.0) {
            groups.emplace_back(obs, exp);
            obs = 0.0;
            exp = 0.0;
        }
    }
    if (exp > 0.0 || obs > 0.0) {
        if (groups.empty()) {
            groups.emplace_back(obs, exp);
        } else {
            groups.back().first += obs;
            groups.back().second += exp;
        }
    }
    if (groups.size() < 2) {
        return {0.0, 1.0, 0.0};
    }
    double stat = 0.0;
    for (const auto &[o, e] : groups) {
        stat += (o - e) * (o - e) / e;
    }
    const double dof = static_cast<double>(groups.size() - 1);
    return {stat, chi_square_survival(stat, dof), dof};
}

TestResult chi_square_two_sample(std::span<const std::uint64_t> a,
                                 std::span<const std::uint64_t> b) {
    if (a.size() != b.size() || a.empty()) {
        throw ValidationError("chi-square needs matching non-empty bins");
    }
    const double na = static_cast<double>(
        std::accumulate(a.begin(), a.end(), std::uint64_t{0}));
    const double nb = static_cast<double>(
        std::accumulate(b.begin(), b.end(), std::uint64_t{0}));
    if (na == 0.0 || nb == 0.0) {
        throw ValidationError("chi-square needs non-empty histograms");
    }
    const double ra = std::sqrt(nb / na);
    const double rb = std::sqrt(na / nb);
    double stat = 0.0;
    std::size_t used = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double ai = static_cast<double>(a[i]);
        const double bi = static_cast<double>(b[i]);
        if (ai + bi == 0.0) {
            continue;
        }
        ++used;
        const double diff = ra * ai - rb * bi;
        stat += diff * diff / (ai + bi);
    }
    if (used < 2) {
        return {0.0, 1.0, 0.0};
    }
    const double dof = static_cast<double>(used - 1);
    return {stat, chi_square_survival(stat, dof), dof};
}

} // namespace xebsim::stats
