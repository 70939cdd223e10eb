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

#include "xebsim/ptheory.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "xebsim/errors.hpp"

namespace xebsim::ptheory {

namespace {

// Porter-Thomas mass beyond 50/N is below e^{-50}.
constexpr double kSupportScale = 50.0;

void require_dim(double dim, double min_dim) {
    if (!(dim >= min_dim) || !std::isfinite(dim)) {
        throw DomainError("dimension " + std::to_string(dim) +
                          " must be at least " + std::to_string(min_dim));
    }
}

} // namespace

double pt_pdf(double p, double dim) {
    if (p < 0.0 || std::isnan(p)) {
        throw DomainError("Porter-Thomas density needs p >= 0");
    }
    require_dim(dim, 1.0);
    return dim * std::exp(-dim * p);
}

double pt_cdf(double p, double dim) {
    if (p <= 0.0) {
        return 0.0;
    }
    return -std::expm1(-dim * p);
}

double exact_pdf(double p, double dim) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError("exact density needs p in [0, 1]");
    }
    require_dim(dim, 2.0);
    if (dim == 2.0) {
        return 1.0;
    }
    return (dim - 1.0) * std::pow(1.0 - p, dim - 2.0);
}

double exact_cdf(double p, double dim) {
    if (p <= 0.0) {
        return 0.0;
    }
    if (p >= 1.0) {
        return 1.0;
    }
    // 1 - (1-p)^{N-1} without cancellation for small p
    return -std::expm1((dim - 1.0) * std::log1p(-p));
}

double tail_mass(double dim) {
    require_dim(dim, 1.0);
    return std::exp(-dim);
}

double tail_mass_quadrature(double dim) {
    require_dim(dim, 1.0);
    using boost::math::quadrature::gauss_kronrod;
    const auto f = [dim](double p) { return dim * std::exp(-dim * p); };
    // GK's tolerance is relative to the L1 norm, which is what a value of
    // order e^{-N} needs.
    return gauss_kronrod<double, 31>::integrate(
        f, 1.0, 1.0 + kSupportScale / dim, 20, 1e-14);
}

PtConstants constants(double dim) {
    require_dim(dim, 2.0);
    PtConstants c;
    c.dim = dim;
    c.h0 = std::log(dim) + kEulerGamma;
    c.h_ideal = c.h0 - 1.0;
    c.expected_log_p = -c.h0;
    return c;
}

double integrate(const std::function<double(double)> &f, double a, double b,
                 double abs_tol) {
    boost::math::quadrature::tanh_sinh<double> integrator;
    double error = 0.0;
    double l1 = 0.0;
    const double scale = std::max(1.0, std::abs(b - a));
    const double rel_tol = std::min(1e-9, abs_tol / scale);
    return integrator.integrate(f, a, b, rel_tol, &error, &l1);
}

double pt_expectation(const std::function<double(double)> &f, double dim) {
    require_dim(dim, 1.0);
    const auto integrand = [&](double p) {
        return f(p) * dim * std::exp(-dim * p);
    };
    return integrate(integrand, 0.0, kSupportScale / dim);
}

PtConstants constants_quadrature(double dim) {
    require_dim(dim, 2.0);
    PtConstants c;
    c.dim = dim;
    c.expected_log_p =
        pt_expectation([](double p) { return std::log(p); }, dim);
    c.h0 = -c.expected_log_p;
    // H = -sum_x p log p = -N E[p log p]
    c.h_ideal = -dim * pt_expectation(
                           [](double p) { return p > 0.0 ? p * std::log(p) : 0.0; },
                           dim);
    return c;
}

// ---------------------------------------------------------------- histograms

Histogram empirical_histogram(std::span<const ProbabilityTable> tables,
                              std::size_t bins, std::optional<double> upper) {
    if (tables.empty()) {
        throw ValidationError("histogram needs at least one table");
    }
    if (bins < 10) {
        throw ValidationError("histogram needs at least 10 bins");
    }
    const std::size_t dim = tables.front().size();
    double max_p = 0.0;
    for (const auto &t : tables) {
        if (t.size() != dim) {
            throw ValidationError("histogram tables have mixed sizes");
        }
        for (double p : t.values()) {
            max_p = std::max(max_p, p);
        }
    }
    const double hi = upper.value_or(max_p);
    if (!(hi > 0.0)) {
        throw ValidationError("histogram range must be positive");
    }

    Histogram h;
    h.edges.resize(bins + 1);
    for (std::size_t i = 0; i <= bins; ++i) {
        h.edges[i] = hi * static_cast<double>(i) / static_cast<double>(bins);
    }
    h.counts.assign(bins, 0);
    const double width = hi / static_cast<double>(bins);
    for (const auto &t : tables) {
        for (double p : t.values()) {
            if (p > hi) {
                ++h.overflow;
                continue;
            }
            const auto bin = std::min(
                static_cast<std::size_t>(p / width), bins - 1);
            ++h.counts[bin];
            ++h.total;
        }
    }
    return h;
}

Histogram pt_histogram(std::span<const ProbabilityTable> tables) {
    if (tables.empty()) {
        throw ValidationError("histogram needs at least one table");
    }
    const double dim = static_cast<double>(tables.front().size());
    return empirical_histogram(tables, 50, 6.0 / dim);
}

double tv_distance(const Histogram &hist,
                   const std::function<double(double)> &cdf) {
    const double pooled = static_cast<double>(hist.pooled());
    if (pooled == 0.0) {
        throw ValidationError("empty histogram");
    }
    double acc = std::abs(cdf(hist.edges.front())); // mass below range
    for (std::size_t i = 0; i < hist.bins(); ++i) {
        const double model = cdf(hist.edges[i + 1]) - cdf(hist.edges[i]);
        const double emp = static_cast<double>(hist.counts[i]) / pooled;
        acc += std::abs(emp - model);
    }
    const double model_over = 1.0 - cdf(hist.edges.back());
    acc += std::abs(static_cast<double>(hist.overflow) / pooled - model_over);
    return 0.5 * acc;
}

double tv_distance_models(const std::vector<double> &edges,
                          const std::function<double(double)> &cdf_a,
                          const std::function<double(double)> &cdf_b) {
    double acc = std::abs(cdf_a(edges.front()) - cdf_b(edges.front()));
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        const double ma = cdf_a(edges[i + 1]) - cdf_a(edges[i]);
        const double mb = cdf_b(edges[i + 1]) - cdf_b(edges[i]);
        acc += std::abs(ma - mb);
    }
    acc += std::abs(cdf_a(edges.back()) - cdf_b(edges.back()));
    return 0.5 * acc;
}

void write_histogram_csv(const std::filesystem::path &path,
                         const Histogram &hist, double dim) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string());
    }
    out.precision(10);
    out << "bin_left,bin_right,count,empirical_density,pt_density,"
           "exact_density\n";
    const double pooled = static_cast<double>(hist.pooled());
    for (std::size_t i = 0; i < hist.bins(); ++i) {
        const double l = hist.edges[i];
        const double r = hist.edges[i + 1];
        const double w = r - l;
        out << l << ',' << r << ',' << hist.counts[i] << ','
            << static_cast<double>(hist.counts[i]) / (pooled * w) << ','
            << (pt_cdf(r, dim) - pt_cdf(l, dim)) / w << ','
            << (exact_cdf(r, dim) - exact_cdf(l, dim)) / w << '\n';
    }
}

// ---------------------------------------------------------------- sum identity

double apply_test_function(TestFunction f, double p) {
    switch (f) {
    case TestFunction::PLogP:
        return p > 0.0 ? p * std::log(p) : 0.0;
    case TestFunction::LogP:
        return p > 0.0 ? std::log(p)
                       : -std::numeric_limits<double>::infinity();
    case TestFunction::P:
        return p;
    case TestFunction::PSquared:
        return p * p;
    }
    return std::numeric_limits<double>::quiet_NaN();
}

SumIdentity sum_identity_check(const ProbabilityTable &table, TestFunction f) {
    SumIdentity out;
    const auto values = table.values();
    for (std::size_t x = 0; x < values.size(); ++x) {
        const double v = apply_test_function(f, values[x]);
        if (!std::isfinite(v)) {
            out.excluded.push_back(x);
            continue;
        }
        out.lhs += v;
    }
    const double dim = static_cast<double>(table.size());
    out.rhs = dim * pt_expectation(
                        [f](double p) { return apply_test_function(f, p); },
                        dim);
    return out;
}

} // namespace xebsim::ptheory
