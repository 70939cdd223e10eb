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


// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "xebsim/commands.hpp"
#include "xebsim/haar.hpp"
#include "xebsim/ptheory.hpp"
#include "xebsim/stats.hpp"
#include "xebsim/xeb.hpp"

using namespace xebsim;

namespace {

struct Outcome {
    bool passed = false;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double time_limit_s;
    std::function<Outcome()> run;
};

std::string fmt(const char *format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

std::vector<ProbabilityTable> tables_from(StateSource source, int n, int cycles,
                                          std::size_t count,
                                          std::uint64_t seed) {
    ExperimentConfig e;
    e.num_qubits = n;
    e.cycles = cycles;
    e.source = source;
    std::vector<ProbabilityTable> out;
    for (std::size_t i = 0; i < count; ++i) {
        RngStream rng(seed, i);
        out.push_back(sample_ideal_table(e, rng));
    }
    return out;
}

Outcome histogram_check(const std::vector<ProbabilityTable> &tables) {
    const double dim = static_cast<double>(tables.front().size());
    const auto hist = ptheory::pt_histogram(tables);
    const double tv_pt = ptheory::tv_distance(
        hist, [dim](double p) { return ptheory::pt_cdf(p, dim); });
    const double tv_exact = ptheory::tv_distance(
        hist, [dim](double p) { return ptheory::exact_cdf(p, dim); });
    return {tv_pt < 0.05 && tv_exact < 0.05,
            fmt("TV(emp,PT)=%.4f TV(emp,exact)=%.4f (limit 0.05)", tv_pt,
                tv_exact)};
}

Outcome ac1() {
    return histogram_check(tables_from(StateSource::HaarState, 5, 0, 200, 101));
}

Outcome ac2() {
    return histogram_check(
        tables_from(StateSource::GateCircuit, 5, 40, 200, 102));
}

Outcome ac3() {
    bool ok = true;
    std::ostringstream d;
    for (const auto &row : cli::tail_table()) {
        const double rel =
            std::abs(row.quadrature - row.closed_form) / row.closed_form;
        if (row.dim <= 64 && rel >= 1e-10) {
            ok = false;
            d << fmt("N=%d closed-form rel %.1e; ", row.dim, rel);
        }
        if (row.dim <= 8) {
            const double dev =
                std::abs(row.quadrature - row.reference) / row.reference;
            ok = ok && dev < 0.01;
            d << fmt("N=%d J=%.4e ref %.3g dev %.2f%%; ", row.dim,
                     row.quadrature, row.reference, 100.0 * dev);
        }
    }
    d << "closed form within 1e-10 for N<=64 checked";
    return {ok, d.str()};
}

EnsembleConfig ensemble(StateSource source, std::size_t circuits,
                        std::size_t m, SamplerKind spoofer,
                        std::uint64_t seed) {
    EnsembleConfig cfg;
    cfg.experiment.num_qubits = 10;
    cfg.experiment.m = m;
    cfg.experiment.source = source;
    cfg.experiment.spoofer = std::move(spoofer);
    cfg.num_circuits = circuits;
    cfg.seed = seed;
    return cfg;
}

Outcome ac4() {
    const auto pt = ptheory::constants(1024.0);
    const auto mean_h = [](const EnsembleSummary &s) {
        std::vector<double> h;
        for (const auto &r : s.reports)
            h.push_back(r.h_cross);
        return stats::summarize(h);
    };
    const auto self = mean_h(run_ensemble(
        ensemble(StateSource::HaarState, 100, 10000, IdealSampler{}, 104)));
    const auto cross = mean_h(run_ensemble(
        ensemble(StateSource::HaarState, 100, 10000, UniformSampler{}, 104)));
    const double z_self = std::abs(self.mean - pt.h_ideal) / self.std_error;
    const double z_cross = std::abs(cross.mean - pt.h0) / cross.std_error;
    return {z_self <= 3.0 && z_cross <= 3.0,
            fmt("self %.4f vs %.4f (z=%.2f); uniform %.4f vs %.4f (z=%.2f)",
                self.mean, pt.h_ideal, z_self, cross.mean, pt.h0, z_cross)};
}

Outcome ac5() {
    const auto s = run_ensemble(
        ensemble(StateSource::GateCircuit, 50, 1000, UniformSampler{}, 105));
    const double dev = std::abs(s.mean_log_ratio - 1000.0) / 1000.0;
    return {dev < 0.05, fmt("mean log_ratio %.1f ± %.1f, deviation %.2f%%",
                            s.mean_log_ratio, s.mean_log_ratio_stderr,
                            100.0 * dev)};
}

Outcome ac6() {
    const auto uni = run_ensemble(
        ensemble(StateSource::GateCircuit, 50, 1000, UniformSampler{}, 106));
    const auto ide = run_ensemble(
        ensemble(StateSource::GateCircuit, 50, 1000, IdealSampler{}, 106));
    const bool uni_ok = std::abs(uni.alpha) <= 3.0 * uni.alpha_stderr;
    const bool ide_ok = std::abs(ide.alpha - 1.0) <= 3.0 * ide.alpha_stderr;

    // Mixture sweep from exact tables: 1000 Haar states at n = 14.
    constexpr int kQubits = 14;
    constexpr int kStates = 1000;
    const double dim = std::ldexp(1.0, kQubits);
    const double h0 = ptheory::constants(dim).h0;
    const std::vector<double> fs{0.0, 0.25, 0.5, 0.75, 1.0};
    std::vector<double> sums(fs.size(), 0.0);
    RngStream rng(106, 1);
    for (int i = 0; i < kStates; ++i) {
        const auto p = full_distribution(sample_haar_state(kQubits, rng));
        for (std::size_t k = 0; k < fs.size(); ++k) {
            const auto mix = spoofer_table(NoisyMixture{fs[k]}, p);
            sums[k] += h0 - cross_entropy_exact(mix, p).nats;
        }
    }
    bool sweep_ok = true;
    std::ostringstream d;
    d << fmt("uniform alpha %.4f ± %.4f; ideal alpha %.4f ± %.4f; dH(F):",
             uni.alpha, uni.alpha_stderr, ide.alpha, ide.alpha_stderr);
    for (std::size_t k = 0; k < fs.size(); ++k) {
        const double dh = sums[k] / kStates;
        sweep_ok = sweep_ok && std::abs(dh - fs[k]) < 1e-3;
        d << fmt(" %.2f->%.5f", fs[k], dh);
    }
    return {uni_ok && ide_ok && sweep_ok, d.str()};
}

Outcome ac7() {
    cli::RunConfig cfg;
    cfg.seed = 107;
    cfg.source = "haar";
    cfg.g = 500;
    cfg.m = 1000;
    cfg.circuits = 50;
    cfg.r_values = {0.0, std::log(2.0) / 500.0, 1.0 / 500.0, 5.0 / 500.0};
    bool ok = true;
    std::ostringstream d;
    for (const auto &row : cli::log_ratio_sweep(cfg)) {
        ok = ok && row.passed;
        d << fmt("r=%.5f mF=%.1f obs=%.1f±%.1f%s; ", row.r, row.predicted,
                 row.observed, row.observed_stderr,
                 row.checked ? (row.passed ? "" : " FAIL") : " (unchecked)");
    }
    return {ok, d.str()};
}

Outcome ac8() {
    AepExperimentConfig cfg;
    cfg.seed = 108;
    const auto self = aep_typical_fraction(cfg);
    cfg.sampler = UniformSampler{};
    cfg.target = AepTarget::CrossEntropyFormula;
    const auto cross = aep_typical_fraction(cfg);
    std::ostringstream d;
    for (const auto *pts : {&self, &cross}) {
        d << (pts == &self ? "self:" : " cross:");
        for (const auto &p : *pts)
            d << fmt(" %zu->%.3f", p.m, p.fraction());
    }
    return {monotone_within_noise(self) && monotone_within_noise(cross),
            d.str()};
}

Outcome ac9() {
    cli::RunConfig cfg;
    cfg.seed = 109;
    cfg.dims = {2, 8};
    bool ok = true;
    std::ostringstream d;
    for (const auto &c : cli::haar_suites(cfg)) {
        ok = ok && c.passed;
        if (!c.passed || c.name.starts_with("left_invariance"))
            d << c.name << (c.passed ? " p=" : " FAILED p=") << c.p_value
              << "; ";
    }
    d << (ok ? "all checks passed" : "");
    return {ok, d.str()};
}

Outcome ac10() {
    RngStream rng(110, 0);
    double worst = 0.0;
    for (int n = 1; n <= 3; ++n) {
        std::vector<GateOp> gates;
        for (int q = 0; q < n; ++q)
            for (auto k : {GateKind::H, GateKind::P, GateKind::T, GateKind::X,
                           GateKind::I})
                gates.push_back(GateOp::single(k, q));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (a != b)
                    gates.push_back(GateOp::cnot(a, b));
        for (const auto &g : gates) {
            const StateVector psi = sample_haar_state(n, rng);
            const StateVector out = apply_gate(psi, g);
            oracle::Matrix v(static_cast<Eigen::Index>(psi.dim()), 1);
            for (std::size_t i = 0; i < psi.dim(); ++i)
                v(static_cast<Eigen::Index>(i), 0) = psi.amplitudes()[i];
            const oracle::Matrix expect = oracle::full_operator(g, n) * v;
            for (std::size_t i = 0; i < psi.dim(); ++i)
                worst = std::max(worst,
                                 std::abs(out.amplitudes()[i] -
                                          expect(static_cast<Eigen::Index>(i), 0)));
        }
    }
    const double small_n = oracle::simpson(
        [](double p) { return p > 0 ? -2.0 * p * std::log(p) : 0.0; }, 0.0, 1.0);
    const double formula = ptheory::constants(2.0).h_ideal;
    const bool ok = worst < 1e-12 && std::abs(small_n - 0.5) < 1e-8 &&
                    std::abs(small_n - formula) > 0.1;
    return {ok, fmt("max gate error %.1e; N=2 entropy %.6f vs formula %.6f",
                    worst, small_n, formula)};
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "Porter-Thomas convergence, Haar states n=5", 10, ac1},
        {2, "Porter-Thomas convergence, gate circuits n=5", 30, ac2},
        {3, "tail-mass table", 1, ac3},
        {4, "entropy constants at n=10", 120, ac4},
        {5, "log ratio about m", 120, ac5},
        {6, "delta H endpoints and mixture sweep", 120, ac6},
        {7, "noisy log-ratio scaling", 300, ac7},
        {8, "typical-set fractions", 120, ac8},
        {9, "Haar property suite", 60, ac9},
        {10, "brute-force oracles", 10, ac10},
    };
    int failures = 0;
    for (const auto &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(
                                std::chrono::steady_clock::now() - start)
                                .count();
        const bool in_time = secs < c.time_limit_s;
        const bool passed = o.passed && in_time;
        failures += !passed;
        std::cout << "AC" << c.id << ' ' << (passed ? "PASS" : "FAIL") << ' '
                  << c.name << " [" << fmt("%.2fs/%.0fs", secs, c.time_limit_s)
                  << (in_time ? "" : " over time") << "] " << o.detail
                  << std::endl;
    }
    std::cout << (criteria.size() - failures) << '/' << criteria.size()
              << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
