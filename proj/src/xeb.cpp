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

#include "xebsim/xeb.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <exception>
#include <fstream>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>

#include "xebsim/errors.hpp"
#include "xebsim/ptheory.hpp"
#include "xebsim/stats.hpp"

namespace xebsim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_same_size(const ProbabilityTable &a, const ProbabilityTable &b) {
    if (a.size() != b.size()) {
        throw ValidationError("probability tables have different sizes");
    }
}

std::string default_circuit_id(const RngStream &rng) {
    return "circuit-" + std::to_string(rng.stream_id());
}

// Stream tags for the independent pieces of one experiment.
enum StreamTag : std::uint64_t { kInstance = 0, kDevice = 1, kSpoofer = 2 };

} // namespace

CrossEntropy cross_entropy_exact(const ProbabilityTable &p_a,
                                 const ProbabilityTable &p_ideal) {
    require_same_size(p_a, p_ideal);
    CrossEntropy out;
    const auto a = p_a.values();
    const auto p = p_ideal.values();
    for (std::size_t x = 0; x < a.size(); ++x) {
        if (a[x] == 0.0) {
            continue;
        }
        if (p[x] == 0.0) {
            out.zero_support.push_back(x);
            continue;
        }
        out.nats -= a[x] * std::log(p[x]);
    }
    if (!out.finite()) {
        out.nats = kInf;
    }
    return out;
}

CrossEntropy cross_entropy_sampled(const BitstringSample &sample,
                                   const ProbabilityTable &p_ideal) {
    if (sample.m() < 1) {
        throw ValidationError("cross entropy needs a non-empty sample");
    }
    const auto lp = log_pr(sample, p_ideal);
    CrossEntropy out;
    out.zero_support = lp.zero_probability;
    out.nats = lp.finite() ? -lp.nats / static_cast<double>(sample.m()) : kInf;
    return out;
}

double entropy(const ProbabilityTable &p) {
    return cross_entropy_exact(p, p).nats;
}

double delta_h(double h_cross, double dim) {
    return std::log(dim) + ptheory::kEulerGamma - h_cross;
}

// ---------------------------------------------------------------- experiments

ProbabilityTable sample_ideal_table(const ExperimentConfig &config,
                                    RngStream &rng,
                                    std::uint64_t *gate_count) {
    if (config.source == StateSource::HaarState) {
        if (gate_count) {
            *gate_count = 0;
        }
        return full_distribution(sample_haar_state(config.num_qubits, rng));
    }
    const int cycles =
        config.cycles > 0 ? config.cycles : default_cycles(config.num_qubits);
    const Circuit circuit =
        sample_random_circuit(config.num_qubits, cycles, config.gate_set, rng);
    if (gate_count) {
        *gate_count = circuit.gate_count();
    }
    return full_distribution(
        evolve(zero_state(config.num_qubits), circuit));
}

XebReport run_table_experiment(const ProbabilityTable &ideal,
                               const ExperimentConfig &config, RngStream &rng,
                               std::string circuit_id) {
    if (config.m < 1) {
        throw ValidationError("sample size must be at least 1");
    }
    const double dim = static_cast<double>(ideal.size());
    const ProbabilityTable device_table = spoofer_table(config.device, ideal);
    const ProbabilityTable spoof_table = spoofer_table(config.spoofer, ideal);

    RngStream device_rng = rng.split(kDevice);
    RngStream spoof_rng = rng.split(kSpoofer);
    BitstringSample s_device = draw_sample(device_table, config.m, device_rng);
    BitstringSample s_spoof = draw_sample(spoof_table, config.m, spoof_rng);

    XebReport r;
    r.circuit_id = circuit_id.empty() ? default_circuit_id(rng) : circuit_id;
    r.num_qubits = static_cast<int>(std::countr_zero(ideal.size()));
    r.m = config.m;
    r.device_id = sampler_label(config.device);
    r.spoofer_id = sampler_label(config.spoofer);

    r.log_pr_ideal = log_pr(s_device, ideal).nats;
    r.log_pr_spoof = log_pr(s_spoof, ideal).nats;
    r.log_ratio = r.log_pr_ideal - r.log_pr_spoof;

    r.h_cross = cross_entropy_sampled(s_spoof, ideal).nats;
    r.h_cross_exact = cross_entropy_exact(spoof_table, ideal).nats;
    r.delta_h = delta_h(r.h_cross, dim);
    r.delta_h_exact = delta_h(r.h_cross_exact, dim);
    return r;
}

XebReport run_circuit_experiment(const ExperimentConfig &config,
                                 RngStream &rng, std::string circuit_id) {
    RngStream instance_rng = rng.split(kInstance);
    std::uint64_t gates = 0;
    const ProbabilityTable ideal =
        sample_ideal_table(config, instance_rng, &gates);
    XebReport r = run_table_experiment(ideal, config, rng, std::move(circuit_id));
    r.gate_count = gates;
    return r;
}

EnsembleSummary summarize_reports(std::vector<XebReport> reports,
                                  double baseline_c) {
    std::vector<double> dh;
    std::vector<double> dh_exact;
    std::vector<double> ratio;
    for (const auto &r : reports) {
        dh.push_back(r.delta_h);
        dh_exact.push_back(r.delta_h_exact);
        ratio.push_back(r.log_ratio);
    }
    const auto a = stats::summarize(dh);
    const auto ae = stats::summarize(dh_exact);
    const auto lr = stats::summarize(ratio);

    EnsembleSummary s;
    s.num_circuits = reports.size();
    s.alpha = a.mean;
    s.alpha_stderr = a.std_error;
    s.alpha_exact = ae.mean;
    s.alpha_exact_stderr = ae.std_error;
    s.mean_log_ratio = lr.mean;
    s.mean_log_ratio_stderr = lr.std_error;
    s.baseline_c = baseline_c;
    s.within_bound = s.alpha <= 1.0 + 3.0 * s.alpha_stderr;
    s.supremacy = s.within_bound && s.alpha > baseline_c;
    s.reports = std::move(reports);
    return s;
}

EnsembleSummary run_ensemble(const EnsembleConfig &config) {
    if (config.num_circuits < 2) {
        throw ValidationError("an ensemble needs at least two circuits");
    }
    const std::size_t count = config.num_circuits;
    std::vector<std::optional<XebReport>> slots(count);
    std::vector<std::string> failures(count);

    const auto work = [&](std::size_t first, std::size_t step) {
        for (std::size_t i = first; i < count; i += step) {
            try {
                RngStream rng(config.seed, i);
                XebReport r = run_circuit_experiment(
                    config.experiment, rng, "circuit-" + std::to_string(i));
                if (!std::isfinite(r.log_ratio) || !std::isfinite(r.h_cross)) {
                    failures[i] = "circuit " + std::to_string(i) +
                                  " sampled a zero-probability bitstring";
                    continue;
                }
                slots[i] = std::move(r);
            } catch (const std::exception &e) {
                failures[i] = "circuit " + std::to_string(i) + ": " + e.what();
            }
        }
    };

    const std::size_t workers = static_cast<std::size_t>(
        std::clamp<long long>(config.workers, 1, static_cast<long long>(count)));
    if (workers == 1) {
        work(0, 1);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back(work, w, workers);
        }
    }

    std::vector<XebReport> reports;
    reports.reserve(count);
    std::string first_failure;
    for (std::size_t i = 0; i < count; ++i) {
        if (slots[i]) {
            reports.push_back(std::move(*slots[i]));
        } else if (first_failure.empty()) {
            first_failure = failures[i];
        }
    }
    if (!first_failure.empty()) {
        throw EnsembleError(first_failure, std::move(reports));
    }
    return summarize_reports(std::move(reports), config.baseline_c);
}

// ---------------------------------------------------------------- serialization

nlohmann::json to_json(const XebReport &r) {
    nlohmann::json j;
    j["circuit_id"] = r.circuit_id;
    j["n"] = r.num_qubits;
    j["m"] = r.m;
    j["gate_count"] = r.gate_count;
    j["device_id"] = r.device_id;
    j["spoofer_id"] = r.spoofer_id;
    j["h_cross"] = r.h_cross;
    j["h_cross_exact"] = r.h_cross_exact;
    j["delta_h"] = r.delta_h;
    j["delta_h_exact"] = r.delta_h_exact;
    j["log_pr_ideal"] = r.log_pr_ideal;
    j["log_pr_spoof"] = r.log_pr_spoof;
    j["log_ratio"] = r.log_ratio;
    return j;
}

XebReport report_from_json(const nlohmann::json &j) {
    XebReport r;
    r.circuit_id = j.at("circuit_id").get<std::string>();
    r.num_qubits = j.at("n").get<int>();
    r.m = j.at("m").get<std::size_t>();
    r.gate_count = j.at("gate_count").get<std::uint64_t>();
    r.device_id = j.at("device_id").get<std::string>();
    r.spoofer_id = j.at("spoofer_id").get<std::string>();
    r.h_cross = j.at("h_cross").get<double>();
    r.h_cross_exact = j.at("h_cross_exact").get<double>();
    r.delta_h = j.at("delta_h").get<double>();
    r.delta_h_exact = j.at("delta_h_exact").get<double>();
    r.log_pr_ideal = j.at("log_pr_ideal").get<double>();
    r.log_pr_spoof = j.at("log_pr_spoof").get<double>();
    r.log_ratio = j.at("log_ratio").get<double>();
    return r;
}

nlohmann::json to_json(const EnsembleSummary &s) {
    nlohmann::json j;
    j["num_circuits"] = s.num_circuits;
    j["alpha"] = s.alpha;
    j["alpha_stderr"] = s.alpha_stderr;
    j["alpha_exact"] = s.alpha_exact;
    j["alpha_exact_stderr"] = s.alpha_exact_stderr;
    j["mean_log_ratio"] = s.mean_log_ratio;
    j["mean_log_ratio_stderr"] = s.mean_log_ratio_stderr;
    j["baseline_c"] = s.baseline_c;
    j["within_bound"] = s.within_bound;
    j["supremacy"] = s.supremacy;
    return j;
}

void write_reports_csv(const std::filesystem::path &path,
                       const std::vector<XebReport> &reports) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string());
    }
    out.precision(12);
    out << "circuit_id,n,m,gate_count,device_id,spoofer_id,h_cross,"
           "h_cross_exact,delta_h,delta_h_exact,log_pr_ideal,log_pr_spoof,"
           "log_ratio\n";
    for (const auto &r : reports) {
        out << r.circuit_id << ',' << r.num_qubits << ',' << r.m << ','
            << r.gate_count << ',' << r.device_id << ',' << r.spoofer_id
            << ',' << r.h_cross << ',' << r.h_cross_exact << ','
            << r.delta_h << ',' << r.delta_h_exact << ',' << r.log_pr_ideal
            << ',' << r.log_pr_spoof << ',' << r.log_ratio << '\n';
    }
}

// ---------------------------------------------------------------- AEP

AepDiagnostic aep_diagnostic(const BitstringSample &sample,
                             const ProbabilityTable &p_ideal, double target,
                             double epsilon) {
    if (!(epsilon > 0.0)) {
        throw ValidationError("epsilon must be positive");
    }
    AepDiagnostic d;
    d.m = sample.m();
    d.epsilon = epsilon;
    const auto h = cross_entropy_sampled(sample, p_ideal);
    d.lhs = h.finite() ? std::abs(h.nats - target) : kInf;
    d.typical = d.lhs <= epsilon;
    return d;
}

double AepPoint::binomial_sigma() const noexcept {
    if (trials == 0) {
        return 0.0;
    }
    const double f = fraction();
    return std::sqrt(f * (1.0 - f) / static_cast<double>(trials));
}

std::vector<AepPoint> aep_typical_fraction(const AepExperimentConfig &config) {
    if (config.sample_sizes.empty() || config.trials < 1) {
        throw ValidationError("AEP experiment needs sample sizes and trials");
    }
    ExperimentConfig instance;
    instance.num_qubits = config.num_qubits;
    instance.source = config.source;

    std::vector<AepPoint> points;
    for (std::size_t m : config.sample_sizes) {
        points.push_back({m, config.trials, 0});
    }
    const double dim = std::ldexp(1.0, config.num_qubits);
    const auto pt = ptheory::constants(dim);
    for (std::size_t t = 0; t < config.trials; ++t) {
        RngStream rng(config.seed, t);
        RngStream instance_rng = rng.split(kInstance);
        const ProbabilityTable ideal = sample_ideal_table(instance, instance_rng);
        const ProbabilityTable drawn = spoofer_table(config.sampler, ideal);
        double target = 0.0;
        switch (config.target) {
        case AepTarget::EntropyFormula:
            target = pt.h_ideal;
            break;
        case AepTarget::CrossEntropyFormula:
            target = pt.h0;
            break;
        case AepTarget::CrossEntropyExact:
            target = cross_entropy_exact(drawn, ideal).nats;
            break;
        }
        const DiscreteSampler sampler(drawn);
        for (std::size_t k = 0; k < points.size(); ++k) {
            RngStream draw_rng = rng.split(kDevice + k);
            BitstringSample s;
            s.xs.reserve(points[k].m);
            for (std::size_t i = 0; i < points[k].m; ++i) {
                s.xs.push_back(sampler(draw_rng));
            }
            if (aep_diagnostic(s, ideal, target, config.epsilon).typical) {
                ++points[k].typical;
            }
        }
    }
    return points;
}

bool monotone_within_noise(const std::vector<AepPoint> &points,
                           double sigmas) {
    for (std::size_t k = 1; k < points.size(); ++k) {
        const double a = points[k - 1].binomial_sigma();
        const double b = points[k].binomial_sigma();
        const double slack = sigmas * std::sqrt(a * a + b * b);
        if (points[k].fraction() < points[k - 1].fraction() - slack) {
            return false;
        }
    }
    return true;
}

} // namespace xebsim
