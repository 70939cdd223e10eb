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

#include "xebsim/haar.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "xebsim/errors.hpp"

namespace xebsim {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double sample_u1(RngStream &rng) {
    double phi = kTwoPi * rng.uniform01();
    if (phi >= kTwoPi) {
        phi -= kTwoPi;
    }
    return phi;
}

StateVector sample_haar_state(int num_qubits, RngStream &rng) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw CapacityError("qubit count " + std::to_string(num_qubits) +
                            " outside [1, " + std::to_string(kMaxQubits) +
                            "]");
    }
    const std::size_t dim = std::size_t{1} << num_qubits;
    std::vector<Complex> amps(dim);
    double norm2 = 0.0;
    for (auto &a : amps) {
        const double re = rng.normal();
        const double im = rng.normal();
        a = {re, im};
        norm2 += re * re + im * im;
    }
    const double scale = 1.0 / std::sqrt(norm2);
    for (auto &a : amps) {
        a *= scale;
    }
    return StateVector::from_amplitudes(std::move(amps));
}

UnitaryMatrix sample_haar_unitary(std::size_t dim, RngStream &rng,
                                  HaarUnitaryOptions options) {
    if (dim < 1) {
        throw ValidationError("unitary dimension must be at least 1");
    }
    if (dim > kMaxUnitaryDim) {
        throw CapacityError("unitary dimension " + std::to_string(dim) +
                            " exceeds cap " + std::to_string(kMaxUnitaryDim));
    }
    const auto d = static_cast<Eigen::Index>(dim);
    UnitaryMatrix z(d, d);
    for (Eigen::Index j = 0; j < d; ++j) {
        for (Eigen::Index i = 0; i < d; ++i) {
            const double re = rng.normal();
            const double im = rng.normal();
            z(i, j) = Complex(re, im) * std::numbers::sqrt2 / 2.0;
        }
    }
    Eigen::HouseholderQR<UnitaryMatrix> qr(z);
    UnitaryMatrix q = qr.householderQ() * UnitaryMatrix::Identity(d, d);
    if (options.phase_fix) {
        const auto &r = qr.matrixQR();
        for (Eigen::Index k = 0; k < d; ++k) {
            const Complex rkk = r(k, k);
            const double mag = std::abs(rkk);
            // R_kk = 0 has probability zero for a Ginibre matrix.
            if (mag > 0.0) {
                q.col(k) *= rkk / mag;
            }
        }
    }
    return q;
}

StateVector first_column_state(const UnitaryMatrix &u) {
    std::vector<Complex> amps(static_cast<std::size_t>(u.rows()));
    for (Eigen::Index i = 0; i < u.rows(); ++i) {
        amps[static_cast<std::size_t>(i)] = u(i, 0);
    }
    return StateVector::from_amplitudes(std::move(amps));
}

// ---------------------------------------------------------------- GateSetSpec

GateSetSpec::GateSetSpec()
    : GateSetSpec({{GateKind::H, 1.0},
                   {GateKind::P, 1.0},
                   {GateKind::CNOT, 1.0},
                   {GateKind::T, 1.0},
                   {GateKind::I, 1.0}}) {}

GateSetSpec::GateSetSpec(std::vector<std::pair<GateKind, double>> weights)
    : weights_(std::move(weights)) {
    double total = 0.0;
    for (const auto &[kind, w] : weights_) {
        if (kind == GateKind::Custom) {
            throw ValidationError("gate alphabet cannot contain custom gates");
        }
        if (!(w >= 0.0) || !std::isfinite(w)) {
            throw ValidationError("gate weights must be finite and >= 0");
        }
        total += w;
    }
    if (!(total > 0.0)) {
        throw ValidationError("gate weights must have a positive sum");
    }
}

bool GateSetSpec::has_single_qubit_gate() const noexcept {
    for (const auto &[kind, w] : weights_) {
        if (kind != GateKind::CNOT && w > 0.0) {
            return true;
        }
    }
    return false;
}

GateKind GateSetSpec::draw(RngStream &rng, bool single_only) const {
    double total = 0.0;
    for (const auto &[kind, w] : weights_) {
        if (!(single_only && kind == GateKind::CNOT)) {
            total += w;
        }
    }
    if (!(total > 0.0)) {
        throw ValidationError("gate alphabet has no single-qubit gate");
    }
    const double u = rng.uniform01() * total;
    double acc = 0.0;
    GateKind last = weights_.front().first;
    for (const auto &[kind, w] : weights_) {
        if ((single_only && kind == GateKind::CNOT) || w <= 0.0) {
            continue;
        }
        acc += w;
        last = kind;
        if (u < acc) {
            return kind;
        }
    }
    return last;
}

int default_cycles(int num_qubits) { return 20 * num_qubits; }

Circuit sample_random_circuit(int num_qubits, int cycles,
                              const GateSetSpec &spec, RngStream &rng) {
    if (cycles < 1) {
        throw ValidationError("cycles must be at least 1");
    }
    Circuit circuit(num_qubits);
    for (int c = 0; c < cycles; ++c) {
        int i = 0;
        while (i < num_qubits) {
            GateKind kind = spec.draw(rng, false);
            if (kind == GateKind::CNOT && i == num_qubits - 1) {
                kind = spec.draw(rng, true);
            }
            if (kind == GateKind::CNOT) {
                circuit.add(GateOp::cnot(i, i + 1));
                i += 2;
            } else {
                circuit.add(GateOp::single(kind, i));
                i += 1;
            }
        }
    }
    return circuit;
}

} // namespace xebsim
