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
 * Dense state-vector simulation of n-qubit circuits.
 *
 * Amplitudes are stored as a flat array indexed by the integer basis label,
 * with qubit 0 as the least-significant bit. Gates are applied in place by
 * strided kernels; the full 2^n x 2^n operator is never formed.
 */
#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "xebsim/probability_table.hpp"

namespace xebsim {

using Complex = std::complex<double>;

/// Largest register the simulator allocates (2^26 amplitudes, 1 GiB).
inline constexpr int kMaxQubits = 26;

enum class GateKind { H, P, T, X, CNOT, I, Custom };

[[nodiscard]] std::string_view gate_name(GateKind kind);

/**
 * One- or two-qubit gate with its unitary matrix (row-major).
 *
 * For two-qubit gates the local basis index is b(targets[0]) + 2 b(targets[1]),
 * so targets[0] is the less-significant local bit. CNOT uses
 * targets = {control, target}.
 */
class GateOp {
  public:
    static constexpr double kUnitarityTolerance = 1e-12;

    static GateOp h(int qubit);
    static GateOp p(int qubit);
    static GateOp t(int qubit);
    static GateOp x(int qubit);
    static GateOp identity(int qubit);
    static GateOp cnot(int control, int target);
    /// Single-qubit gate from a 2x2 row-major matrix. Throws ValidationError
    /// if the matrix is not unitary.
    static GateOp custom(int qubit, std::span<const Complex> matrix2x2);
    /// Two-qubit gate from a 4x4 row-major matrix.
    static GateOp custom(int q0, int q1, std::span<const Complex> matrix4x4);

    /// Single-qubit gate of a named kind (not CNOT or Custom).
    static GateOp single(GateKind kind, int qubit);

    [[nodiscard]] GateKind kind() const noexcept { return kind_; }
    [[nodiscard]] int arity() const noexcept { return arity_; }
    [[nodiscard]] std::span<const int> targets() const noexcept {
        return {targets_.data(), static_cast<std::size_t>(arity_)};
    }
    [[nodiscard]] std::span<const Complex> matrix() const noexcept {
        return matrix_;
    }

    friend bool operator==(const GateOp &, const GateOp &) = default;

  private:
    GateOp(GateKind kind, std::array<int, 2> targets, int arity,
           std::vector<Complex> matrix);

    GateKind kind_;
    std::array<int, 2> targets_;
    int arity_;
    std::vector<Complex> matrix_;
};

/// Ordered gate program on a fixed number of qubits.
class Circuit {
  public:
    explicit Circuit(int num_qubits);

    /// Appends a gate; throws IndexError if it touches a qubit >= n.
    Circuit &add(GateOp op);

    [[nodiscard]] int num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::size_t gate_count() const noexcept {
        return ops_.size();
    }
    [[nodiscard]] const std::vector<GateOp> &ops() const noexcept {
        return ops_;
    }

    /// Line format: header `n=<qubits>`, then one `GATE q0 [q1]` per line.
    [[nodiscard]] std::string to_text() const;
    static Circuit from_text(std::string_view text);

    friend bool operator==(const Circuit &, const Circuit &) = default;

  private:
    int num_qubits_;
    std::vector<GateOp> ops_;
};

class StateVector {
  public:
    static constexpr double kNormTolerance = 1e-10;

    /// |0...0> on n qubits. Throws CapacityError unless 1 <= n <= kMaxQubits.
    static StateVector zero(int num_qubits);
    /// Wraps explicit amplitudes; length must be a power of two >= 2.
    static StateVector from_amplitudes(std::vector<Complex> amps);

    [[nodiscard]] int num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::size_t dim() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] double norm_squared() const noexcept;

    /// Applies a gate in place. Throws IndexError for targets >= n.
    void apply(const GateOp &gate);

    /// |<x|psi>|^2. Throws IndexError for x >= 2^n.
    [[nodiscard]] double probability(BasisIndex x) const;

    friend bool operator==(const StateVector &,
                           const StateVector &) = default;

  private:
    StateVector(int num_qubits, std::vector<Complex> amps);

    void apply_single(const GateOp &gate);
    void apply_pair(const GateOp &gate);

    int num_qubits_;
    std::vector<Complex> amps_;
};

[[nodiscard]] StateVector zero_state(int num_qubits);
[[nodiscard]] StateVector apply_gate(StateVector state, const GateOp &gate);
/// Applies every gate of the circuit in order. Throws ValidationError on a
/// qubit-count mismatch.
[[nodiscard]] StateVector evolve(StateVector state, const Circuit &circuit);
[[nodiscard]] ProbabilityTable full_distribution(const StateVector &state);

} // namespace xebsim
