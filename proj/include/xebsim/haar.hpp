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
 * Haar-random states and unitaries, the U(1) toy sampler, and random
 * circuits drawn from a weighted gate alphabet.
 */
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "xebsim/rng.hpp"
#include "xebsim/statevector.hpp"

namespace xebsim {

using UnitaryMatrix = Eigen::MatrixXcd;

/// Largest dense unitary sample_haar_unitary will build.
inline constexpr std::size_t kMaxUnitaryDim = std::size_t{1} << 13;

/// Uniform phase on [0, 2pi): the Haar measure on U(1).
[[nodiscard]] double sample_u1(RngStream &rng);

/// Uniformly random pure state: 2N iid standard normals, normalized.
[[nodiscard]] StateVector sample_haar_state(int num_qubits, RngStream &rng);

struct HaarUnitaryOptions {
    /// Rescale Q's columns so that R has a real-positive diagonal. Turning
    /// this off is a test hook; the result is then not Haar distributed.
    bool phase_fix = true;
};

/// Haar-random dim x dim unitary from the QR factorization of a complex
/// Ginibre matrix. Throws CapacityError for dim > kMaxUnitaryDim.
[[nodiscard]] UnitaryMatrix
sample_haar_unitary(std::size_t dim, RngStream &rng,
                    HaarUnitaryOptions options = {});

/// U|0...0>, i.e. the first column of U as a state.
[[nodiscard]] StateVector first_column_state(const UnitaryMatrix &u);

/// Gate alphabet with selection weights.
class GateSetSpec {
  public:
    /// Uniform over {H, P, CNOT, T, I}.
    GateSetSpec();
    /// Throws ValidationError on a negative weight, a zero total, or a
    /// kind that is neither a named single-qubit gate nor CNOT.
    explicit GateSetSpec(std::vector<std::pair<GateKind, double>> weights);

    [[nodiscard]] const std::vector<std::pair<GateKind, double>> &
    weights() const noexcept {
        return weights_;
    }

    /// Draws a kind; with `single_only` CNOT is excluded.
    [[nodiscard]] GateKind draw(RngStream &rng, bool single_only) const;
    [[nodiscard]] bool has_single_qubit_gate() const noexcept;

  private:
    std::vector<std::pair<GateKind, double>> weights_;
};

/// Depth used when a caller does not specify one: 20 sweeps per qubit.
[[nodiscard]] int default_cycles(int num_qubits);

/**
 * Random circuit by repeated sweeps over the qubits.
 *
 * Each sweep walks i = 0..n-1 and draws a gate for qubit i. A CNOT acts on
 * (i, i+1) with i as control and advances past both. A CNOT drawn for the
 * last qubit is redrawn from the single-qubit gates.
 */
[[nodiscard]] Circuit sample_random_circuit(int num_qubits, int cycles,
                                            const GateSetSpec &spec,
                                            RngStream &rng);

} // namespace xebsim
