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

#include "xebsim/statevector.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <bit>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include "xebsim/errors.hpp"

namespace xebsim {

namespace {

constexpr Complex kI{0.0, 1.0};

std::vector<Complex> single_matrix(GateKind kind) {
    const double r = std::numbers::sqrt2 / 2.0;
    switch (kind) {
    case GateKind::H:
        return {r, r, r, -r};
    case GateKind::P:
        return {1.0, 0.0, 0.0, kI};
    case GateKind::T:
        return {1.0, 0.0, 0.0, std::polar(1.0, std::numbers::pi / 4.0)};
    case GateKind::X:
        return {0.0, 1.0, 1.0, 0.0};
    case GateKind::I:
        return {1.0, 0.0, 0.0, 1.0};
    default:
        throw ValidationError("not a named single-qubit gate");
    }
}

// max |(M^dagger M - I)_ij|
double unitarity_defect(std::span<const Complex> m, std::size_t d) {
    double worst = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            Complex acc = 0.0;
            for (std::size_t k = 0; k < d; ++k) {
                acc += std::conj(m[k * d + i]) * m[k * d + j];
            }
            if (i == j) {
                acc -= 1.0;
            }
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst;
}

void check_qubit(int q) {
    if (q < 0) {
        throw IndexError("negative qubit index " + std::to_string(q));
    }
}

// Spreads the bits of k to leave a zero at position `bit`.
inline std::size_t insert_zero(std::size_t k, int bit) {
    const std::size_t low = k & ((std::size_t{1} << bit) - 1);
    return ((k >> bit) << (bit + 1)) | low;
}

std::optional<GateKind> parse_kind(std::string_view name) {
    for (auto kind : {GateKind::H, GateKind::P, GateKind::T, GateKind::X,
                      GateKind::CNOT, GateKind::I}) {
        if (gate_name(kind) == name) {
            return kind;
        }
    }
    return std::nullopt;
}

int parse_int(std::string_view token, std::size_t line_no) {
    int value = 0;
    const auto *end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ValidationError("circuit text line " + std::to_string(line_no) +
                              ": bad integer '" + std::string(token) + "'");
    }
    return value;
}

} // namespace

std::string_view gate_name(GateKind kind) {
    switch (kind) {
    case GateKind::H:
        return "H";
    case GateKind::P:
        return "P";
    case GateKind::T:
        return "T";
    case GateKind::X:
        return "X";
    case GateKind::CNOT:
        return "CNOT";
    case GateKind::I:
        return "I";
    case GateKind::Custom:
        return "U";
    }
    return "?";
}

// ---------------------------------------------------------------- GateOp

GateOp::GateOp(GateKind kind, std::array<int, 2> targets, int arity,
               std::vector<Complex> matrix)
    : kind_(kind), targets_(targets), arity_(arity),
      matrix_(std::move(matrix)) {}

GateOp GateOp::single(GateKind kind, int qubit) {
    check_qubit(qubit);
    return GateOp(kind, {qubit, -1}, 1, single_matrix(kind));
}

GateOp GateOp::h(int qubit) { return single(GateKind::H, qubit); }
GateOp GateOp::p(int qubit) { return single(GateKind::P, qubit); }
GateOp GateOp::t(int qubit) { return single(GateKind::T, qubit); }
GateOp GateOp::x(int qubit) { return single(GateKind::X, qubit); }
GateOp GateOp::identity(int qubit) { return single(GateKind::I, qubit); }

GateOp GateOp::cnot(int control, int target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) {
        throw ValidationError("CNOT control and target must differ");
    }
    // local index = b(control) + 2 b(target)
    std::vector<Complex> m(16, 0.0);
    m[0 * 4 + 0] = 1.0;
    m[1 * 4 + 3] = 1.0;
    m[2 * 4 + 2] = 1.0;
    m[3 * 4 + 1] = 1.0;
    return GateOp(GateKind::CNOT, {control, target}, 2, std::move(m));
}

GateOp GateOp::custom(int qubit, std::span<const Complex> matrix2x2) {
    check_qubit(qubit);
    if (matrix2x2.size() != 4) {
        throw ValidationError("single-qubit matrix needs 4 entries");
    }
    if (unitarity_defect(matrix2x2, 2) >= kUnitarityTolerance) {
        throw ValidationError("gate matrix is not unitary");
    }
    return GateOp(GateKind::Custom, {qubit, -1}, 1,
                  {matrix2x2.begin(), matrix2x2.end()});
}

GateOp GateOp::custom(int q0, int q1, std::span<const Complex> matrix4x4) {
    check_qubit(q0);
    check_qubit(q1);
    if (q0 == q1) {
        throw ValidationError("two-qubit gate targets must differ");
    }
    if (matrix4x4.size() != 16) {
        throw ValidationError("two-qubit matrix needs 16 entries");
    }
    if (unitarity_defect(matrix4x4, 4) >= kUnitarityTolerance) {
        throw ValidationError("gate matrix is not unitary");
    }
    return GateOp(GateKind::Custom, {q0, q1}, 2,
                  {matrix4x4.begin(), matrix4x4.end()});
}

// ---------------------------------------------------------------- Circuit

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw CapacityError("circuit qubit count " +
                            std::to_string(num_qubits) + " outside [1, " +
                            std::to_string(kMaxQubits) + "]");
    }
}

Circuit &Circuit::add(GateOp op) {
    for (int q : op.targets()) {
        if (q >= num_qubits_) {
            throw IndexError("gate targets qubit " + std::to_string(q) +
                             " on a " + std::to_string(num_qubits_) +
                             "-qubit circuit");
        }
    }
    ops_.push_back(std::move(op));
    return *this;
}

std::string Circuit::to_text() const {
    std::string out = "n=" + std::to_string(num_qubits_) + "\n";
    for (const auto &op : ops_) {
        if (op.kind() == GateKind::Custom) {
            throw ValidationError(
                "custom unitaries have no text serialization");
        }
        out += gate_name(op.kind());
        for (int q : op.targets()) {
            out += ' ';
            out += std::to_string(q);
        }
        out += '\n';
    }
    return out;
}

Circuit Circuit::from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    std::optional<Circuit> circuit;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        for (std::string tok; fields >> tok;) {
            tokens.push_back(tok);
        }
        if (tokens.empty()) {
            continue;
        }
        if (!circuit) {
            if (tokens.size() != 1 || !tokens[0].starts_with("n=")) {
                throw ValidationError("circuit text must start with n=<qubits>");
            }
            circuit.emplace(
                parse_int(std::string_view(tokens[0]).substr(2), line_no));
            continue;
        }
        const auto kind = parse_kind(tokens[0]);
        if (!kind) {
            throw ValidationError("circuit text line " +
                                  std::to_string(line_no) +
                                  ": unknown gate '" + tokens[0] + "'");
        }
        const std::size_t want = *kind == GateKind::CNOT ? 3 : 2;
        if (tokens.size() != want) {
            throw ValidationError("circuit text line " +
                                  std::to_string(line_no) +
                                  ": wrong number of qubit operands");
        }
        if (*kind == GateKind::CNOT) {
            circuit->add(GateOp::cnot(parse_int(tokens[1], line_no),
                                      parse_int(tokens[2], line_no)));
        } else {
            circuit->add(GateOp::single(*kind, parse_int(tokens[1], line_no)));
        }
    }
    if (!circuit) {
        throw ValidationError("circuit text is empty");
    }
    return std::move(*circuit);
}

// ---------------------------------------------------------------- StateVector

StateVector::StateVector(int num_qubits, std::vector<Complex> amps)
    : num_qubits_(num_qubits), amps_(std::move(amps)) {}

StateVector StateVector::zero(int num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw CapacityError("qubit count " + std::to_string(num_qubits) +
                            " outside [1, " + std::to_string(kMaxQubits) +
                            "]");
    }
    std::vector<Complex> amps(std::size_t{1} << num_qubits, 0.0);
    amps[0] = 1.0;
    return StateVector(num_qubits, std::move(amps));
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amps) {
    const std::size_t dim = amps.size();
    if (dim < 2 || (dim & (dim - 1)) != 0) {
        throw ValidationError("amplitude count must be a power of two >= 2");
    }
    const int n = std::countr_zero(dim);
    if (n > kMaxQubits) {
        throw CapacityError("amplitude vector too large");
    }
    StateVector state(n, std::move(amps));
    if (std::abs(state.norm_squared() - 1.0) > kNormTolerance) {
        throw ValidationError("amplitudes are not normalized");
    }
    return state;
}

double StateVector::norm_squared() const noexcept {
    double acc = 0.0;
    for (const auto &a : amps_) {
        acc += std::norm(a);
    }
    return acc;
}

double StateVector::probability(BasisIndex x) const {
    if (x >= amps_.size()) {
        throw IndexError("basis index " + std::to_string(x) +
                         " out of range for " + std::to_string(num_qubits_) +
                         " qubits");
    }
    return std::norm(amps_[x]);
}

void StateVector::apply(const GateOp &gate) {
    for (int q : gate.targets()) {
        if (q < 0 || q >= num_qubits_) {
            throw IndexError("gate targets qubit " + std::to_string(q) +
                             " on a " + std::to_string(num_qubits_) +
                             "-qubit state");
        }
    }
    if (gate.arity() == 1) {
        apply_single(gate);
    } else {
        apply_pair(gate);
    }
}

void StateVector::apply_single(const GateOp &gate) {
    const int q = gate.targets()[0];
    const std::size_t stride = std::size_t{1} << q;
    const std::size_t dim = amps_.size();
    Complex *a = amps_.data();

    switch (gate.kind()) {
    case GateKind::I:
        return;
    case GateKind::X:
        for (std::size_t base = 0; base < dim; base += 2 * stride) {
            for (std::size_t i = base; i < base + stride; ++i) {
                std::swap(a[i], a[i + stride]);
            }
        }
        return;
    case GateKind::P:
    case GateKind::T: {
        const Complex phase = gate.matrix()[3];
        for (std::size_t base = stride; base < dim; base += 2 * stride) {
            for (std::size_t i = base; i < base + stride; ++i) {
                a[i] *= phase;
            }
        }
        return;
    }
    default:
        break;
    }

    const auto m = gate.matrix();
    const Complex m00 = m[0], m01 = m[1], m10 = m[2], m11 = m[3];
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            const Complex v0 = a[i];
            const Complex v1 = a[i + stride];
            a[i] = m00 * v0 + m01 * v1;
            a[i + stride] = m10 * v0 + m11 * v1;
        }
    }
}

void StateVector::apply_pair(const GateOp &gate) {
    const int q0 = gate.targets()[0];
    const int q1 = gate.targets()[1];
    const int lo = std::min(q0, q1);
    const int hi = std::max(q0, q1);
    const std::size_t b0 = std::size_t{1} << q0;
    const std::size_t b1 = std::size_t{1} << q1;
    const std::size_t quarter = amps_.size() >> 2;
    Complex *a = amps_.data();

    if (gate.kind() == GateKind::CNOT) {
        for (std::size_t k = 0; k < quarter; ++k) {
            const std::size_t i00 = insert_zero(insert_zero(k, lo), hi);
            std::swap(a[i00 | b0], a[i00 | b0 | b1]);
        }
        return;
    }

    const auto m = gate.matrix();
    for (std::size_t k = 0; k < quarter; ++k) {
        const std::size_t i00 = insert_zero(insert_zero(k, lo), hi);
        const std::array<std::size_t, 4> idx{i00, i00 | b0, i00 | b1,
                                             i00 | b0 | b1};
        const std::array<Complex, 4> v{a[idx[0]], a[idx[1]], a[idx[2]],
                                       a[idx[3]]};
        for (std::size_t r = 0; r < 4; ++r) {
            a[idx[r]] = m[r * 4 + 0] * v[0] + m[r * 4 + 1] * v[1] +
                        m[r * 4 + 2] * v[2] + m[r * 4 + 3] * v[3];
        }
    }
}

// ---------------------------------------------------------------- free functions

StateVector zero_state(int num_qubits) { return StateVector::zero(num_qubits); }

StateVector apply_gate(StateVector state, const GateOp &gate) {
    state.apply(gate);
    return state;
}

StateVector evolve(StateVector state, const Circuit &circuit) {
    if (circuit.num_qubits() != state.num_qubits()) {
        throw ValidationError("circuit has " +
                              std::to_string(circuit.num_qubits()) +
                              " qubits but state has " +
                              std::to_string(state.num_qubits()));
    }
    for (const auto &op : circuit.ops()) {
        state.apply(op);
    }
    return state;
}

ProbabilityTable full_distribution(const StateVector &state) {
    std::vector<double> p(state.dim());
    const auto amps = state.amplitudes();
    std::transform(amps.begin(), amps.end(), p.begin(),
                   [](const Complex &a) { return std::norm(a); });
    return ProbabilityTable(std::move(p));
}

} // namespace xebsim
