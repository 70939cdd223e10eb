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


#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "xebsim/errors.hpp"
#include "xebsim/haar.hpp"
#include "xebsim/rng.hpp"
#include "xebsim/statevector.hpp"

using namespace xebsim;
using Catch::Matchers::WithinAbs;

namespace {

oracle::Matrix as_column(const StateVector &s) {
    oracle::Matrix v(static_cast<Eigen::Index>(s.dim()), 1);
    for (std::size_t i = 0; i < s.dim(); ++i)
        v(static_cast<Eigen::Index>(i), 0) = s.amplitudes()[i];
    return v;
}

std::vector<Complex> random_unitary_entries(std::size_t dim, RngStream &rng) {
    const UnitaryMatrix u = sample_haar_unitary(dim, rng);
    std::vector<Complex> out;
    for (Eigen::Index r = 0; r < u.rows(); ++r)
        for (Eigen::Index c = 0; c < u.cols(); ++c)
            out.push_back(u(r, c));
    return out;
}

double max_diff(const StateVector &s, const oracle::Matrix &v) {
    double worst = 0.0;
    for (std::size_t i = 0; i < s.dim(); ++i)
        worst = std::max(worst, std::abs(s.amplitudes()[i] -
                                         v(static_cast<Eigen::Index>(i), 0)));
    return worst;
}

} // namespace

TEST_CASE("zero state has a single unit amplitude") {
    for (int n : {1, 2, 20}) {
        const StateVector s = zero_state(n);
        REQUIRE(s.dim() == (std::size_t{1} << n));
        CHECK(s.amplitudes()[0] == Complex(1.0, 0.0));
        std::size_t nonzero = 0;
        for (const auto &a : s.amplitudes())
            nonzero += a != Complex(0.0, 0.0);
        CHECK(nonzero == 1);
    }
    CHECK_THROWS_AS(zero_state(0), CapacityError);
    CHECK_THROWS_AS(zero_state(kMaxQubits + 1), CapacityError);
}

TEST_CASE("Hadamard on one qubit gives equal amplitudes") {
    const StateVector s = apply_gate(zero_state(1), GateOp::h(0));
    const double r = 1.0 / std::sqrt(2.0);
    CHECK_THAT(s.amplitudes()[0].real(), WithinAbs(r, 1e-15));
    CHECK_THAT(s.amplitudes()[1].real(), WithinAbs(r, 1e-15));
}

TEST_CASE("X then H on both qubits is uniform over four outcomes") {
    Circuit c(2);
    c.add(GateOp::x(0)).add(GateOp::h(0)).add(GateOp::x(1)).add(GateOp::h(1));
    const StateVector s = evolve(zero_state(2), c);
    for (BasisIndex x = 0; x < 4; ++x)
        CHECK_THAT(s.probability(x), WithinAbs(0.25, 1e-12));
}

TEST_CASE("CNOT entangles a superposed control") {
    Circuit c(2);
    c.add(GateOp::h(0)).add(GateOp::cnot(0, 1));
    const StateVector s = evolve(zero_state(2), c);
    const ProbabilityTable p = full_distribution(s);
    CHECK_THAT(p[0], WithinAbs(0.5, 1e-12));
    CHECK_THAT(p[1], WithinAbs(0.0, 1e-12));
    CHECK_THAT(p[2], WithinAbs(0.0, 1e-12));
    CHECK_THAT(p[3], WithinAbs(0.5, 1e-12));
}

TEST_CASE("phase gates") {
    const double r = 1.0 / std::sqrt(2.0);
    const StateVector plus = apply_gate(zero_state(1), GateOp::h(0));
    const StateVector sp = apply_gate(plus, GateOp::p(0));
    CHECK(std::abs(sp.amplitudes()[1] - Complex(0.0, r)) < 1e-15);
    const StateVector st = apply_gate(plus, GateOp::t(0));
    const Complex w = std::polar(r, std::numbers::pi / 4);
    CHECK(std::abs(st.amplitudes()[1] - w) < 1e-15);
}

TEST_CASE("empty circuit and H H are the identity") {
    RngStream rng(3, 0);
    const StateVector psi = sample_haar_state(4, rng);
    CHECK(evolve(psi, Circuit(4)) == psi);
    Circuit hh(4);
    hh.add(GateOp::h(2)).add(GateOp::h(2));
    const StateVector out = evolve(psi, hh);
    for (std::size_t i = 0; i < psi.dim(); ++i)
        CHECK(std::abs(out.amplitudes()[i] - psi.amplitudes()[i]) < 1e-12);
}

TEST_CASE("gate application matches the tensor-product operator") {
    RngStream rng(11, 0);
    for (int n = 1; n <= 3; ++n) {
        std::vector<GateOp> gates;
        for (int q = 0; q < n; ++q) {
            for (auto kind : {GateKind::H, GateKind::P, GateKind::T,
                              GateKind::X, GateKind::I})
                gates.push_back(GateOp::single(kind, q));
            gates.push_back(GateOp::custom(q, random_unitary_entries(2, rng)));
        }
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                if (a == b)
                    continue;
                gates.push_back(GateOp::cnot(a, b));
                gates.push_back(
                    GateOp::custom(a, b, random_unitary_entries(4, rng)));
            }
        }
        for (const GateOp &g : gates) {
            const StateVector psi = sample_haar_state(n, rng);
            const StateVector out = apply_gate(psi, g);
            const oracle::Matrix expect =
                oracle::full_operator(g, n) * as_column(psi);
            INFO("n=" << n << " gate=" << gate_name(g.kind()));
            CHECK(max_diff(out, expect) < 1e-12);
        }
    }
}

TEST_CASE("CNOT target order follows control then target") {
    // |x1 x0> = |01>: control qubit 0 is set, so qubit 1 flips.
    StateVector s = apply_gate(zero_state(2), GateOp::x(0));
    s = apply_gate(s, GateOp::cnot(0, 1));
    CHECK_THAT(s.probability(3), WithinAbs(1.0, 1e-15));
    StateVector u = apply_gate(zero_state(2), GateOp::x(0));
    u = apply_gate(u, GateOp::cnot(1, 0));
    CHECK_THAT(u.probability(1), WithinAbs(1.0, 1e-15));
}

TEST_CASE("norm is preserved over long random circuits") {
    RngStream rng(5, 0);
    const GateSetSpec spec;
    const Circuit c500 = sample_random_circuit(10, 60, spec, rng);
    REQUIRE(c500.gate_count() >= 500);
    CHECK_THAT(evolve(zero_state(10), c500).norm_squared(),
               WithinAbs(1.0, 1e-10));

    Circuit long_circuit(8);
    RngStream g(6, 0);
    for (int i = 0; i < 10000; ++i) {
        const int q = static_cast<int>(g() % 8);
        if (i % 3 == 0) {
            long_circuit.add(GateOp::cnot(q, (q + 1) % 8));
        } else {
            long_circuit.add(GateOp::custom(q, random_unitary_entries(2, g)));
        }
    }
    const StateVector out = evolve(sample_haar_state(8, g), long_circuit);
    CHECK_THAT(out.norm_squared(), WithinAbs(1.0, 1e-8));
}

TEST_CASE("probability lookup and full distribution") {
    CHECK(zero_state(1).probability(0) == 1.0);
    CHECK_THROWS_AS(zero_state(1).probability(2), IndexError);
    const ProbabilityTable p = full_distribution(zero_state(3));
    CHECK(p.size() == 8);
    CHECK(p[0] == 1.0);
    CHECK_THAT(p.sum(), WithinAbs(1.0, 1e-15));
}

TEST_CASE("invalid gates and circuits are rejected") {
    CHECK_THROWS_AS(apply_gate(zero_state(2), GateOp::h(2)), IndexError);
    CHECK_THROWS_AS(Circuit(2).add(GateOp::cnot(0, 2)), IndexError);
    CHECK_THROWS_AS(GateOp::cnot(1, 1), ValidationError);
    const std::vector<Complex> bad{1.0, 1.0, 0.0, 1.0};
    CHECK_THROWS_AS(GateOp::custom(0, bad), ValidationError);
    CHECK_THROWS_AS(evolve(zero_state(3), Circuit(2)), ValidationError);
    CHECK_THROWS_AS(Circuit(0), CapacityError);
    CHECK_THROWS_AS(StateVector::from_amplitudes({1.0, 1.0}), ValidationError);
    CHECK_THROWS_AS(StateVector::from_amplitudes({1.0, 0.0, 0.0}),
                    ValidationError);
}

TEST_CASE("evolution is deterministic") {
    RngStream a(42, 1);
    RngStream b(42, 1);
    const Circuit ca = sample_random_circuit(9, 30, GateSetSpec{}, a);
    const Circuit cb = sample_random_circuit(9, 30, GateSetSpec{}, b);
    REQUIRE(ca == cb);
    CHECK(evolve(zero_state(9), ca) == evolve(zero_state(9), cb));
}

TEST_CASE("circuit text round-trips") {
    RngStream rng(8, 0);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + trial % 7;
        const Circuit c = sample_random_circuit(n, 5, GateSetSpec{}, rng);
        CHECK(Circuit::from_text(c.to_text()) == c);
    }
    CHECK_THROWS_AS(Circuit::from_text(""), ValidationError);
    CHECK_THROWS_AS(Circuit::from_text("n=2\nFOO 1\n"), ValidationError);
    CHECK_THROWS_AS(Circuit::from_text("n=2\nH 5\n"), IndexError);
}
