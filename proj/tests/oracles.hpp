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


// Reference implementations used as independent oracles by the tests.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "xebsim/statevector.hpp"

namespace oracle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

inline Matrix gate_matrix(const xebsim::GateOp &gate) {
    const auto m = gate.matrix();
    const int d = gate.arity() == 1 ? 2 : 4;
    Matrix u(d, d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
            u(r, c) = m[static_cast<std::size_t>(r * d + c)];
    return u;
}

inline Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
    return out;
}

// Full operator on n qubits. Qubit 0 is the least-significant bit, so it is
// the rightmost Kronecker factor.
inline Matrix full_operator(const xebsim::GateOp &gate, int n) {
    const Matrix u = gate_matrix(gate);
    const auto t = gate.targets();
    if (gate.arity() == 1) {
        Matrix out = Matrix::Identity(1, 1);
        for (int q = n - 1; q >= 0; --q)
            out = kron(out, q == t[0] ? u : Matrix::Identity(2, 2));
        return out;
    }
    const std::int64_t dim = std::int64_t{1} << n;
    Matrix out = Matrix::Zero(dim, dim);
    const auto bit = [](std::int64_t x, int q) { return (x >> q) & 1; };
    for (std::int64_t row = 0; row < dim; ++row) {
        for (std::int64_t col = 0; col < dim; ++col) {
            const std::int64_t mask = (std::int64_t{1} << t[0]) |
                                      (std::int64_t{1} << t[1]);
            if ((row & ~mask) != (col & ~mask))
                continue;
            const auto lr = bit(row, t[0]) + 2 * bit(row, t[1]);
            const auto lc = bit(col, t[0]) + 2 * bit(col, t[1]);
            out(row, col) = u(lr, lc);
        }
    }
    return out;
}

// Composite Simpson rule on [a, b] with an even number of panels.
inline double simpson(const std::function<double(double)> &f, double a,
                      double b, int panels = 200000) {
    if (panels % 2)
        ++panels;
    const double h = (b - a) / panels;
    double acc = f(a) + f(b);
    for (int i = 1; i < panels; ++i)
        acc += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

inline double mean(const std::vector<double> &v) {
    double s = 0.0;
    for (double x : v)
        s += x;
    return s / static_cast<double>(v.size());
}

inline double std_error(const std::vector<double> &v) {
    const double mu = mean(v);
    double ss = 0.0;
    for (double x : v)
        ss += (x - mu) * (x - mu);
    return std::sqrt(ss / static_cast<double>(v.size() - 1) /
                     static_cast<double>(v.size()));
}

} // namespace oracle
