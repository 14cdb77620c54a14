// Copyright 2026 The tlsynth Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * State-vector simulation of fully controlled gates.
 */
#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "synth.hpp"

namespace tlsynth {

/// Amplitude x belongs to basis state |x_{n-1} ... x_0>.
struct StateVector {
    int n = 1;
    std::vector<Complex> amps;

    static StateVector basis(int n, std::size_t index) {
        StateVector s{n, std::vector<Complex>(std::size_t{1} << n)};
        s.amps.at(index) = 1.0;
        return s;
    }

    [[nodiscard]] double norm() const {
        double sum = 0.0;
        for (const auto &a : amps) {
            sum += std::norm(a);
        }
        return std::sqrt(sum);
    }
};

/**
 * Applies g in place. With all n-1 other qubits controlled, exactly one
 * amplitude pair (i0, i1) differing in the target bit is affected.
 */
inline void apply_gate_inplace(StateVector &s, const ControlledGate &g) {
    if (s.n != g.n || s.amps.size() != (std::size_t{1} << s.n)) {
        throw std::invalid_argument("apply_gate: gate is for n=" +
                                    std::to_string(g.n) + ", state has n=" +
                                    std::to_string(s.n));
    }
    const std::uint64_t bit = std::uint64_t{1} << g.target;
    const std::size_t i0 = g.controls & ~bit;
    const std::size_t i1 = i0 | bit;
    const Complex a0 = s.amps[i0];
    const Complex a1 = s.amps[i1];
    if (g.is_x()) {
        s.amps[i0] = a1;
        s.amps[i1] = a0;
    } else {
        s.amps[i0] = g.op.a * a0 + g.op.b * a1;
        s.amps[i1] = g.op.c * a0 + g.op.d * a1;
    }
}

[[nodiscard]] inline StateVector apply_gate(StateVector s,
                                            const ControlledGate &g) {
    apply_gate_inplace(s, g);
    return s;
}

/// Column x is the circuit applied to |x>.
[[nodiscard]] inline Matrix circuit_to_matrix(const Circuit &c) {
    const std::size_t dim = std::size_t{1} << c.n;
    Matrix out(dim);
    for (std::size_t x = 0; x < dim; ++x) {
        StateVector s = StateVector::basis(c.n, x);
        for (const auto &g : c.gates) {
            apply_gate_inplace(s, g);
        }
        for (std::size_t i = 0; i < dim; ++i) {
            out(i, x) = s.amps[i];
        }
    }
    return out;
}

struct VerificationReport {
    bool pass = false;
    double frobenius = 0.0;
    double maxdev = 0.0;
    std::size_t gates = 0;
};

inline std::ostream &operator<<(std::ostream &os,
                                const VerificationReport &r) {
    return os << "pass=" << (r.pass ? "true" : "false")
              << " frobenius=" << format_double(r.frobenius)
              << " maxdev=" << format_double(r.maxdev) << " gates=" << r.gates;
}

[[nodiscard]] inline std::string to_string(const VerificationReport &r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

[[nodiscard]] inline VerificationReport
verify(const Matrix &u, const Circuit &c, double tol = kReconstructTol) {
    if (u.dim() != (std::size_t{1} << c.n)) {
        throw std::invalid_argument("verify: matrix dimension " +
                                    std::to_string(u.dim()) +
                                    " does not match circuit n=" +
                                    std::to_string(c.n));
    }
    const Matrix built = circuit_to_matrix(c);
    VerificationReport r;
    r.frobenius = frobenius_distance(u, built);
    r.maxdev = max_deviation(u, built);
    r.pass = r.frobenius < tol;
    r.gates = c.gates.size();
    return r;
}

} // namespace tlsynth
