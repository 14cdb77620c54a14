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
#include <gtest/gtest.h>

#include <numeric>

#include "test_util.hpp"
#include "tlsynth/optimize.hpp"
#include "tlsynth/palindrome.hpp"
#include "tlsynth/sim.hpp"

using namespace tlsynth;
using tlsynth::testing::column_subcircuits;
using tlsynth::testing::peephole_fixed_point;

namespace {

TEST(Optimize, CancelPassPair) {
    const ControlledGate xa = ControlledGate::x(2, 0, 0b10);
    EXPECT_TRUE(cancel_pass(Circuit{2, {xa, xa}}).gates.empty());
    const ControlledGate xb = ControlledGate::x(2, 0, 0b00);
    EXPECT_EQ(cancel_pass(Circuit{2, {xa, xb}}).gates.size(), 2U);
}

TEST(Optimize, CancelPassKeepsUnitaryGates) {
    const ComponentMatrix x = ComponentMatrix::pauli_x();
    const ControlledGate u = ControlledGate::unitary(2, 0, 0, x);
    EXPECT_EQ(cancel_pass(Circuit{2, {u, u}}).gates.size(), 2U);
    const ControlledGate xg = ControlledGate::x(2, 1, 0);
    EXPECT_EQ(cancel_pass(Circuit{2, {xg, u, xg}}).gates.size(), 3U);
}

// The shared-prefix example ABCA1CBA followed by ABA2BA, with A, B, C
// realised as distinct X gates.
TEST(Optimize, CancelPassSharedPrefixExample) {
    const int n = 4;
    const ControlledGate a = ControlledGate::x(n, 0, 0);
    const ControlledGate b = ControlledGate::x(n, 1, 0);
    const ControlledGate c = ControlledGate::x(n, 2, 0);
    const ControlledGate a1 = ControlledGate::unitary(n, 3, 0, {});
    const ControlledGate a2 = ControlledGate::unitary(n, 3, 1, {});
    const Circuit in{n, {a, b, c, a1, c, b, a, a, b, a2, b, a}};
    ASSERT_EQ(in.gates.size(), 12U);
    const Circuit out = cancel_pass(in);
    EXPECT_EQ(out.gates,
              (std::vector<ControlledGate>{a, b, c, a1, c, a2, b, a}));
}

TEST(Optimize, CancelPassCascades) {
    const ControlledGate a = ControlledGate::x(3, 0, 0);
    const ControlledGate b = ControlledGate::x(3, 1, 0);
    const ControlledGate c = ControlledGate::x(3, 2, 0);
    EXPECT_TRUE(cancel_pass(Circuit{3, {a, b, c, c, b, a}}).gates.empty());
}

TEST(Optimize, ConventionalThreeQubitCircuit) {
    const Decomposition d =
        two_level_decompose(random_unitary(3, 12), conventional_order(3));
    const Circuit raw = construct_circuit(d);
    EXPECT_EQ(raw.gates.size(), 68U);
    EXPECT_EQ(cancel_pass(raw).gates.size(), 62U);
}

TEST(Optimize, StackScanEqualsPeepholeFixedPoint) {
    for (int n = 2; n <= 5; ++n) {
        for (const OrderArray &o : {conventional_order(n), poa_order(n)}) {
            const Circuit raw = assemble(n, placeholder_subcircuits(o));
            EXPECT_EQ(cancel_pass(raw), peephole_fixed_point(raw)) << n;
        }
    }
}

TEST(Optimize, CountStructuralExamples) {
    EXPECT_EQ(count_structural(conventional_order(3), false), 68U);
    EXPECT_EQ(count_structural(poa_order(3), true), 50U);
    EXPECT_EQ(count_structural(poa_order(2), true), 8U);
}

TEST(Optimize, FormulaExamples) {
    EXPECT_EQ(formula_conventional(3), 68);
    EXPECT_EQ(formula_conventional(2), 10);
    EXPECT_EQ(formula_conventional(7), 49216);
    EXPECT_EQ(formula_conventional_cancel(3), 62);
    EXPECT_EQ(formula_conventional_cancel(5), 2034);
    EXPECT_EQ(formula_conventional_cancel(2), 8);
    EXPECT_EQ(formula_poa(3), 50);
    EXPECT_EQ(formula_poa(6), 4558);
    EXPECT_EQ(formula_poa(2), 8);
    EXPECT_THROW((void)formula_poa(1), std::invalid_argument);
    EXPECT_THROW((void)formula_conventional(0), std::invalid_argument);
}

TEST(Optimize, RecurrenceExamples) {
    EXPECT_EQ(poa_recurrence(2), 8);
    EXPECT_EQ(poa_recurrence(3), 4 * (8 + 2) + 5 * 3 + 1 - 2 * 3);
    EXPECT_EQ(poa_recurrence(7), 18670);
    for (int n = 2; n <= 30; ++n) {
        EXPECT_EQ(poa_recurrence(n), formula_poa(n)) << n;
    }
}

TEST(Optimize, ConventionalFormulaMatchesBinomialSum) {
    // sum over Gray lengths j of 2^(n-1) C(n, j) (2j - 1)
    for (int n = 1; n <= 20; ++n) {
        std::int64_t sum = 0;
        std::int64_t binom = 1;
        for (int j = 1; j <= n; ++j) {
            binom = binom * (n - j + 1) / j;
            sum += (std::int64_t{1} << (n - 1)) * binom * (2 * j - 1);
        }
        EXPECT_EQ(sum, formula_conventional(n)) << n;
    }
}

TEST(Optimize, StructuralCountsMatchFormulas) {
    for (int n = 2; n <= 7; ++n) {
        const OrderArray conv = conventional_order(n);
        const OrderArray poa = poa_order(n);
        EXPECT_EQ(static_cast<std::int64_t>(count_structural(conv, false)),
                  formula_conventional(n));
        EXPECT_EQ(static_cast<std::int64_t>(count_structural(conv, true)),
                  formula_conventional_cancel(n));
        EXPECT_EQ(static_cast<std::int64_t>(count_structural(poa, true)),
                  formula_poa(n));
        EXPECT_EQ(static_cast<std::int64_t>(count_structural(poa, false)),
                  formula_conventional(n));
    }
}

TEST(Optimize, ColumnCountsExamples) {
    EXPECT_EQ(column_counts(2), (std::vector<std::int64_t>{5, 4, 1}));
    EXPECT_EQ(column_counts(3),
              (std::vector<std::int64_t>{13, 12, 11, 10, 5, 4, 1}));
    for (int n = 2; n <= 8; ++n) {
        EXPECT_EQ(column_counts(n).back(), 1);
    }
}

TEST(Optimize, ColumnCountsMatchStructuralAndTotal) {
    for (int n = 2; n <= 7; ++n) {
        const auto recurrence = column_counts(n);
        const auto measured = column_gate_counts(poa_order(n));
        ASSERT_EQ(recurrence.size(), measured.size());
        for (std::size_t c = 0; c < measured.size(); ++c) {
            EXPECT_EQ(recurrence[c], static_cast<std::int64_t>(measured[c]))
                << "n=" << n << " c=" << c;
        }
        const std::int64_t sum =
            std::accumulate(recurrence.begin(), recurrence.end(), std::int64_t{0});
        const std::int64_t half = std::int64_t{1} << (n - 1);
        EXPECT_EQ(sum - 2 * (half - 1), formula_poa(n));
    }
}

TEST(Optimize, InterColumnCancellations) {
    for (int n = 2; n <= 6; ++n) {
        const std::size_t expected = 2 * ((std::size_t{1} << (n - 1)) - 1);
        EXPECT_EQ(inter_column_cancellations(conventional_order(n)), expected);
        EXPECT_EQ(inter_column_cancellations(poa_order(n)), expected);
    }
}

TEST(Optimize, ParityMismatchMeansNoOverlap) {
    for (int n = 3; n <= 5; ++n) {
        for (const OrderArray &o : {conventional_order(n), poa_order(n)}) {
            for (std::size_t c = 0; c < o.columns.size(); ++c) {
                const auto subs = column_subcircuits(n, c, o.columns[c]);
                for (std::size_t i = 0; i + 1 < subs.size(); ++i) {
                    if (subs[i].row % 2 != subs[i + 1].row % 2) {
                        EXPECT_EQ(overlap(subs[i], subs[i + 1]), 0U);
                    }
                }
            }
        }
    }
}

TEST(Optimize, TableRows) {
    EXPECT_EQ(table_row_formula(2), (GateCountRow{2, 8, 8, 10}));
    EXPECT_EQ(table_row_formula(4), (GateCountRow{4, 246, 378, 392}));
    for (int n = 2; n <= 6; ++n) {
        EXPECT_EQ(table_row_enumerated(n), table_row_formula(n));
    }
}

TEST(Optimize, CancelPassPreservesUnitary) {
    for (int n = 2; n <= 4; ++n) {
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            const Decomposition d =
                two_level_decompose(random_unitary(n, 500 + seed), poa_order(n));
            const Circuit raw = construct_circuit(d);
            EXPECT_LT(frobenius_distance(circuit_to_matrix(raw),
                                         circuit_to_matrix(cancel_pass(raw))),
                      1e-10);
        }
    }
}

} // namespace
