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
 * X-gate cancellation and gate-count formulas.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordering.hpp"
#include "synth.hpp"

namespace tlsynth {

/**
 * Removes adjacent identical X gates until none remain. A single
 * left-to-right stack scan reaches the fixed point. Unitary gates are
 * never removed and block cancellation across them.
 */
[[nodiscard]] inline Circuit cancel_pass(const Circuit &c) {
    Circuit out{c.n, {}};
    out.gates.reserve(c.gates.size());
    for (const auto &g : c.gates) {
        if (!out.gates.empty() && cancels(out.gates.back(), g)) {
            out.gates.pop_back();
        } else {
            out.gates.push_back(g);
        }
    }
    return out;
}

/// Gate count of the circuit for `order`, built from Gray codes alone.
[[nodiscard]] inline std::size_t
count_structural(const OrderArray &order, bool cancelled) {
    Circuit circuit = assemble(order.n, placeholder_subcircuits(order));
    if (cancelled) {
        circuit = cancel_pass(circuit);
    }
    return circuit.gates.size();
}

/// Cancelled gate count of each column's subcircuits taken on their own.
[[nodiscard]] inline std::vector<std::size_t>
column_gate_counts(const OrderArray &order) {
    std::vector<std::size_t> counts;
    counts.reserve(order.columns.size());
    for (std::size_t c = 0; c < order.columns.size(); ++c) {
        std::vector<PalindromicSubcircuit> subs;
        for (auto r : order.columns[c]) {
            subs.push_back(build_subcircuit(
                {r, c, ComponentMatrix::identity(), order.dim()}, order.n));
        }
        counts.push_back(cancel_pass(assemble(order.n, subs)).gates.size());
    }
    return counts;
}

/// Gates removed by cancellation between neighbouring columns: the sum of
/// per-column counts minus the whole-circuit cancelled count.
[[nodiscard]] inline std::size_t
inter_column_cancellations(const OrderArray &order) {
    std::size_t per_column = 0;
    for (auto t : column_gate_counts(order)) {
        per_column += t;
    }
    return per_column - count_structural(order, true);
}

namespace detail {
inline std::int64_t pow2(int e) { return std::int64_t{1} << e; }
inline void require_range(int n, int lo, const char *who) {
    if (n < lo || n > 30) {
        throw std::invalid_argument(std::string(who) + ": n out of range (" +
                                    std::to_string(n) + ")");
    }
}
} // namespace detail

/// (n-1) 2^(2n-1) + 2^(n-1): conventional order, no cancellation.
[[nodiscard]] inline std::int64_t formula_conventional(int n) {
    detail::require_range(n, 1, "formula_conventional");
    return (n - 1) * detail::pow2(2 * n - 1) + detail::pow2(n - 1);
}

/// (n-1) 2^(2n-1) - 2^(n-1) + 2: conventional order after cancellation.
[[nodiscard]] inline std::int64_t formula_conventional_cancel(int n) {
    detail::require_range(n, 1, "formula_conventional_cancel");
    return (n - 1) * detail::pow2(2 * n - 1) - detail::pow2(n - 1) + 2;
}

/// (7/3) 2^(2n-1) - 7 2^(n-1) + 10/3, evaluated exactly.
[[nodiscard]] inline std::int64_t formula_poa(int n) {
    detail::require_range(n, 2, "formula_poa");
    const std::int64_t numerator = 7 * detail::pow2(2 * n - 1) + 10;
    // 2^(2n-1) = 2 (mod 3), so 7 * 2 + 10 = 24 = 0 (mod 3)
    return numerator / 3 - 7 * detail::pow2(n - 1);
}

/// poa_n = 4 (poa_{n-1} + 2^(n-1) - 2) + 5 (2^(n-1) - 1) + 1
///         - 2 (2^(n-1) - 1), with poa_2 = 8.
[[nodiscard]] inline std::int64_t poa_recurrence(int n) {
    detail::require_range(n, 2, "poa_recurrence");
    std::int64_t value = 8;
    for (int m = 3; m <= n; ++m) {
        const std::int64_t half = detail::pow2(m - 1);
        value = 4 * (value + (half - 2)) + 5 * (half - 1) + 1 - 2 * (half - 1);
    }
    return value;
}

/**
 * Per-column gate counts of the POA order by the column recurrence:
 * column 2c gets 2T+3 and column 2c+1 gets 2T+2 from column c of the
 * previous level; the last column holds a single gate. The n = 2 base is
 * counted structurally. Returns columns 0 .. 2^n - 2.
 */
[[nodiscard]] inline std::vector<std::int64_t> column_counts(int n) {
    detail::require_range(n, 2, "column_counts");
    std::vector<std::int64_t> level;
    for (auto t : column_gate_counts(poa_order(2))) {
        level.push_back(static_cast<std::int64_t>(t));
    }
    for (int m = 3; m <= n; ++m) {
        const std::size_t prev_real = level.size(); // 2^(m-1) - 1
        std::vector<std::int64_t> next;
        next.reserve(2 * prev_real + 1);
        for (std::size_t c = 0; c < prev_real; ++c) {
            next.push_back(2 * level[c] + 3);
            next.push_back(2 * level[c] + 2);
        }
        // from the empty virtual column 2^(m-1) - 1
        next.push_back(1);
        level = std::move(next);
    }
    return level;
}

/// One row of the gate-count table.
struct GateCountRow {
    int n = 0;
    std::int64_t palindromic = 0;
    std::int64_t conventional = 0;
    std::int64_t no_canceling = 0;

    friend bool operator==(const GateCountRow &,
                           const GateCountRow &) = default;
};

[[nodiscard]] inline GateCountRow table_row_formula(int n) {
    return {n, formula_poa(n), formula_conventional_cancel(n),
            formula_conventional(n)};
}

[[nodiscard]] inline GateCountRow table_row_enumerated(int n) {
    const OrderArray conv = conventional_order(n);
    return {n, static_cast<std::int64_t>(count_structural(poa_order(n), true)),
            static_cast<std::int64_t>(count_structural(conv, true)),
            static_cast<std::int64_t>(count_structural(conv, false))};
}

} // namespace tlsynth
