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
 * Gray-code circuit construction for two-level matrices.
 *
 * Every two-level factor V on basis states (c, r) becomes a palindromic
 * subcircuit of fully controlled gates: X gates walk |c> along the Gray
 * code towards |r>, a controlled component gate acts on the last step and
 * the X gates are undone in reverse.
 *
 * Qubit 0 is the least significant bit of a basis index.
 */
#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "decompose.hpp"
#include "linalg.hpp"
#include "text.hpp"

namespace tlsynth {

enum class GateKind { X, Unitary };

/// Identity of a fully controlled gate up to its operator: target qubit and
/// required values of the other qubits.
struct GateKey {
    int target = 0;
    std::uint64_t controls = 0;
    friend bool operator==(const GateKey &, const GateKey &) = default;
};

/**
 * A Lambda_{n-1}(S) gate: op acts on `target` iff every other qubit i has
 * the value of bit i in `controls`. The target bit of `controls` is
 * always 0. For Unitary gates, op row/column 0 is the target-bit-0 state.
 */
struct ControlledGate {
    int n = 1;
    int target = 0;
    std::uint64_t controls = 0;
    GateKind kind = GateKind::X;
    ComponentMatrix op = ComponentMatrix::pauli_x();

    static ControlledGate x(int n, int target, std::uint64_t controls) {
        return {n, target, controls & ~(std::uint64_t{1} << target),
                GateKind::X, ComponentMatrix::pauli_x()};
    }
    static ControlledGate unitary(int n, int target, std::uint64_t controls,
                                  const ComponentMatrix &op) {
        return {n, target, controls & ~(std::uint64_t{1} << target),
                GateKind::Unitary, op};
    }

    [[nodiscard]] bool is_x() const noexcept { return kind == GateKind::X; }
    [[nodiscard]] GateKey key() const noexcept { return {target, controls}; }

    /// n characters over {0,1,_}, qubit n-1 leftmost, `_` at the target.
    [[nodiscard]] std::string pattern() const {
        std::string s(static_cast<std::size_t>(n), '0');
        for (int q = 0; q < n; ++q) {
            const auto pos = static_cast<std::size_t>(n - 1 - q);
            if (q == target) {
                s[pos] = '_';
            } else if ((controls >> q) & 1U) {
                s[pos] = '1';
            }
        }
        return s;
    }

    friend bool operator==(const ControlledGate &,
                           const ControlledGate &) = default;
};

/// Two X gates annihilate iff they share target and controls.
[[nodiscard]] inline bool cancels(const ControlledGate &a,
                                  const ControlledGate &b) noexcept {
    return a.is_x() && b.is_x() && a.key() == b.key();
}

using GrayCode = std::vector<std::uint64_t>;

/// n-character binary expansion, most significant bit first.
[[nodiscard]] inline std::string to_bits(std::uint64_t x, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int q = 0; q < n; ++q) {
        if ((x >> q) & 1U) {
            s[static_cast<std::size_t>(n - 1 - q)] = '1';
        }
    }
    return s;
}

/**
 * Gray code from c to r, flipping the least significant differing bit at
 * each step. Contains popcount(c ^ r) + 1 codes.
 */
[[nodiscard]] inline GrayCode gray_code(std::uint64_t c, std::uint64_t r,
                                        int n) {
    if (n < 1 || n > 63) {
        throw std::invalid_argument("gray_code: n out of range");
    }
    const std::uint64_t limit = std::uint64_t{1} << n;
    if (c >= limit || r >= limit) {
        throw std::invalid_argument("gray_code: state index outside 2^" +
                                    std::to_string(n));
    }
    if (c == r) {
        throw std::invalid_argument("gray_code: endpoints must differ");
    }
    GrayCode codes{c};
    std::uint64_t g = c;
    while (g != r) {
        const std::uint64_t diff = g ^ r;
        g ^= diff & (~diff + 1);
        codes.push_back(g);
    }
    return codes;
}

/// The gate mapping Gray neighbours a -> b (one bit apart).
[[nodiscard]] inline int flipped_bit(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t diff = a ^ b;
    if (std::popcount(diff) != 1) {
        throw std::invalid_argument("flipped_bit: codes differ in " +
                                    std::to_string(std::popcount(diff)) +
                                    " bits");
    }
    return std::countr_zero(diff);
}

/**
 * prefix, middle, reverse(prefix). The prefix consists of X gates only.
 */
struct PalindromicSubcircuit {
    std::vector<ControlledGate> prefix;
    ControlledGate middle;
    std::size_t row = 0;
    std::size_t col = 0;

    [[nodiscard]] std::size_t size() const { return 2 * prefix.size() + 1; }

    [[nodiscard]] std::vector<ControlledGate> flatten() const {
        std::vector<ControlledGate> gates;
        gates.reserve(size());
        append_to(gates);
        return gates;
    }

    void append_to(std::vector<ControlledGate> &gates) const {
        gates.insert(gates.end(), prefix.begin(), prefix.end());
        gates.push_back(middle);
        gates.insert(gates.end(), prefix.rbegin(), prefix.rend());
    }
};

[[nodiscard]] inline PalindromicSubcircuit
build_subcircuit(const TwoLevelMatrix &v, int n) {
    if (v.row <= v.col) {
        throw std::invalid_argument("build_subcircuit: requires row > col");
    }
    const GrayCode codes = gray_code(v.col, v.row, n);
    const std::size_t m = codes.size();
    PalindromicSubcircuit sub;
    sub.row = v.row;
    sub.col = v.col;
    for (std::size_t j = 0; j + 2 < m; ++j) {
        sub.prefix.push_back(ControlledGate::x(
            n, flipped_bit(codes[j], codes[j + 1]), codes[j]));
    }
    const std::uint64_t from = codes[m - 2];
    const std::uint64_t to = codes[m - 1];
    const int target = flipped_bit(from, to);
    // |c> now sits at `from`; orient the component in target-bit order
    const ComponentMatrix op =
        ((from >> target) & 1U) == 0
            ? v.comp
            : ComponentMatrix{v.comp.d, v.comp.c, v.comp.b, v.comp.a};
    sub.middle = ControlledGate::unitary(n, target, to, op);
    return sub;
}

/// Gates in application order (first element acts first on the state).
struct Circuit {
    int n = 1;
    std::vector<ControlledGate> gates;

    friend bool operator==(const Circuit &, const Circuit &) = default;
};

/**
 * One subcircuit per factor, in factor order V_1 ... V_k. With
 * skip_identity, factors whose component is the identity within 1e-10 are
 * dropped.
 */
[[nodiscard]] inline std::vector<PalindromicSubcircuit>
construct_subcircuits(const Decomposition &d, bool skip_identity = false) {
    std::vector<PalindromicSubcircuit> subs;
    subs.reserve(d.factors.size());
    for (const auto &f : d.factors) {
        if (skip_identity && f.comp.is_identity(kUnitaryTol)) {
            continue;
        }
        subs.push_back(build_subcircuit(f, d.n));
    }
    return subs;
}

/**
 * Flattens subcircuits given in factor order. Since U = V_1 ... V_k acts
 * with V_k first, the last subcircuit is applied first.
 */
[[nodiscard]] inline Circuit
assemble(int n, const std::vector<PalindromicSubcircuit> &factor_order) {
    Circuit circuit{n, {}};
    for (auto it = factor_order.rbegin(); it != factor_order.rend(); ++it) {
        it->append_to(circuit.gates);
    }
    return circuit;
}

[[nodiscard]] inline Circuit construct_circuit(const Decomposition &d,
                                               bool skip_identity = false) {
    return assemble(d.n, construct_subcircuits(d, skip_identity));
}

/// Subcircuits for an order without matrix values (identity middles).
[[nodiscard]] inline std::vector<PalindromicSubcircuit>
placeholder_subcircuits(const OrderArray &order) {
    std::vector<PalindromicSubcircuit> subs;
    subs.reserve(order.pair_count());
    for (std::size_t c = 0; c < order.columns.size(); ++c) {
        for (auto r : order.columns[c]) {
            subs.push_back(build_subcircuit(
                {r, c, ComponentMatrix::identity(), order.dim()}, order.n));
        }
    }
    return subs;
}

inline void write_gate(std::ostream &os, const ControlledGate &g) {
    os << (g.is_x() ? "X" : "U") << " t=" << g.target << " c=" << g.pattern();
    if (!g.is_x()) {
        os << " m=" << format_complex(g.op.a) << ';' << format_complex(g.op.b)
           << ';' << format_complex(g.op.c) << ';' << format_complex(g.op.d);
    }
    os << '\n';
}

inline void write_circuit(std::ostream &os, const Circuit &c) {
    os << "n=" << c.n << " gates=" << c.gates.size() << '\n';
    for (const auto &g : c.gates) {
        write_gate(os, g);
    }
}

[[nodiscard]] inline std::string to_text(const Circuit &c) {
    std::ostringstream os;
    write_circuit(os, c);
    return os.str();
}

namespace detail {

inline std::string_view field(std::string_view token, std::string_view key,
                              const std::string &line) {
    if (token.substr(0, key.size()) != key) {
        throw ParseError("circuit: expected '" + std::string(key) +
                         "' in line '" + line + "'");
    }
    return token.substr(key.size());
}

inline ControlledGate parse_gate(const std::string &line, int n) {
    std::istringstream is(line);
    std::string kind, t_tok, c_tok, m_tok, extra;
    is >> kind >> t_tok >> c_tok;
    if (kind != "X" && kind != "U") {
        throw ParseError("circuit: unknown gate kind in line '" + line + "'");
    }
    const auto target = parse_uint(field(t_tok, "t=", line), "target");
    const auto pattern = field(c_tok, "c=", line);
    if (target >= static_cast<std::size_t>(n) ||
        pattern.size() != static_cast<std::size_t>(n)) {
        throw ParseError("circuit: target/pattern do not fit n=" +
                         std::to_string(n) + " in line '" + line + "'");
    }
    std::uint64_t controls = 0;
    for (int q = 0; q < n; ++q) {
        const char ch = pattern[static_cast<std::size_t>(n - 1 - q)];
        const bool is_target = q == static_cast<int>(target);
        if (is_target != (ch == '_') || (ch != '_' && ch != '0' && ch != '1')) {
            throw ParseError("circuit: bad control pattern in line '" + line +
                             "'");
        }
        if (ch == '1') {
            controls |= std::uint64_t{1} << q;
        }
    }
    const int t = static_cast<int>(target);
    if (kind == "X") {
        if (is >> extra) {
            throw ParseError("circuit: trailing data in line '" + line + "'");
        }
        return ControlledGate::x(n, t, controls);
    }
    if (!(is >> m_tok) || (is >> extra)) {
        throw ParseError("circuit: U gate needs exactly one m= field in '" +
                         line + "'");
    }
    std::string_view m = field(m_tok, "m=", line);
    Complex entries[4];
    for (int k = 0; k < 4; ++k) {
        const auto semi = m.find(';');
        if ((k < 3) == (semi == std::string_view::npos)) {
            throw ParseError("circuit: m= needs four entries in '" + line +
                             "'");
        }
        entries[k] = parse_complex(m.substr(0, semi));
        m = k < 3 ? m.substr(semi + 1) : std::string_view{};
    }
    return ControlledGate::unitary(
        n, t, controls, {entries[0], entries[1], entries[2], entries[3]});
}

} // namespace detail

[[nodiscard]] inline Circuit read_circuit(std::istream &is) {
    std::string line;
    if (!std::getline(is, line)) {
        throw ParseError("circuit: missing header");
    }
    std::istringstream header(line);
    std::string n_tok, g_tok;
    header >> n_tok >> g_tok;
    const auto n = parse_uint(detail::field(n_tok, "n=", line), "qubit count");
    const auto count = parse_uint(detail::field(g_tok, "gates=", line), "count");
    if (n < 1 || n > 63) {
        throw ParseError("circuit: qubit count out of range");
    }
    Circuit c{static_cast<int>(n), {}};
    c.gates.reserve(count);
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        c.gates.push_back(detail::parse_gate(line, c.n));
    }
    if (c.gates.size() != count) {
        throw ParseError("circuit: header announces " + std::to_string(count) +
                         " gates, found " + std::to_string(c.gates.size()));
    }
    return c;
}

[[nodiscard]] inline Circuit read_circuit(const std::string &text) {
    std::istringstream is(text);
    return read_circuit(is);
}

/**
 * Splits an uncancelled circuit back into palindromic subcircuits, in
 * application order, recovering each ordering pair from the gates. Throws
 * if the circuit is not a concatenation of prefix, middle, reverse(prefix)
 * blocks.
 */
[[nodiscard]] inline std::vector<PalindromicSubcircuit>
split_palindromes(const Circuit &c) {
    std::vector<PalindromicSubcircuit> subs;
    std::size_t i = 0;
    const auto &g = c.gates;
    while (i < g.size()) {
        PalindromicSubcircuit sub;
        while (i < g.size() && g[i].is_x()) {
            sub.prefix.push_back(g[i++]);
        }
        if (i == g.size()) {
            throw ParseError("circuit: trailing X gates without a middle gate");
        }
        sub.middle = g[i++];
        for (auto it = sub.prefix.rbegin(); it != sub.prefix.rend(); ++it) {
            if (i == g.size() || !(g[i] == *it)) {
                throw ParseError("circuit: subcircuit " +
                                 std::to_string(subs.size()) +
                                 " is not palindromic (already cancelled?)");
            }
            ++i;
        }
        // the last flip sets the highest differing bit, so r has it set
        std::uint64_t flips = 0;
        for (const auto &x : sub.prefix) {
            flips |= std::uint64_t{1} << x.target;
        }
        const std::uint64_t bit = std::uint64_t{1} << sub.middle.target;
        sub.row = sub.middle.controls | bit;
        sub.col = sub.middle.controls ^ flips;
        subs.push_back(std::move(sub));
    }
    return subs;
}

} // namespace tlsynth
