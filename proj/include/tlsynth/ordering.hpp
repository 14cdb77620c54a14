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
 * Ordering arrays for fixed-column two-level decomposition.
 *
 * An OrderArray lists, for every column c in [0, 2^n - 2], the rows r > c
 * in the order their entries are eliminated. Two constructions are
 * provided: the conventional top-to-bottom order and the palindromic
 * (POA) order, which is built recursively from the order for n - 1 qubits
 * so that rows sharing Gray-code prefixes are eliminated consecutively.
 */
#pragma once

#include <cstddef>
#include <iostream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "text.hpp"

namespace tlsynth {

/// Qubit count above which order construction is still allowed but large.
inline constexpr int kSoftQubitCap = 7;

struct OrderArray {
    int n = 0;
    /// columns[c] holds the row sequence for column c, c in [0, 2^n - 2].
    std::vector<std::vector<std::size_t>> columns;

    [[nodiscard]] std::size_t dim() const { return std::size_t{1} << n; }

    /// Number of ordering pairs, 2^(n-1) (2^n - 1).
    [[nodiscard]] std::size_t pair_count() const {
        std::size_t total = 0;
        for (const auto &col : columns) {
            total += col.size();
        }
        return total;
    }

    friend bool operator==(const OrderArray &, const OrderArray &) = default;
};

namespace detail {
inline void warn_if_large(int n, const char *who) {
    if (n > kSoftQubitCap) {
        std::cerr << "warning: " << who << "(" << n
                  << ") builds an order array with "
                  << ((std::size_t{1} << (n - 1)) *
                      ((std::size_t{1} << n) - 1))
                  << " pairs\n";
    }
}
} // namespace detail

/// Column c is c+1, c+2, ..., 2^n - 1.
[[nodiscard]] inline OrderArray conventional_order(int n) {
    if (n < 1 || n > 30) {
        throw std::invalid_argument("conventional_order: n must be >= 1, got " +
                                    std::to_string(n));
    }
    detail::warn_if_large(n, "conventional_order");
    OrderArray o;
    o.n = n;
    const std::size_t dim = o.dim();
    o.columns.resize(dim - 1);
    for (std::size_t c = 0; c + 1 < dim; ++c) {
        for (std::size_t r = c + 1; r < dim; ++r) {
            o.columns[c].push_back(r);
        }
    }
    return o;
}

/**
 * Palindromic order. The base case n = 2 is the conventional order; each
 * column c of level m - 1 (R) spawns two columns of level m:
 *
 *   column 2c     = 2R, 2c+1, 2R+1
 *   column 2c + 1 = 2R, 2R+1
 *
 * The last column of level m - 1 is empty, so column 2^m - 2 reduces to
 * the single entry 2^m - 1.
 */
[[nodiscard]] inline OrderArray poa_order(int n) {
    if (n < 2 || n > 30) {
        throw std::invalid_argument("poa_order: n must be >= 2, got " +
                                    std::to_string(n));
    }
    detail::warn_if_large(n, "poa_order");
    OrderArray level = conventional_order(2);
    for (int m = 3; m <= n; ++m) {
        OrderArray next;
        next.n = m;
        next.columns.resize(next.dim() - 1);
        const std::size_t prev_dim = level.dim();
        for (std::size_t c = 0; c < prev_dim; ++c) {
            static const std::vector<std::size_t> kEmpty;
            const auto &src = c + 1 < prev_dim ? level.columns[c] : kEmpty;
            auto &even = next.columns[2 * c];
            for (auto r : src) {
                even.push_back(2 * r);
            }
            even.push_back(2 * c + 1);
            for (auto r : src) {
                even.push_back(2 * r + 1);
            }
            if (2 * c + 1 < next.columns.size()) {
                auto &odd = next.columns[2 * c + 1];
                for (auto r : src) {
                    odd.push_back(2 * r);
                }
                for (auto r : src) {
                    odd.push_back(2 * r + 1);
                }
            }
        }
        level = std::move(next);
    }
    return level;
}

/**
 * True iff the array has one column per c in [0, 2^n - 2] and column c is
 * a permutation of {c+1, ..., 2^n - 1}.
 */
[[nodiscard]] inline bool validate_order(const OrderArray &o) {
    if (o.n < 1 || o.n > 30) {
        return false;
    }
    const std::size_t dim = o.dim();
    if (o.columns.size() != dim - 1) {
        return false;
    }
    std::vector<char> seen(dim);
    for (std::size_t c = 0; c + 1 < dim; ++c) {
        const auto &col = o.columns[c];
        if (col.size() != dim - 1 - c) {
            return false;
        }
        std::fill(seen.begin(), seen.end(), 0);
        for (auto r : col) {
            if (r <= c || r >= dim || seen[r]) {
                return false;
            }
            seen[r] = 1;
        }
    }
    return true;
}

/// Writes `n=<n>` then one `c: r1 r2 ...` line per column.
inline void save_order(std::ostream &os, const OrderArray &o) {
    os << "n=" << o.n << '\n';
    for (std::size_t c = 0; c < o.columns.size(); ++c) {
        os << c << ':';
        for (auto r : o.columns[c]) {
            os << ' ' << r;
        }
        os << '\n';
    }
}

[[nodiscard]] inline std::string save_order(const OrderArray &o) {
    std::ostringstream os;
    save_order(os, o);
    return os.str();
}

/// Parses the order file format; throws ParseError on malformed or invalid
/// arrays.
[[nodiscard]] inline OrderArray load_order(std::istream &is) {
    std::string line;
    if (!std::getline(is, line) || line.rfind("n=", 0) != 0) {
        throw ParseError("order: first line must be n=<int>");
    }
    OrderArray o;
    const auto n = parse_uint(std::string_view(line).substr(2), "qubit count");
    if (n < 1 || n > 30) {
        throw ParseError("order: qubit count out of range");
    }
    o.n = static_cast<int>(n);
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        const auto colon = line.find(':');
        if (colon == std::string::npos) {
            throw ParseError("order: expected '<c>: rows...' in line '" +
                             line + "'");
        }
        const auto c = parse_uint(line.substr(0, colon), "column index");
        if (c != o.columns.size()) {
            throw ParseError("order: column " + std::to_string(c) +
                             " out of sequence");
        }
        std::istringstream rows(line.substr(colon + 1));
        std::vector<std::size_t> col;
        std::string tok;
        while (rows >> tok) {
            col.push_back(parse_uint(tok, "row index"));
        }
        o.columns.push_back(std::move(col));
    }
    if (!validate_order(o)) {
        throw ParseError("order: array for n=" + std::to_string(o.n) +
                         " fails validation (each column c must be a "
                         "permutation of c+1..2^n-1)");
    }
    return o;
}

[[nodiscard]] inline OrderArray load_order(const std::string &text) {
    std::istringstream is(text);
    return load_order(is);
}

} // namespace tlsynth
