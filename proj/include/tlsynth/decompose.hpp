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
 * Two-level decomposition of a unitary following an ordering array.
 *
 * For each ordering pair (r, c) a two-level M_j is chosen so that
 * (M_j M)[r, c] = 0; after all pairs M_k ... M_1 U = I and therefore
 * U = V_1 ... V_k with V_j = M_j^dagger.
 */
#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "ordering.hpp"

namespace tlsynth {

struct Decomposition {
    int n = 0;
    /// V_1 ... V_k, product taken left to right.
    std::vector<TwoLevelMatrix> factors;
};

/// How the working matrix is updated after each elimination step.
enum class UpdateMode {
    /// M <- expand(M_j) * M with a full dense product.
    Dense,
    /// Only rows c and r of M change; update them in place.
    TwoRow,
};

struct DecomposeOptions {
    UpdateMode update = UpdateMode::Dense;
    /// Called with the working matrix after the last pair of each column.
    std::function<void(const Matrix &working, std::size_t column)>
        after_column;
};

/// True iff columns 0..c of M match the identity within tol.
[[nodiscard]] inline bool
progress_invariant_check(const Matrix &m, std::size_t c,
                         double tol = kReconstructTol) {
    for (std::size_t j = 0; j <= c && j < m.dim(); ++j) {
        for (std::size_t i = 0; i < m.dim(); ++i) {
            const Complex expect = i == j ? 1.0 : 0.0;
            if (!(std::abs(m(i, j) - expect) < tol)) {
                return false;
            }
        }
    }
    return true;
}

namespace detail {

inline void apply_two_row(Matrix &m, const TwoLevelMatrix &step) {
    const std::size_t c = step.col;
    const std::size_t r = step.row;
    for (std::size_t j = 0; j < m.dim(); ++j) {
        const Complex mc = m(c, j);
        const Complex mr = m(r, j);
        m(c, j) = step.comp.a * mc + step.comp.b * mr;
        m(r, j) = step.comp.c * mc + step.comp.d * mr;
    }
}

} // namespace detail

/**
 * Factors U into 2^(n-1) (2^n - 1) two-level matrices, one per ordering
 * pair in the sequence given by `order`. Identity factors are kept.
 */
[[nodiscard]] inline Decomposition
two_level_decompose(const Matrix &u, const OrderArray &order,
                    const DecomposeOptions &options = {}) {
    if (!is_qubit_dim(u.dim())) {
        throw std::invalid_argument("two_level_decompose: dimension " +
                                    std::to_string(u.dim()) +
                                    " is not a power of two >= 2");
    }
    if (!validate_order(order)) {
        throw std::invalid_argument("two_level_decompose: invalid order array");
    }
    if (order.dim() != u.dim()) {
        throw std::invalid_argument(
            "two_level_decompose: order is for n=" + std::to_string(order.n) +
            " but matrix has dimension " + std::to_string(u.dim()));
    }
    if (!all_finite(u) || !is_unitary(u, kUnitaryTol)) {
        throw std::invalid_argument(
            "two_level_decompose: input is not unitary within 1e-10");
    }

    const std::size_t dim = u.dim();
    Decomposition out;
    out.n = order.n;
    out.factors.reserve(order.pair_count());

    Matrix m = u;
    for (std::size_t c = 0; c + 1 < dim; ++c) {
        const auto &rows = order.columns[c];
        for (std::size_t idx = 0; idx < rows.size(); ++idx) {
            const std::size_t r = rows[idx];
            TwoLevelMatrix step{r, c, ComponentMatrix::identity(), dim};
            if (c == dim - 2) {
                // remaining 2x2 block is unitary: invert it outright
                step.comp = {std::conj(m(c, c)), std::conj(m(r, c)),
                             std::conj(m(c, r)), std::conj(m(r, r))};
            } else if (std::abs(m(r, c)) < kZeroTol) {
                if (idx + 1 == rows.size()) {
                    step.comp.a = std::conj(m(c, c));
                }
            } else {
                const Complex top = m(c, c);
                const Complex low = m(r, c);
                const double norm = std::sqrt(std::norm(top) + std::norm(low));
                step.comp = {std::conj(top) / norm, std::conj(low) / norm,
                             low / norm, -top / norm};
            }

            if (!step.comp.is_identity(0.0)) {
                if (options.update == UpdateMode::Dense) {
                    m = matmul(expand_two_level(step), m);
                } else {
                    detail::apply_two_row(m, step);
                }
            }
            out.factors.push_back({r, c, step.comp.adjoint(), dim});
        }
        if (options.after_column) {
            options.after_column(m, c);
        }
    }
    return out;
}

/// Left-to-right product V_1 ... V_k. Each right multiplication by a
/// two-level factor only touches columns col and row of the accumulator.
[[nodiscard]] inline Matrix product(const Decomposition &d) {
    Matrix acc = Matrix::identity(std::size_t{1} << d.n);
    for (const auto &f : d.factors) {
        for (std::size_t i = 0; i < acc.dim(); ++i) {
            const Complex lo = acc(i, f.col);
            const Complex hi = acc(i, f.row);
            acc(i, f.col) = lo * f.comp.a + hi * f.comp.c;
            acc(i, f.row) = lo * f.comp.b + hi * f.comp.d;
        }
    }
    return acc;
}

/// Debug dump: one factor per line, `r c a b c d`.
inline void write_decomposition(std::ostream &os, const Decomposition &d) {
    for (const auto &f : d.factors) {
        os << f.row << ' ' << f.col << ' ' << format_complex(f.comp.a) << ' '
           << format_complex(f.comp.b) << ' ' << format_complex(f.comp.c)
           << ' ' << format_complex(f.comp.d) << '\n';
    }
}

} // namespace tlsynth
