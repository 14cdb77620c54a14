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
 * Dense complex matrices, two-level unitaries and the matrix text format.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "text.hpp"

namespace tlsynth {

using Complex = std::complex<double>;

/// Tolerance for "equals zero" tests inside the decomposition.
inline constexpr double kZeroTol = 1e-12;
/// Tolerance for unitarity validation of inputs and factors.
inline constexpr double kUnitaryTol = 1e-10;
/// Tolerance for end-to-end reconstruction.
inline constexpr double kReconstructTol = 1e-9;

/**
 * Square, dense, row-major complex matrix.
 */
class Matrix {
  public:
    Matrix() = default;
    explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
    Matrix(std::size_t dim, std::vector<Complex> data)
        : dim_(dim), data_(std::move(data)) {
        if (data_.size() != dim_ * dim_) {
            throw std::invalid_argument("Matrix: entry count " +
                                        std::to_string(data_.size()) +
                                        " does not match dim " +
                                        std::to_string(dim_));
        }
    }
    Matrix(std::initializer_list<std::initializer_list<Complex>> rows)
        : dim_(rows.size()) {
        data_.reserve(dim_ * dim_);
        for (const auto &row : rows) {
            if (row.size() != dim_) {
                throw std::invalid_argument("Matrix: rows must be square");
            }
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t dim) {
        Matrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }

    Complex &operator()(std::size_t row, std::size_t col) {
        return data_[row * dim_ + col];
    }
    const Complex &operator()(std::size_t row, std::size_t col) const {
        return data_[row * dim_ + col];
    }

    [[nodiscard]] const std::vector<Complex> &data() const noexcept {
        return data_;
    }

    friend bool operator==(const Matrix &, const Matrix &) = default;

  private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

/// True iff dim is 2^n for some n >= 1.
[[nodiscard]] inline bool is_qubit_dim(std::size_t dim) noexcept {
    return dim >= 2 && (dim & (dim - 1)) == 0;
}

/// Number of qubits for a power-of-two dimension.
[[nodiscard]] inline int qubit_count(std::size_t dim) {
    if (!is_qubit_dim(dim)) {
        throw std::invalid_argument("dimension " + std::to_string(dim) +
                                    " is not a power of two >= 2");
    }
    int n = 0;
    while ((std::size_t{1} << n) < dim) {
        ++n;
    }
    return n;
}

[[nodiscard]] inline Matrix adjoint(const Matrix &m) {
    Matrix out(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            out(j, i) = std::conj(m(i, j));
        }
    }
    return out;
}

[[nodiscard]] inline Matrix matmul(const Matrix &a, const Matrix &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("matmul: dimension mismatch (" +
                                    std::to_string(a.dim()) + " vs " +
                                    std::to_string(b.dim()) + ")");
    }
    const std::size_t n = a.dim();
    Matrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

[[nodiscard]] inline double frobenius_distance(const Matrix &a,
                                               const Matrix &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("frobenius_distance: dimension mismatch");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) {
        sum += std::norm(a.data()[i] - b.data()[i]);
    }
    return std::sqrt(sum);
}

/// Largest entrywise magnitude of a - b.
[[nodiscard]] inline double max_deviation(const Matrix &a, const Matrix &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("max_deviation: dimension mismatch");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) {
        worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
    }
    return worst;
}

/// True iff every entry of M^dagger M - I has magnitude below tol.
[[nodiscard]] inline bool is_unitary(const Matrix &m,
                                     double tol = kUnitaryTol) {
    const std::size_t n = m.dim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Complex acc{};
            for (std::size_t k = 0; k < n; ++k) {
                acc += std::conj(m(k, i)) * m(k, j);
            }
            if (i == j) {
                acc -= 1.0;
            }
            if (!(std::abs(acc) < tol)) {
                return false;
            }
        }
    }
    return true;
}

[[nodiscard]] inline bool all_finite(const Matrix &m) {
    return std::all_of(m.data().begin(), m.data().end(), [](Complex z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

/**
 * The 2x2 component [[a, b], [c, d]] of a two-level matrix. Row/column 0
 * refers to the lower basis index of the pair, row/column 1 to the upper.
 */
struct ComponentMatrix {
    Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};

    static ComponentMatrix identity() { return {}; }
    static ComponentMatrix pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }

    [[nodiscard]] ComponentMatrix adjoint() const {
        return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)};
    }

    [[nodiscard]] bool is_unitary(double tol = kUnitaryTol) const {
        const Complex m00 = std::norm(a) + std::norm(c) - 1.0;
        const Complex m01 = std::conj(a) * b + std::conj(c) * d;
        const Complex m11 = std::norm(b) + std::norm(d) - 1.0;
        return std::abs(m00) < tol && std::abs(m01) < tol &&
               std::abs(m11) < tol;
    }

    /// tol = 0 asks for an exact identity.
    [[nodiscard]] bool is_identity(double tol = kUnitaryTol) const {
        return std::abs(a - 1.0) <= tol && std::abs(b) <= tol &&
               std::abs(c) <= tol && std::abs(d - 1.0) <= tol;
    }

    friend bool operator==(const ComponentMatrix &,
                           const ComponentMatrix &) = default;
};

/**
 * A unitary acting nontrivially only on basis states |col> and |row>,
 * row > col. The component sits at (col,col), (col,row), (row,col),
 * (row,row).
 */
struct TwoLevelMatrix {
    std::size_t row = 1;
    std::size_t col = 0;
    ComponentMatrix comp;
    std::size_t dim = 2;
};

[[nodiscard]] inline Matrix expand_two_level(const TwoLevelMatrix &t) {
    if (t.row <= t.col) {
        throw std::invalid_argument(
            "expand_two_level: ordering pair requires row > col, got (" +
            std::to_string(t.row) + "," + std::to_string(t.col) + ")");
    }
    if (t.row >= t.dim) {
        throw std::invalid_argument("expand_two_level: row " +
                                    std::to_string(t.row) +
                                    " outside dimension " +
                                    std::to_string(t.dim));
    }
    Matrix m = Matrix::identity(t.dim);
    m(t.col, t.col) = t.comp.a;
    m(t.col, t.row) = t.comp.b;
    m(t.row, t.col) = t.comp.c;
    m(t.row, t.row) = t.comp.d;
    return m;
}

/**
 * Seeded Haar-like random unitary of dimension 2^n: a complex Gaussian
 * matrix whose columns are orthonormalized with modified Gram-Schmidt.
 */
[[nodiscard]] inline Matrix random_unitary(int n, std::uint64_t seed) {
    if (n < 1 || n > 7) {
        throw std::invalid_argument("random_unitary: n must be in [1, 7], got " +
                                    std::to_string(n));
    }
    const std::size_t dim = std::size_t{1} << n;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    // columns stored contiguously for the orthonormalization sweep
    std::vector<std::vector<Complex>> cols(dim, std::vector<Complex>(dim));
    for (auto &col : cols) {
        for (auto &z : col) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            z = {re, im};
        }
    }
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            Complex proj{};
            for (std::size_t i = 0; i < dim; ++i) {
                proj += std::conj(cols[k][i]) * cols[j][i];
            }
            for (std::size_t i = 0; i < dim; ++i) {
                cols[j][i] -= proj * cols[k][i];
            }
        }
        double norm = 0.0;
        for (const auto &z : cols[j]) {
            norm += std::norm(z);
        }
        norm = std::sqrt(norm);
        for (auto &z : cols[j]) {
            z /= norm;
        }
    }

    Matrix u(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t i = 0; i < dim; ++i) {
            u(i, j) = cols[j][i];
        }
    }
    return u;
}

inline void write_matrix(std::ostream &os, const Matrix &m) {
    os << m.dim() << '\n';
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (j != 0) {
                os << ' ';
            }
            os << format_complex(m(i, j));
        }
        os << '\n';
    }
}

[[nodiscard]] inline Matrix read_matrix(std::istream &is) {
    std::string token;
    if (!(is >> token)) {
        throw ParseError("matrix: missing dimension line");
    }
    const auto dim = parse_uint(token, "matrix dimension");
    if (dim == 0) {
        throw ParseError("matrix: dimension must be positive");
    }
    std::vector<Complex> data;
    data.reserve(dim * dim);
    for (std::size_t k = 0; k < dim * dim; ++k) {
        if (!(is >> token)) {
            throw ParseError("matrix: expected " + std::to_string(dim * dim) +
                             " entries, found " + std::to_string(k));
        }
        data.push_back(parse_complex(token));
    }
    if (is >> token) {
        throw ParseError("matrix: trailing token '" + token + "'");
    }
    return Matrix(dim, std::move(data));
}

[[nodiscard]] inline std::string to_text(const Matrix &m) {
    std::ostringstream os;
    write_matrix(os, m);
    return os.str();
}

} // namespace tlsynth
