// Copyright 2026 The gpt-gtt Authors
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

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gpt/qvec.hpp"

namespace gpt {

/// Dense rational matrix stored as a list of rows.
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    explicit Matrix(std::vector<QVec> rows);

    static Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }
    const QVec &row(std::size_t i) const { return rows_[i]; }
    const Rational &operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
    Rational &operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }
    const std::vector<QVec> &row_list() const noexcept { return rows_; }

    Matrix transpose() const;
    QVec apply(const QVec &x) const;
    friend Matrix operator*(const Matrix &a, const Matrix &b);
    friend bool operator==(const Matrix &a, const Matrix &b) = default;

    Rational determinant() const;
    /// Throws SingularMatrix.
    Matrix inverse() const;

   private:
    std::vector<QVec> rows_;
    std::size_t cols_ = 0;
};

/// Reduced row echelon form of the span of `rows`. Returned rows are nonzero,
/// their pivots strictly increase and every pivot column is a unit column.
struct Echelon {
    std::vector<QVec> rows;
    std::vector<std::size_t> pivots;

    std::size_t rank() const noexcept { return rows.size(); }
    /// Subtracts multiples of the echelon rows so that x vanishes on every
    /// pivot column. Two vectors differ by an element of the span iff their
    /// reductions coincide.
    QVec reduce(QVec x) const;
};

Echelon row_echelon(std::span<const QVec> rows, std::size_t dim);

std::size_t rank(std::span<const QVec> rows, std::size_t dim);

/// Basis of {x : r.x = 0 for all rows r}, one vector per free column.
std::vector<QVec> nullspace(std::span<const QVec> rows, std::size_t dim);

/// True iff x lies in the linear span of `rows`.
bool in_span(std::span<const QVec> rows, const QVec &x);

}  // namespace gpt

namespace gpt {

struct LinearSolution {
    enum class Status { Unique, Underdetermined, Inconsistent };
    Status status;
    QVec x;  // set when status == Unique
};

/// Solves rows * x = rhs exactly with fraction-free (Bareiss) elimination on
/// the integer-scaled augmented matrix. Overdetermined consistent systems are
/// accepted. A rank-deficient coefficient matrix reports Underdetermined
/// before consistency is considered.
LinearSolution solve_exact(std::span<const QVec> rows, std::span<const Rational> rhs, std::size_t dim);

}  // namespace gpt
