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

#include "gpt/linalg.hpp"

#include <utility>

#include "gpt/error.hpp"

namespace gpt {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows, QVec(cols)), cols_(cols) {}

Matrix::Matrix(std::vector<QVec> rows) : rows_(std::move(rows)) {
    cols_ = rows_.empty() ? 0 : rows_.front().size();
    require_dim(rows_, cols_, "matrix row");
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows());
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = rows_[i][j];
    return t;
}

QVec Matrix::apply(const QVec &x) const {
    if (x.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
    QVec y(rows());
    for (std::size_t i = 0; i < rows(); ++i) y[i] = rows_[i].dot(x);
    return y;
}

Matrix operator*(const Matrix &a, const Matrix &b) {
    if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product");
    Matrix bt = b.transpose();
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = a.row(i).dot(bt.row(j));
    return c;
}

Rational Matrix::determinant() const {
    if (rows() != cols_) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
    std::vector<QVec> a = rows_;
    const std::size_t n = cols_;
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            Rational f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return det;
}

Matrix Matrix::inverse() const {
    if (rows() != cols_) throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
    const std::size_t n = cols_;
    std::vector<QVec> a = rows_;
    std::vector<QVec> inv = identity(n).rows_;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) throw Error(ErrorCode::SingularMatrix, "matrix is not invertible");
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        Rational pivot = a[c][c];
        a[c] /= pivot;
        inv[c] /= pivot;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rational f = a[r][c];
            a[r] -= a[c] * f;
            inv[r] -= inv[c] * f;
        }
    }
    return Matrix(std::move(inv));
}

QVec Echelon::reduce(QVec x) const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Rational f = x[pivots[i]];
        if (f != 0) x -= rows[i] * f;
    }
    return x;
}

Echelon row_echelon(std::span<const QVec> input, std::size_t dim) {
    require_dim(input, dim, "row_echelon");
    std::vector<QVec> a(input.begin(), input.end());
    Echelon out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < dim && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        a[r] /= Rational(a[r][c]);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            a[i] -= a[r] * f;
        }
        out.pivots.push_back(c);
        ++r;
    }
    a.resize(r);
    out.rows = std::move(a);
    return out;
}

std::size_t rank(std::span<const QVec> rows, std::size_t dim) {
    return row_echelon(rows, dim).rank();
}

std::vector<QVec> nullspace(std::span<const QVec> rows, std::size_t dim) {
    Echelon e = row_echelon(rows, dim);
    std::vector<bool> is_pivot(dim, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<QVec> basis;
    for (std::size_t f = 0; f < dim; ++f) {
        if (is_pivot[f]) continue;
        QVec v(dim);
        v[f] = 1;
        for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_span(std::span<const QVec> rows, const QVec &x) {
    if (rows.empty()) return x.is_zero();
    return row_echelon(rows, x.size()).reduce(x).is_zero();
}

}  // namespace gpt

namespace gpt {

LinearSolution solve_exact(std::span<const QVec> rows, std::span<const Rational> rhs, std::size_t dim) {
    if (rows.size() != rhs.size()) throw Error(ErrorCode::DimensionMismatch, "row and right-hand side counts differ");
    require_dim(rows, dim, "equation");
    const std::size_t m = rows.size(), w = dim + 1;

    // Scale every equation to integers.
    std::vector<std::vector<Integer>> a(m, std::vector<Integer>(w));
    for (std::size_t i = 0; i < m; ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < w; ++j) {
            const Rational &x = j < dim ? rows[i][j] : rhs[i];
            l = boost::multiprecision::lcm(l, Integer(denominator(x)));
        }
        for (std::size_t j = 0; j < w; ++j) {
            const Rational &x = j < dim ? rows[i][j] : rhs[i];
            a[i][j] = numerator(x) * (l / denominator(x));
        }
    }

    Integer prev = 1;
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < w && r < m; ++c) {
        std::size_t p = r;
        while (p < m && a[p][c] == 0) ++p;
        if (p == m) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < m; ++i) {
            for (std::size_t j = c + 1; j < w; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[r][c];
        pivots.push_back(c);
        ++r;
    }

    std::size_t coefficient_rank = pivots.size();
    bool inconsistent = false;
    if (!pivots.empty() && pivots.back() == dim) {
        --coefficient_rank;
        inconsistent = true;
    }
    if (coefficient_rank < dim) return {LinearSolution::Status::Underdetermined, {}};
    if (inconsistent) return {LinearSolution::Status::Inconsistent, {}};

    QVec x(dim);
    for (std::size_t k = dim; k-- > 0;) {
        Rational s(a[k][dim]);
        for (std::size_t j = k + 1; j < dim; ++j) s -= Rational(a[k][j]) * x[j];
        x[k] = s / Rational(a[k][k]);
    }
    return {LinearSolution::Status::Unique, std::move(x)};
}

}  // namespace gpt
