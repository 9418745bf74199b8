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

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "gpt/rational.hpp"

namespace gpt {

/// Exact rational vector in the ambient space R^{d+1}.
class QVec {
   public:
    QVec() = default;
    explicit QVec(std::size_t dim) : coords_(dim) {}
    explicit QVec(std::vector<Rational> coords) : coords_(std::move(coords)) {}
    QVec(std::initializer_list<Rational> coords) : coords_(coords) {}

    /// Parses each entry with parse_rational.
    static QVec parse(std::span<const std::string> entries);
    /// Unit vector e_k.
    static QVec basis(std::size_t dim, std::size_t k);
    /// The conventional unit effect (0, ..., 0, 1).
    static QVec unit(std::size_t dim) { return basis(dim, dim - 1); }

    std::size_t size() const noexcept { return coords_.size(); }
    bool empty() const noexcept { return coords_.empty(); }
    const Rational &operator[](std::size_t i) const { return coords_[i]; }
    Rational &operator[](std::size_t i) { return coords_[i]; }
    const std::vector<Rational> &coords() const noexcept { return coords_; }
    auto begin() const { return coords_.begin(); }
    auto end() const { return coords_.end(); }

    bool is_zero() const;
    Rational dot(const QVec &other) const;
    Rational norm2() const { return dot(*this); }

    QVec &operator+=(const QVec &other);
    QVec &operator-=(const QVec &other);
    QVec &operator*=(const Rational &s);
    QVec &operator/=(const Rational &s);

    friend QVec operator+(QVec a, const QVec &b) { return a += b; }
    friend QVec operator-(QVec a, const QVec &b) { return a -= b; }
    friend QVec operator-(QVec a) { return a *= Rational(-1); }
    friend QVec operator*(QVec a, const Rational &s) { return a *= s; }
    friend QVec operator*(const Rational &s, QVec a) { return a *= s; }
    friend QVec operator/(QVec a, const Rational &s) { return a /= s; }

    friend bool operator==(const QVec &a, const QVec &b) { return a.coords_ == b.coords_; }
    /// Lexicographic order on the coordinates.
    friend std::strong_ordering operator<=>(const QVec &a, const QVec &b);

    /// "(p1/q1,p2/q2,...)"
    std::string str() const;
    std::vector<std::string> to_strings() const;
    std::vector<double> to_doubles() const;

   private:
    std::vector<Rational> coords_;
};

std::ostream &operator<<(std::ostream &os, const QVec &v);

/// Positive rescaling to the primitive integer vector on the same ray.
/// The zero vector is returned unchanged.
QVec primitive(const QVec &v);

/// Sum of a nonempty list of vectors of equal size.
QVec sum(std::span<const QVec> vs, std::size_t dim);

/// Throws DimensionMismatch unless every vector has size `dim`.
void require_dim(std::span<const QVec> vs, std::size_t dim, const char *what);

}  // namespace gpt
