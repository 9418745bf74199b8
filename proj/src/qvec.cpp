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

#include "gpt/qvec.hpp"

#include <boost/multiprecision/integer.hpp>
#include <ostream>
#include <sstream>

#include "gpt/error.hpp"

namespace gpt {

QVec QVec::parse(std::span<const std::string> entries) {
    std::vector<Rational> c;
    c.reserve(entries.size());
    for (const auto &e : entries) c.push_back(parse_rational(e));
    return QVec(std::move(c));
}

QVec QVec::basis(std::size_t dim, std::size_t k) {
    QVec v(dim);
    v[k] = 1;
    return v;
}

bool QVec::is_zero() const {
    for (const auto &c : coords_)
        if (c != 0) return false;
    return true;
}

Rational QVec::dot(const QVec &other) const {
    if (other.size() != size()) {
        throw Error(ErrorCode::DimensionMismatch, "dot product of vectors of size " + std::to_string(size()) +
                                                      " and " + std::to_string(other.size()));
    }
    Rational acc = 0;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] != 0 && other.coords_[i] != 0) acc += coords_[i] * other.coords_[i];
    }
    return acc;
}

QVec &QVec::operator+=(const QVec &other) {
    if (other.size() != size()) throw Error(ErrorCode::DimensionMismatch, "vector sum");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
    return *this;
}

QVec &QVec::operator-=(const QVec &other) {
    if (other.size() != size()) throw Error(ErrorCode::DimensionMismatch, "vector difference");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
    return *this;
}

QVec &QVec::operator*=(const Rational &s) {
    for (auto &c : coords_) c *= s;
    return *this;
}

QVec &QVec::operator/=(const Rational &s) {
    for (auto &c : coords_) c /= s;
    return *this;
}

std::strong_ordering operator<=>(const QVec &a, const QVec &b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] < b[i]) return std::strong_ordering::less;
        if (b[i] < a[i]) return std::strong_ordering::greater;
    }
    return a.size() <=> b.size();
}

std::string QVec::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) out += ",";
        out += to_string(coords_[i]);
    }
    return out + ")";
}

std::vector<std::string> QVec::to_strings() const {
    std::vector<std::string> out;
    out.reserve(coords_.size());
    for (const auto &c : coords_) out.push_back(to_string(c));
    return out;
}

std::vector<double> QVec::to_doubles() const {
    std::vector<double> out;
    out.reserve(coords_.size());
    for (const auto &c : coords_) out.push_back(to_double(c));
    return out;
}

std::ostream &operator<<(std::ostream &os, const QVec &v) {
    return os << v.str();
}

QVec primitive(const QVec &v) {
    Integer l = 1;
    for (const auto &c : v) {
        if (c != 0) l = boost::multiprecision::lcm(l, Integer(denominator(c)));
    }
    Integer g = 0;
    for (const auto &c : v) {
        if (c != 0) {
            Integer k = numerator(c) * (l / denominator(c));
            g = boost::multiprecision::gcd(g, Integer(abs(k)));
        }
    }
    if (g == 0) return v;
    return v * Rational(l, g);
}

QVec sum(std::span<const QVec> vs, std::size_t dim) {
    QVec acc(dim);
    for (const auto &v : vs) acc += v;
    return acc;
}

void require_dim(std::span<const QVec> vs, std::size_t dim, const char *what) {
    for (const auto &v : vs) {
        if (v.size() != dim) {
            throw Error(ErrorCode::DimensionMismatch, std::string(what) + ": expected dimension " +
                                                          std::to_string(dim) + ", got " +
                                                          std::to_string(v.size()));
        }
    }
}

}  // namespace gpt
