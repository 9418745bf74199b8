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

#include "gpt/random_system.hpp"

namespace gpt {

Rational random_rational(std::mt19937_64 &rng, long bound) {
    std::uniform_int_distribution<long> den(1, 4);
    long q = den(rng);
    std::uniform_int_distribution<long> num(-bound * q, bound * q);
    return Rational(num(rng), q);
}

QVec random_convex_combination(std::mt19937_64 &rng, const Polyhedron &p) {
    std::uniform_int_distribution<long> weight(1, 9);
    QVec acc(p.dim());
    Rational total = 0;
    for (const auto &x : p.points()) {
        Rational w = weight(rng);
        acc += x * w;
        total += w;
    }
    return acc / total;
}

GptSystem random_valid_system(std::mt19937_64 &rng, std::size_t dim, RandomKind kind) {
    if (dim < 2) throw Error(ErrorCode::DimensionMismatch, "random systems need dimension >= 2");
    const std::size_t d = dim - 1;
    std::uniform_int_distribution<std::size_t> count(d + 1, d + 4);

    Polyhedron body = [&] {
        for (;;) {
            std::vector<QVec> pts;
            std::size_t n = count(rng);
            for (std::size_t i = 0; i < n; ++i) {
                QVec x(dim);
                for (std::size_t j = 0; j < d; ++j) x[j] = random_rational(rng, 2);
                x[d] = 1;
                pts.push_back(x);
            }
            Polyhedron p = hull_reduce(pts);
            if (p.affine_dimension() == d) return p;
        }
    }();
    StateSpace s(std::move(body), QVec::unit(dim));
    const QVec &u = s.unit();
    Polyhedron es = unrestricted_effects(s);

    Polyhedron e = es;
    if (kind == RandomKind::Noisy) {
        std::uniform_int_distribution<long> num(1, 4);
        e = noisy_effects(es, u, Rational(num(rng), 5));
    } else if (kind == RandomKind::Cut) {
        const QVec centre = u / 2;
        std::uniform_int_distribution<std::size_t> pick(0, es.points().size() - 1);
        std::uniform_int_distribution<long> t(1, 9);
        for (;;) {
            // A point between the centre and a random vertex, and a normal
            // that keeps the centre strictly inside the cut.
            Rational lambda(t(rng), 10);
            QVec through = centre + (es.points()[pick(rng)] - centre) * lambda;
            QVec n(dim);
            for (std::size_t j = 0; j < dim; ++j) n[j] = random_rational(rng, 3);
            Rational side = n.dot(centre - through);
            if (side == 0) continue;
            if (side < 0) n = -n;
            std::vector<Halfspace> cut{{n, n.dot(through)}};
            Polyhedron half = polytope_intersect(es, Polyhedron::from_constraints(dim, cut));
            Polyhedron sym = polytope_intersect(half, reflect_through(u, half));
            std::vector<QVec> pts = sym.vertices();
            pts.push_back(QVec(dim));
            pts.push_back(u);
            e = hull_reduce(pts);
            break;
        }
    }
    return validate_system(std::move(s), EffectSpace(std::move(e), u), "random");
}

GptSystem random_valid_system(std::mt19937_64 &rng) {
    std::uniform_int_distribution<std::size_t> dim(2, 5);
    std::uniform_int_distribution<int> kind(0, 2);
    std::size_t n = dim(rng);
    return random_valid_system(rng, n, static_cast<RandomKind>(kind(rng)));
}

Matrix random_invertible(std::mt19937_64 &rng, std::size_t n) {
    std::uniform_int_distribution<long> entry(-3, 3);
    for (;;) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
        if (m.determinant() != 0) return m;
    }
}

}  // namespace gpt
