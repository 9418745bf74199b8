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

#include "gpt/double_description.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>

#include "gpt/error.hpp"
#include "gpt/linalg.hpp"

namespace gpt {
namespace {

struct Ray {
    QVec z;
    boost::dynamic_bitset<> zeros;
};

// Extreme rays of the pointed cone {z : A z >= 0}, A of full column rank k.
std::vector<QVec> pointed_extreme_rays(const std::vector<QVec> &a, std::size_t k) {
    const std::size_t m = a.size();

    // Pick k linearly independent rows for the initial simplicial cone.
    std::vector<std::size_t> basis_rows;
    std::vector<QVec> picked;
    for (std::size_t i = 0; i < m && basis_rows.size() < k; ++i) {
        picked.push_back(a[i]);
        if (rank(picked, k) == picked.size()) {
            basis_rows.push_back(i);
        } else {
            picked.pop_back();
        }
    }
    if (basis_rows.size() != k) {
        throw Error(ErrorCode::DimensionMismatch, "inequality system is not of full column rank");
    }

    // Constraint order: basis rows first, then the rest.
    std::vector<std::size_t> order = basis_rows;
    {
        std::vector<bool> used(m, false);
        for (auto i : basis_rows) used[i] = true;
        for (std::size_t i = 0; i < m; ++i)
            if (!used[i]) order.push_back(i);
    }

    // Columns of the inverse of the basis block generate the initial cone.
    Matrix block(picked);
    Matrix inv = block.inverse();
    std::vector<Ray> rays;
    for (std::size_t j = 0; j < k; ++j) {
        Ray r;
        r.z = QVec(k);
        for (std::size_t i = 0; i < k; ++i) r.z[i] = inv(i, j);
        r.z = primitive(r.z);
        r.zeros.resize(m);
        for (std::size_t i = 0; i < k; ++i)
            if (i != j) r.zeros.set(i);
        rays.push_back(std::move(r));
    }

    for (std::size_t step = k; step < m; ++step) {
        const QVec &row = a[order[step]];
        if (row.is_zero()) {
            for (auto &r : rays) r.zeros.set(step);
            continue;
        }
        std::vector<Rational> s(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            s[i] = row.dot(rays[i].z);
            if (s[i] > 0) {
                pos.push_back(i);
            } else if (s[i] < 0) {
                neg.push_back(i);
            } else {
                rays[i].zeros.set(step);
            }
        }
        if (neg.empty()) continue;

        std::vector<Ray> next;
        next.reserve(rays.size());
        for (std::size_t i = 0; i < rays.size(); ++i)
            if (s[i] >= 0) next.push_back(rays[i]);

        for (auto p : pos) {
            for (auto q : neg) {
                boost::dynamic_bitset<> common = rays[p].zeros & rays[q].zeros;
                if (k >= 2 && common.count() + 2 < k) continue;
                bool adjacent = true;
                for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
                    if (o == p || o == q) continue;
                    if (common.is_subset_of(rays[o].zeros)) adjacent = false;
                }
                if (!adjacent) continue;
                Ray r;
                r.z = primitive(rays[q].z * s[p] - rays[p].z * s[q]);
                r.zeros = common;
                r.zeros.set(step);
                next.push_back(std::move(r));
            }
        }
        rays = std::move(next);
    }

    std::vector<QVec> out;
    out.reserve(rays.size());
    for (auto &r : rays) out.push_back(std::move(r.z));
    return out;
}

}  // namespace

ConeGenerators enumerate_generators(std::span<const QVec> inequalities, std::span<const QVec> equalities,
                                    std::size_t dim) {
    require_dim(inequalities, dim, "inequality normal");
    require_dim(equalities, dim, "equality normal");

    std::vector<QVec> all(inequalities.begin(), inequalities.end());
    all.insert(all.end(), equalities.begin(), equalities.end());

    ConeGenerators out;
    Echelon lineality = row_echelon(nullspace(all, dim), dim);
    out.lines = lineality.rows;

    // Subspace carrying the pointed part: equalities hold and x is orthogonal
    // to the lineality space.
    std::vector<QVec> subspace_constraints(equalities.begin(), equalities.end());
    subspace_constraints.insert(subspace_constraints.end(), out.lines.begin(), out.lines.end());
    std::vector<QVec> basis = nullspace(subspace_constraints, dim);
    const std::size_t k = basis.size();
    if (k == 0) return out;

    std::vector<QVec> reduced;
    reduced.reserve(inequalities.size());
    for (const auto &row : inequalities) {
        QVec r(k);
        for (std::size_t j = 0; j < k; ++j) r[j] = row.dot(basis[j]);
        reduced.push_back(std::move(r));
    }

    for (const auto &z : pointed_extreme_rays(reduced, k)) {
        QVec x(dim);
        for (std::size_t j = 0; j < k; ++j)
            if (z[j] != 0) x += basis[j] * z[j];
        out.rays.push_back(primitive(lineality.reduce(std::move(x))));
    }
    std::sort(out.rays.begin(), out.rays.end());
    out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
    return out;
}

}  // namespace gpt
