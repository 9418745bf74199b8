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

#include "gpt/geometry.hpp"

#include <algorithm>
#include <functional>

#include "gpt/double_description.hpp"
#include "gpt/error.hpp"
#include "gpt/linalg.hpp"

namespace gpt {
namespace {

QVec lift(const QVec &x, const Rational &t) {
    std::vector<Rational> c(x.begin(), x.end());
    c.push_back(t);
    return QVec(std::move(c));
}

QVec head(const QVec &z) {
    return QVec(std::vector<Rational>(z.begin(), z.end() - 1));
}

void sort_unique(std::vector<QVec> &v) {
    std::sort(v.begin(), v.end(), std::greater<>());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<QVec> nonzero(std::span<const QVec> vs) {
    std::vector<QVec> out;
    for (const auto &v : vs)
        if (!v.is_zero()) out.push_back(v);
    return out;
}

}  // namespace

// A polyhedron P in R^dim is handled through its homogenization, the cone
// C = cl{(t x, t) : x in P, t >= 0} in R^{dim+1}. `primal` generates C and
// `dual` generates C^*; the rays of C^* are exactly the facets of C.
Polyhedron Polyhedron::assemble(std::size_t dim, const ConeGenerators &primal, const ConeGenerators &dual) {
    Polyhedron p;
    p.dim_ = dim;
    for (const auto &z : primal.rays) {
        const Rational &t = z[dim];
        if (t > 0) {
            p.points_.push_back(head(z) / t);
        } else {
            p.rays_.push_back(head(z));
        }
    }
    for (const auto &l : primal.lines) p.lines_.push_back(head(l));
    sort_unique(p.points_);
    sort_unique(p.rays_);

    for (const auto &y : dual.rays) {
        QVec a = head(y);
        if (a.is_zero()) continue;  // t >= 0
        p.facets_.push_back({std::move(a), -y[dim]});
    }
    for (const auto &y : dual.lines) {
        QVec a = head(y);
        p.equalities_.push_back({std::move(a), -y[dim]});
    }
    std::sort(p.facets_.begin(), p.facets_.end(), [](const Halfspace &a, const Halfspace &b) {
        return a.normal != b.normal ? a.normal > b.normal : a.offset > b.offset;
    });
    return p;
}

Polyhedron Polyhedron::from_generators(std::size_t dim, std::span<const QVec> points, std::span<const QVec> rays,
                                       std::span<const QVec> lines) {
    if (points.empty()) throw Error(ErrorCode::EmptyInput, "a polyhedron needs at least one point");
    require_dim(points, dim, "point");
    require_dim(rays, dim, "ray");
    require_dim(lines, dim, "line");

    std::vector<QVec> gens;
    for (const auto &p : points) gens.push_back(lift(p, 1));
    for (const auto &r : rays)
        if (!r.is_zero()) gens.push_back(lift(r, 0));
    std::vector<QVec> gen_lines;
    for (const auto &l : lines)
        if (!l.is_zero()) gen_lines.push_back(lift(l, 0));

    ConeGenerators dual = enumerate_generators(gens, gen_lines, dim + 1);
    ConeGenerators primal = enumerate_generators(dual.rays, dual.lines, dim + 1);
    return assemble(dim, primal, dual);
}

Polyhedron Polyhedron::from_constraints(std::size_t dim, std::span<const Halfspace> halfspaces,
                                        std::span<const Hyperplane> hyperplanes) {
    std::vector<QVec> ineq, eq;
    for (const auto &h : halfspaces) {
        if (h.normal.size() != dim) throw Error(ErrorCode::DimensionMismatch, "halfspace normal");
        ineq.push_back(lift(h.normal, -h.offset));
    }
    for (const auto &h : hyperplanes) {
        if (h.normal.size() != dim) throw Error(ErrorCode::DimensionMismatch, "hyperplane normal");
        eq.push_back(lift(h.normal, -h.offset));
    }
    return from_homogeneous_constraints(dim, std::move(ineq), std::move(eq));
}

Polyhedron Polyhedron::from_homogeneous_constraints(std::size_t dim, std::vector<QVec> ineq, std::vector<QVec> eq) {
    ineq.push_back(QVec::basis(dim + 1, dim));
    ConeGenerators primal = enumerate_generators(ineq, eq, dim + 1);
    bool any_point = std::any_of(primal.rays.begin(), primal.rays.end(), [&](const QVec &z) { return z[dim] > 0; });
    if (!any_point) throw Error(ErrorCode::EmptyIntersection, "constraints have no common point");
    ConeGenerators dual = enumerate_generators(primal.rays, primal.lines, dim + 1);
    return assemble(dim, primal, dual);
}

bool Polyhedron::contains(const QVec &x) const {
    if (x.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "membership query");
    for (const auto &e : equalities_)
        if (!e.contains(x)) return false;
    for (const auto &f : facets_)
        if (!f.contains(x)) return false;
    return true;
}

bool Polyhedron::relative_interior_contains(const QVec &x) const {
    if (x.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "membership query");
    for (const auto &e : equalities_)
        if (!e.contains(x)) return false;
    for (const auto &f : facets_)
        if (f.normal.dot(x) <= f.offset) return false;
    return true;
}

bool Polyhedron::subset_of(const Polyhedron &other) const {
    if (other.dim_ != dim_) throw Error(ErrorCode::DimensionMismatch, "inclusion test");
    for (const auto &p : points_)
        if (!other.contains(p)) return false;
    for (const auto &r : rays_) {
        for (const auto &e : other.equalities_)
            if (e.normal.dot(r) != 0) return false;
        for (const auto &f : other.facets_)
            if (f.normal.dot(r) < 0) return false;
    }
    for (const auto &l : lines_) {
        for (const auto &e : other.equalities_)
            if (e.normal.dot(l) != 0) return false;
        for (const auto &f : other.facets_)
            if (f.normal.dot(l) != 0) return false;
    }
    return true;
}

const std::vector<QVec> &Polyhedron::vertices() const {
    if (!is_bounded()) throw Error(ErrorCode::Unbounded, "polyhedron has no finite vertex description");
    return points_;
}

std::vector<Halfspace> Polyhedron::halfspaces() const {
    std::vector<Halfspace> out = facets_;
    for (const auto &e : equalities_) {
        out.push_back({e.normal, e.offset});
        out.push_back({-e.normal, -e.offset});
    }
    return out;
}

QVec Polyhedron::centroid() const {
    QVec c = sum(points_, dim_);
    return c / Rational(static_cast<long>(points_.size()));
}

bool operator==(const Polyhedron &a, const Polyhedron &b) {
    return a.dim_ == b.dim_ && a.points_ == b.points_ && a.rays_ == b.rays_ && a.lines_ == b.lines_ &&
           a.facets_ == b.facets_ && a.equalities_ == b.equalities_;
}

Cone Cone::from_generators(std::size_t dim, std::span<const QVec> rays, std::span<const QVec> lines) {
    require_dim(rays, dim, "ray");
    require_dim(lines, dim, "line");
    std::vector<QVec> r = nonzero(rays), l = nonzero(lines);
    ConeGenerators dual = enumerate_generators(r, l, dim);
    ConeGenerators primal = enumerate_generators(dual.rays, dual.lines, dim);
    return assemble(dim, std::move(primal), std::move(dual));
}

Cone Cone::from_constraints(std::size_t dim, std::span<const QVec> normals, std::span<const QVec> equality_normals) {
    require_dim(normals, dim, "cone normal");
    require_dim(equality_normals, dim, "cone equality normal");
    ConeGenerators primal = enumerate_generators(normals, equality_normals, dim);
    ConeGenerators dual = enumerate_generators(primal.rays, primal.lines, dim);
    return assemble(dim, std::move(primal), std::move(dual));
}

Cone Cone::assemble(std::size_t dim, ConeGenerators primal, ConeGenerators dual) {
    Cone c;
    c.dim_ = dim;
    c.rays_ = std::move(primal.rays);
    c.lines_ = std::move(primal.lines);
    c.normals_ = std::move(dual.rays);
    c.equality_normals_ = std::move(dual.lines);
    sort_unique(c.rays_);
    sort_unique(c.normals_);
    return c;
}

bool Cone::contains(const QVec &x) const {
    if (x.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "cone membership query");
    for (const auto &m : equality_normals_)
        if (m.dot(x) != 0) return false;
    for (const auto &n : normals_)
        if (n.dot(x) < 0) return false;
    return true;
}

bool Cone::interior_contains(const QVec &x) const {
    if (x.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "cone membership query");
    if (!equality_normals_.empty()) return false;
    for (const auto &n : normals_)
        if (n.dot(x) <= 0) return false;
    return true;
}

bool Cone::subset_of(const Cone &other) const {
    if (other.dim_ != dim_) throw Error(ErrorCode::DimensionMismatch, "cone inclusion test");
    for (const auto &r : rays_)
        if (!other.contains(r)) return false;
    for (const auto &l : lines_)
        if (!other.contains(l) || !other.contains(-l)) return false;
    return true;
}

Polyhedron Cone::as_polyhedron() const {
    QVec apex(dim_);
    return Polyhedron::from_generators(dim_, std::span(&apex, 1), rays_, lines_);
}

bool operator==(const Cone &a, const Cone &b) {
    return a.dim_ == b.dim_ && a.rays_ == b.rays_ && a.lines_ == b.lines_ && a.normals_ == b.normals_ &&
           a.equality_normals_ == b.equality_normals_;
}

Polyhedron hull_reduce(std::span<const QVec> points) {
    if (points.empty()) throw Error(ErrorCode::EmptyInput, "hull of an empty point list");
    const std::size_t dim = points.front().size();
    require_dim(points, dim, "hull_reduce");
    return Polyhedron::from_generators(dim, points);
}

std::vector<Halfspace> vrep_to_hrep(const Polyhedron &p) {
    return p.halfspaces();
}

Polyhedron hrep_to_vrep(std::size_t dim, std::span<const Halfspace> halfspaces) {
    Polyhedron p = Polyhedron::from_constraints(dim, halfspaces);
    if (!p.is_bounded()) throw Error(ErrorCode::Unbounded, "halfspace intersection is unbounded");
    return p;
}

Cone positive_cone(const Polyhedron &p) {
    std::vector<QVec> gens = p.points();
    gens.insert(gens.end(), p.rays().begin(), p.rays().end());
    return Cone::from_generators(p.dim(), gens, p.lines());
}

Cone cone_of(std::size_t dim, std::span<const QVec> rays) {
    return Cone::from_generators(dim, rays);
}

Cone dual_cone(const Cone &c) {
    return Cone::from_constraints(c.dim(), c.rays(), c.lines());
}

Cone cone_intersect(const Cone &a, const Cone &b) {
    if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "cone intersection");
    std::vector<QVec> n = a.normals(), e = a.equality_normals();
    n.insert(n.end(), b.normals().begin(), b.normals().end());
    e.insert(e.end(), b.equality_normals().begin(), b.equality_normals().end());
    return Cone::from_constraints(a.dim(), n, e);
}

Polyhedron polytope_intersect(const Polyhedron &a, const Polyhedron &b) {
    if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "polyhedron intersection");
    std::vector<Halfspace> h = a.facets();
    h.insert(h.end(), b.facets().begin(), b.facets().end());
    std::vector<Hyperplane> e = a.equalities();
    e.insert(e.end(), b.equalities().begin(), b.equalities().end());
    return Polyhedron::from_constraints(a.dim(), h, e);
}

Polyhedron slice_unchecked(const Cone &c, const Hyperplane &h) {
    if (h.normal.size() != c.dim()) throw Error(ErrorCode::DimensionMismatch, "slice hyperplane");
    std::vector<Halfspace> hs;
    for (const auto &n : c.normals()) hs.push_back({n, 0});
    std::vector<Hyperplane> eqs;
    for (const auto &m : c.equality_normals()) eqs.push_back({m, 0});
    eqs.push_back(h);
    return Polyhedron::from_constraints(c.dim(), hs, eqs);
}

Polyhedron slice(const Cone &c, const Hyperplane &h) {
    Polyhedron p = slice_unchecked(c, h);
    if (!p.is_bounded()) throw Error(ErrorCode::Unbounded, "cone slice is unbounded");
    return p;
}

Polyhedron reflect_through(const QVec &apex, const Polyhedron &p) {
    std::vector<QVec> pts, rays;
    for (const auto &x : p.points()) pts.push_back(apex - x);
    for (const auto &r : p.rays()) rays.push_back(-r);
    return Polyhedron::from_generators(p.dim(), pts, rays, p.lines());
}

Polyhedron linear_image(const Matrix &m, const Polyhedron &p) {
    std::vector<QVec> pts, rays, lines;
    for (const auto &x : p.points()) pts.push_back(m.apply(x));
    for (const auto &r : p.rays()) rays.push_back(m.apply(r));
    for (const auto &l : p.lines()) lines.push_back(m.apply(l));
    return Polyhedron::from_generators(m.rows(), pts, rays, lines);
}

bool set_equal(const Polyhedron &a, const Polyhedron &b) {
    if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "set comparison");
    return a.subset_of(b) && b.subset_of(a);
}

bool set_equal(const Cone &a, const Cone &b) {
    if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "set comparison");
    return a.subset_of(b) && b.subset_of(a);
}

bool contains(const Polyhedron &p, const QVec &x) {
    return p.contains(x);
}

bool contains(const Cone &c, const QVec &x) {
    return c.contains(x);
}

}  // namespace gpt
