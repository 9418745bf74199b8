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

#include "gpt/double_description.hpp"
#include "gpt/linalg.hpp"
#include "gpt/qvec.hpp"

namespace gpt {

/// {x : normal . x >= offset}
struct Halfspace {
    QVec normal;
    Rational offset;

    bool contains(const QVec &x) const { return normal.dot(x) >= offset; }
    friend bool operator==(const Halfspace &, const Halfspace &) = default;
};

/// {x : normal . x == offset}
struct Hyperplane {
    QVec normal;
    Rational offset;

    bool contains(const QVec &x) const { return normal.dot(x) == offset; }
    friend bool operator==(const Hyperplane &, const Hyperplane &) = default;
};

/// Closed convex polyhedron held in both representations:
///   V: conv(points) + cone(rays) + span(lines)
///   H: facets (irredundant halfspaces) and equalities (affine hull).
/// Both are canonical: points/rays are reduced modulo the lineality space and
/// sorted, facet normals are reduced modulo the equality normals and scaled
/// to primitive integers. Values are immutable once constructed.
class Polyhedron {
   public:
    /// Convex hull of points plus the cone of rays and span of lines.
    /// Throws EmptyInput when no point is given.
    static Polyhedron from_generators(std::size_t dim, std::span<const QVec> points,
                                      std::span<const QVec> rays = {}, std::span<const QVec> lines = {});
    /// Intersection of halfspaces and hyperplanes. Throws EmptyIntersection.
    static Polyhedron from_constraints(std::size_t dim, std::span<const Halfspace> halfspaces,
                                       std::span<const Hyperplane> hyperplanes = {});

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<QVec> &points() const noexcept { return points_; }
    const std::vector<QVec> &rays() const noexcept { return rays_; }
    const std::vector<QVec> &lines() const noexcept { return lines_; }
    const std::vector<Halfspace> &facets() const noexcept { return facets_; }
    const std::vector<Hyperplane> &equalities() const noexcept { return equalities_; }

    bool is_bounded() const noexcept { return rays_.empty() && lines_.empty(); }
    /// Dimension of the affine hull.
    std::size_t affine_dimension() const noexcept { return dim_ - equalities_.size(); }
    /// Vertices of a bounded polyhedron. Throws Unbounded otherwise.
    const std::vector<QVec> &vertices() const;

    /// H-rep as a flat halfspace list; each equality becomes a pair.
    std::vector<Halfspace> halfspaces() const;

    bool contains(const QVec &x) const;
    /// Strictly inside every facet and on every equality (relative interior).
    bool relative_interior_contains(const QVec &x) const;
    /// Exact inclusion test through the generators of *this.
    bool subset_of(const Polyhedron &other) const;

    /// Average of the points; lies in the relative interior when bounded.
    QVec centroid() const;

    friend bool operator==(const Polyhedron &a, const Polyhedron &b);

   private:
    Polyhedron() = default;
    static Polyhedron from_homogeneous_constraints(std::size_t dim, std::vector<QVec> ineq, std::vector<QVec> eq);
    static Polyhedron assemble(std::size_t dim, const ConeGenerators &primal,
                               const ConeGenerators &dual);

    std::size_t dim_ = 0;
    std::vector<QVec> points_, rays_, lines_;
    std::vector<Halfspace> facets_;
    std::vector<Hyperplane> equalities_;
};

/// Polyhedral cone {x : n.x >= 0 for n in normals, m.x = 0 for m in
/// equality_normals} = cone(rays) + span(lines), both representations kept.
class Cone {
   public:
    static Cone from_generators(std::size_t dim, std::span<const QVec> rays, std::span<const QVec> lines = {});
    static Cone from_constraints(std::size_t dim, std::span<const QVec> normals,
                                 std::span<const QVec> equality_normals = {});

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<QVec> &rays() const noexcept { return rays_; }
    const std::vector<QVec> &lines() const noexcept { return lines_; }
    const std::vector<QVec> &normals() const noexcept { return normals_; }
    const std::vector<QVec> &equality_normals() const noexcept { return equality_normals_; }

    bool is_pointed() const noexcept { return lines_.empty(); }
    bool contains(const QVec &x) const;
    bool interior_contains(const QVec &x) const;
    bool subset_of(const Cone &other) const;

    /// The cone as a polyhedron with apex 0.
    Polyhedron as_polyhedron() const;

    friend bool operator==(const Cone &a, const Cone &b);

   private:
    Cone() = default;
    static Cone assemble(std::size_t dim, ConeGenerators primal, ConeGenerators dual);
    std::size_t dim_ = 0;
    std::vector<QVec> rays_, lines_, normals_, equality_normals_;
};

// Operations on the two representations.

/// Irredundant vertex set of conv(points). Throws EmptyInput, DimensionMismatch.
Polyhedron hull_reduce(std::span<const QVec> points);
/// Facets plus each equality as a pair of opposite halfspaces.
std::vector<Halfspace> vrep_to_hrep(const Polyhedron &p);
/// Throws Unbounded, EmptyIntersection.
Polyhedron hrep_to_vrep(std::size_t dim, std::span<const Halfspace> halfspaces);

/// A^+ = {x a : x >= 0, a in A}. Zero generators are dropped.
Cone positive_cone(const Polyhedron &p);
/// Cone generated by the given vectors taken verbatim as rays.
Cone cone_of(std::size_t dim, std::span<const QVec> rays);
/// A^* = {b : a.b >= 0 for all a in A}; one halfspace per generator of c.
Cone dual_cone(const Cone &c);

Cone cone_intersect(const Cone &a, const Cone &b);
Polyhedron polytope_intersect(const Polyhedron &a, const Polyhedron &b);
/// c intersected with the hyperplane h, which must be bounded. Throws Unbounded.
Polyhedron slice(const Cone &c, const Hyperplane &h);
/// Same intersection without the boundedness requirement.
Polyhedron slice_unchecked(const Cone &c, const Hyperplane &h);
/// {apex - x : x in p}
Polyhedron reflect_through(const QVec &apex, const Polyhedron &p);
/// Image of p under x -> m x.
Polyhedron linear_image(const Matrix &m, const Polyhedron &p);

bool set_equal(const Polyhedron &a, const Polyhedron &b);
bool set_equal(const Cone &a, const Cone &b);
bool contains(const Polyhedron &p, const QVec &x);
bool contains(const Cone &c, const QVec &x);

}  // namespace gpt
