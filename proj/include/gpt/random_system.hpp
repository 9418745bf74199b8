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

#include <random>

#include "gpt/system.hpp"

namespace gpt {

enum class RandomKind { Unrestricted, Noisy, Cut };

/// Random rational point in [-bound, bound] with denominators up to 4.
Rational random_rational(std::mt19937_64 &rng, long bound = 4);

/// Convex combination of the points of p with random positive integer weights.
QVec random_convex_combination(std::mt19937_64 &rng, const Polyhedron &p);

/// Random full-dimensional state polytope in the u.w = 1 slice of R^dim
/// together with an effect space of the requested kind:
///   Unrestricted  E = E(S)
///   Noisy         E = noisy_effects(E(S), u, p) for a random p in (0,1)
///   Cut           E(S) cut by a random halfspace through an interior point,
///                 symmetrized as E n (u - E) and joined with 0 and u.
GptSystem random_valid_system(std::mt19937_64 &rng, std::size_t dim, RandomKind kind);

/// Random dimension in [2, 5] and random kind.
GptSystem random_valid_system(std::mt19937_64 &rng);

/// Random matrix with small integer entries and nonzero determinant.
Matrix random_invertible(std::mt19937_64 &rng, std::size_t n);

}  // namespace gpt
