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
#include <span>
#include <vector>

#include "gpt/qvec.hpp"

namespace gpt {

/// Generator description of a polyhedral cone: cone(rays) + span(lines).
struct ConeGenerators {
    /// Extreme rays, one per extreme direction, reduced modulo `lines` and
    /// scaled to primitive integer vectors. Sorted.
    std::vector<QVec> rays;
    /// Reduced row echelon basis of the lineality space.
    std::vector<QVec> lines;
};

/// Double-description conversion of {x : a.x >= 0 (a in inequalities),
/// c.x = 0 (c in equalities)} into generators.
///
/// The lineality space is split off first and the remaining pointed cone is
/// parametrized inside the equality subspace, where the inequality system has
/// full column rank. The incremental step keeps only adjacent (+,-) pairs,
/// with adjacency decided by the combinatorial test on zero sets.
ConeGenerators enumerate_generators(std::span<const QVec> inequalities, std::span<const QVec> equalities,
                                    std::size_t dim);

}  // namespace gpt
