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

#include <string>
#include <utility>
#include <vector>

#include "gpt/system.hpp"

namespace gpt {

/// Ordered tuple of effects; a valid observable sums to the unit effect.
struct Observable {
    std::vector<QVec> outcomes;
    std::string label;

    std::size_t size() const noexcept { return outcomes.size(); }
    /// Sum of the outcomes. Throws EmptyInput.
    QVec total() const;
    friend bool operator==(const Observable &a, const Observable &b) { return a.outcomes == b.outcomes; }
};

inline constexpr std::size_t kMaxOutcomes = 16;

/// Outcomes sum to u and every subset sum lies in E. Throws TooManyOutcomes
/// beyond kMaxOutcomes.
bool is_observable(std::span<const QVec> outcomes, const GptSystem &sys);
bool is_observable(const Observable &o, const GptSystem &sys);

/// [[p e_1, ..., p e_n, (1-p) u]] with u the sum of o's outcomes.
/// Throws ProbabilityOutOfRange unless 0 < p <= 1.
Observable noisy_observable(const Observable &o, const Rational &p);

/// Outcome-wise convex combination, shorter tuples padded with zero effects.
/// Throws WeightsNotNormalized, EmptyInput, DimensionMismatch.
Observable mix_observables(std::span<const std::pair<Observable, Rational>> parts);

/// Outcome k of the result is the sum over block k. Blocks are 0-based and
/// must partition the outcome indices. Throws InvalidPartition.
Observable coarse_grain(const Observable &o, std::span<const std::vector<std::size_t>> blocks);

/// General classical post-processing: outcome k = sum_j q[k][j] e_j, where
/// each column q[.][j] is a probability distribution. Throws InvalidKernel.
Observable post_process(const Observable &o, const std::vector<std::vector<Rational>> &q);

/// [[e, u - e]] for each vertex e of E other than 0 and u.
std::vector<Observable> dichotomic_extremal_observables(const GptSystem &sys);

}  // namespace gpt
