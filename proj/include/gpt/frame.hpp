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

#include <utility>
#include <vector>

#include "gpt/observable.hpp"
#include "gpt/system.hpp"

namespace gpt {

struct FrameSample {
    QVec effect;
    Rational value;
};

/// Finitely many values of a candidate frame function.
struct FrameSamples {
    std::vector<FrameSample> pairs;

    /// Samples v(e) = e.w at the given effects.
    static FrameSamples induced(const QVec &state, std::span<const QVec> effects);
};

/// True iff w satisfies e.w >= 0 for every e in E and u.w = 1.
bool in_states_from_effects(const EffectSpace &e, const QVec &w);

/// The unique w with e.w = v(e) for every sample, which must also lie in
/// W(E). Throws InvalidSample, UnderDetermined, InconsistentSamples,
/// NotAState.
QVec recover_state(const FrameSamples &v, const GptSystem &sys);

/// Every value lies in [0,1] and every listed observable's values sum to 1.
/// Throws MissingSample when an outcome effect has no sample.
bool frame_check(const FrameSamples &v, std::span<const Observable> observables);

/// c = a - b with a, b in E^+, following the interior-point construction:
/// e is the vertex centroid of E and eps is halved from 1 until e + eps c
/// lies in E^+; then a = (e + eps c)/eps and b = e/eps.
std::pair<QVec, QVec> decompose_in_cone(const QVec &c, const EffectSpace &e);

}  // namespace gpt
