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

#include "gpt/frame.hpp"

#include <map>

namespace gpt {

FrameSamples FrameSamples::induced(const QVec &state, std::span<const QVec> effects) {
    FrameSamples s;
    for (const auto &e : effects) s.pairs.push_back({e, e.dot(state)});
    return s;
}

bool in_states_from_effects(const EffectSpace &e, const QVec &w) {
    if (w.size() != e.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "state length");
    if (e.unit().dot(w) != 1) return false;
    for (const auto &x : e.vertices())
        if (x.dot(w) < 0) return false;
    return true;
}

QVec recover_state(const FrameSamples &v, const GptSystem &sys) {
    const std::size_t dim = sys.ambient_dim();
    std::vector<QVec> rows;
    std::vector<Rational> rhs;
    for (const auto &[e, value] : v.pairs) {
        if (e.size() != dim) throw Error(ErrorCode::DimensionMismatch, "sample effect " + e.str());
        if (value < 0 || value > 1) throw Error(ErrorCode::InvalidSample, "value " + to_string(value) + " outside [0,1]");
        if (!sys.effects().body().contains(e)) throw Error(ErrorCode::InvalidSample, e.str() + " is not an effect");
        rows.push_back(e);
        rhs.push_back(value);
    }
    LinearSolution sol = solve_exact(rows, rhs, dim);
    switch (sol.status) {
        case LinearSolution::Status::Underdetermined:
            throw Error(ErrorCode::UnderDetermined, "sampled effects do not span");
        case LinearSolution::Status::Inconsistent:
            throw Error(ErrorCode::InconsistentSamples, "no linear functional matches every sample");
        case LinearSolution::Status::Unique: break;
    }
    if (!in_states_from_effects(sys.effects(), sol.x)) {
        throw Error(ErrorCode::NotAState, sol.x.str() + " takes a value outside [0,1] on some effect");
    }
    return sol.x;
}

bool frame_check(const FrameSamples &v, std::span<const Observable> observables) {
    std::map<QVec, Rational> table;
    for (const auto &[e, value] : v.pairs) {
        if (value < 0 || value > 1) return false;
        auto [it, inserted] = table.emplace(e, value);
        if (!inserted && it->second != value) return false;
    }
    for (const auto &o : observables) {
        Rational total = 0;
        for (const auto &e : o.outcomes) {
            auto it = table.find(e);
            if (it == table.end()) throw Error(ErrorCode::MissingSample, "no sample for " + e.str());
            total += it->second;
        }
        if (total != 1) return false;
    }
    return true;
}

std::pair<QVec, QVec> decompose_in_cone(const QVec &c, const EffectSpace &e) {
    if (c.size() != e.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "vector length");
    Cone cone = positive_cone(e.body());
    QVec centre = e.body().centroid();
    Rational eps = 1;
    while (!cone.contains(centre + c * eps)) eps /= 2;
    return {(centre + c * eps) / eps, centre / eps};
}

}  // namespace gpt
