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

#include "gpt/observable.hpp"

namespace gpt {

QVec Observable::total() const {
    if (outcomes.empty()) throw Error(ErrorCode::EmptyInput, "observable without outcomes");
    return sum(outcomes, outcomes.front().size());
}

bool is_observable(std::span<const QVec> outcomes, const GptSystem &sys) {
    const std::size_t n = outcomes.size();
    if (n > kMaxOutcomes) {
        throw Error(ErrorCode::TooManyOutcomes,
                    std::to_string(n) + " outcomes exceed the limit of " + std::to_string(kMaxOutcomes));
    }
    if (n == 0) return false;
    require_dim(outcomes, sys.ambient_dim(), "outcome");
    const Polyhedron &e = sys.effects().body();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        QVec s(sys.ambient_dim());
        for (std::size_t j = 0; j < n; ++j)
            if (mask & (1u << j)) s += outcomes[j];
        if (mask == (1u << n) - 1 && s != sys.unit()) return false;
        if (!e.contains(s)) return false;
    }
    return true;
}

bool is_observable(const Observable &o, const GptSystem &sys) {
    return is_observable(o.outcomes, sys);
}

Observable noisy_observable(const Observable &o, const Rational &p) {
    if (p <= 0 || p > 1) throw Error(ErrorCode::ProbabilityOutOfRange, "noise parameter " + to_string(p));
    QVec u = o.total();
    Observable out;
    out.label = o.label.empty() ? "" : o.label + "_p";
    for (const auto &e : o.outcomes) out.outcomes.push_back(e * p);
    out.outcomes.push_back(u * (1 - p));
    return out;
}

Observable mix_observables(std::span<const std::pair<Observable, Rational>> parts) {
    if (parts.empty()) throw Error(ErrorCode::EmptyInput, "nothing to mix");
    Rational total = 0;
    std::size_t len = 0;
    const std::size_t dim = parts.front().first.total().size();
    for (const auto &[o, w] : parts) {
        if (w < 0) throw Error(ErrorCode::WeightsNotNormalized, "negative weight " + to_string(w));
        require_dim(o.outcomes, dim, "mixed outcome");
        total += w;
        len = std::max(len, o.size());
    }
    if (total != 1) throw Error(ErrorCode::WeightsNotNormalized, "weights sum to " + to_string(total));
    Observable out;
    out.outcomes.assign(len, QVec(dim));
    for (const auto &[o, w] : parts)
        for (std::size_t j = 0; j < o.size(); ++j) out.outcomes[j] += o.outcomes[j] * w;
    return out;
}

Observable coarse_grain(const Observable &o, std::span<const std::vector<std::size_t>> blocks) {
    std::vector<bool> seen(o.size(), false);
    const std::size_t dim = o.total().size();
    Observable out;
    for (const auto &block : blocks) {
        QVec s(dim);
        for (std::size_t j : block) {
            if (j >= o.size()) throw Error(ErrorCode::InvalidPartition, "index " + std::to_string(j) + " out of range");
            if (seen[j]) throw Error(ErrorCode::InvalidPartition, "index " + std::to_string(j) + " repeated");
            seen[j] = true;
            s += o.outcomes[j];
        }
        out.outcomes.push_back(std::move(s));
    }
    for (std::size_t j = 0; j < o.size(); ++j)
        if (!seen[j]) throw Error(ErrorCode::InvalidPartition, "index " + std::to_string(j) + " not covered");
    return out;
}

Observable post_process(const Observable &o, const std::vector<std::vector<Rational>> &q) {
    const std::size_t dim = o.total().size();
    for (const auto &row : q)
        if (row.size() != o.size()) throw Error(ErrorCode::InvalidKernel, "kernel row length differs from outcome count");
    for (std::size_t j = 0; j < o.size(); ++j) {
        Rational col = 0;
        for (const auto &row : q) {
            if (row[j] < 0) throw Error(ErrorCode::InvalidKernel, "negative kernel entry");
            col += row[j];
        }
        if (col != 1) throw Error(ErrorCode::InvalidKernel, "kernel column " + std::to_string(j) + " sums to " + to_string(col));
    }
    Observable out;
    for (const auto &row : q) {
        QVec s(dim);
        for (std::size_t j = 0; j < o.size(); ++j)
            if (row[j] != 0) s += o.outcomes[j] * row[j];
        out.outcomes.push_back(std::move(s));
    }
    return out;
}

std::vector<Observable> dichotomic_extremal_observables(const GptSystem &sys) {
    const QVec &u = sys.unit();
    std::vector<Observable> out;
    for (const auto &e : sys.effects().vertices()) {
        if (e.is_zero() || e == u) continue;
        out.push_back({{e, u - e}, "D" + e.str()});
    }
    return out;
}

}  // namespace gpt
