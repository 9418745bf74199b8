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

#include "gpt/system.hpp"

#include <sstream>

namespace gpt {
namespace {

Polyhedron require_bounded(Polyhedron p, const char *what) {
    if (!p.is_bounded()) throw Error(ErrorCode::Unbounded, std::string(what) + " must be bounded");
    return p;
}

QVec require_unit(QVec u, std::size_t dim) {
    if (u.size() != dim) throw Error(ErrorCode::DimensionMismatch, "unit effect has the wrong length");
    if (u.is_zero()) throw Error(ErrorCode::InvalidSample, "unit effect is zero");
    return u;
}

// Every generator of b lies in E^+ (b's points, rays and both senses of lines).
std::optional<QVec> first_generator_outside(const Polyhedron &b, const Cone &cone) {
    for (const auto &x : b.points())
        if (!cone.contains(x)) return x;
    for (const auto &r : b.rays())
        if (!cone.contains(r)) return r;
    for (const auto &l : b.lines()) {
        if (!cone.contains(l)) return l;
        if (!cone.contains(-l)) return -l;
    }
    return std::nullopt;
}

}  // namespace

StateSpace::StateSpace(Polyhedron body, QVec unit)
    : body_(require_bounded(std::move(body), "state space")), unit_(require_unit(std::move(unit), body_.dim())) {}

StateSpace StateSpace::from_vertices(std::span<const QVec> states) {
    Polyhedron p = hull_reduce(states);
    QVec u = QVec::unit(p.dim());
    return StateSpace(std::move(p), std::move(u));
}

EffectSpace::EffectSpace(Polyhedron body, QVec unit)
    : body_(require_bounded(std::move(body), "effect space")), unit_(require_unit(std::move(unit), body_.dim())) {}

EffectSpace EffectSpace::from_vertices(std::span<const QVec> effects) {
    Polyhedron p = hull_reduce(effects);
    QVec u = QVec::unit(p.dim());
    return EffectSpace(std::move(p), std::move(u));
}

std::string_view to_string(Axiom a) {
    switch (a) {
        case Axiom::MissingZeroOrUnit: return "MissingZeroOrUnit";
        case Axiom::NotComplementClosed: return "NotComplementClosed";
        case Axiom::DoesNotSpan: return "DoesNotSpan";
        case Axiom::StateNormalizationViolated: return "StateNormalizationViolated";
        case Axiom::EffectOutOfRange: return "EffectOutOfRange";
    }
    return "?";
}

std::string ValidationReport::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < violations.size(); ++i) {
        if (i) os << "; ";
        os << to_string(violations[i].axiom) << " (" << violations[i].detail << ")";
    }
    return os.str();
}

ValidationReport check_system(const StateSpace &states, const EffectSpace &effects) {
    const std::size_t dim = states.ambient_dim();
    if (effects.ambient_dim() != dim) throw Error(ErrorCode::DimensionMismatch, "states and effects differ in length");
    ValidationReport r;
    const QVec &u = effects.unit();
    const QVec zero(dim);

    if (states.unit() != u) {
        r.violations.push_back({Axiom::StateNormalizationViolated, "state and effect spaces use different units"});
    }
    for (const auto &w : states.vertices()) {
        if (u.dot(w) != 1) {
            r.violations.push_back({Axiom::StateNormalizationViolated, "u.w = " + to_string(u.dot(w)) + " at " + w.str()});
            break;
        }
    }
    const Polyhedron &e = effects.body();
    if (!e.contains(zero)) r.violations.push_back({Axiom::MissingZeroOrUnit, "0 is not an effect"});
    if (!e.contains(u)) r.violations.push_back({Axiom::MissingZeroOrUnit, "u is not an effect"});
    for (const auto &x : e.vertices()) {
        if (!e.contains(u - x)) {
            r.violations.push_back({Axiom::NotComplementClosed, "u - e missing for e = " + x.str()});
            break;
        }
    }
    if (rank(e.vertices(), dim) < dim) {
        r.violations.push_back({Axiom::DoesNotSpan, "effects span rank " + std::to_string(rank(e.vertices(), dim))});
    }
    for (const auto &x : e.vertices()) {
        bool bad = false;
        for (const auto &w : states.vertices()) {
            Rational p = x.dot(w);
            if (p < 0 || p > 1) {
                r.violations.push_back(
                    {Axiom::EffectOutOfRange, "e.w = " + to_string(p) + " for e = " + x.str() + ", w = " + w.str()});
                bad = true;
                break;
            }
        }
        if (bad) break;
    }
    return r;
}

GptSystem validate_system(StateSpace states, EffectSpace effects, std::string name) {
    ValidationReport r = check_system(states, effects);
    if (!r.ok()) throw ValidationError(std::move(r));
    return GptSystem(std::move(states), std::move(effects), std::move(name));
}

Polyhedron unrestricted_effects(const StateSpace &s) {
    Cone dual = dual_cone(positive_cone(s.body()));
    Polyhedron lower = dual.as_polyhedron();
    Polyhedron upper = reflect_through(s.unit(), lower);
    return polytope_intersect(lower, upper);
}

Polyhedron states_from_effects_unchecked(const EffectSpace &e) {
    return slice_unchecked(dual_cone(positive_cone(e.body())), {e.unit(), 1});
}

Polyhedron states_from_effects(const EffectSpace &e) {
    Polyhedron w = states_from_effects_unchecked(e);
    if (!w.is_bounded()) throw Error(ErrorCode::Unbounded, "W(E) is unbounded; the effects do not span");
    return w;
}

Polyhedron noisy_effects(const Polyhedron &e, const QVec &unit, const Rational &p) {
    if (p <= 0 || p > 1) throw Error(ErrorCode::ProbabilityOutOfRange, "noise parameter " + to_string(p));
    std::vector<QVec> pts{QVec(e.dim()), unit};
    for (const auto &v : e.vertices()) {
        if (v.is_zero() || v == unit) continue;
        pts.push_back(v * p);
        pts.push_back(unit - v * p);
    }
    return hull_reduce(pts);
}

std::string_view to_string(Tag t) {
    switch (t) {
        case Tag::Unrestricted: return "Unrestricted";
        case Tag::NoisyUnrestricted: return "NoisyUnrestricted";
        case Tag::AlmostNuOnly: return "AlmostNuOnly";
        case Tag::NotAlmostNu: return "NotAlmostNu";
    }
    return "?";
}

Tag parse_tag(std::string_view text) {
    for (Tag t : {Tag::Unrestricted, Tag::NoisyUnrestricted, Tag::AlmostNuOnly, Tag::NotAlmostNu})
        if (to_string(t) == text) return t;
    throw Error(ErrorCode::ParseError, "unknown classification tag '" + std::string(text) + "'");
}

bool admits_gtt(Tag t) {
    return t != Tag::NotAlmostNu;
}

Classification classify(const GptSystem &sys) {
    Polyhedron es = unrestricted_effects(sys.states());
    const Polyhedron &e = sys.effects().body();
    if (set_equal(e, es)) return {Tag::Unrestricted, std::nullopt};
    // E is inside E(S), so E^+ is inside E(S)^+; the converse is decided on
    // the generators of E(S).
    Cone cone = positive_cone(e);
    if (auto w = first_generator_outside(es, cone)) return {Tag::NotAlmostNu, *w};
    return {Tag::NoisyUnrestricted, std::nullopt};
}

GttRoutes gtt_routes(const GptSystem &sys) {
    GttRoutes r;
    r.via_classification = admits_gtt(classify(sys).tag);
    r.via_state_space = set_equal(states_from_effects_unchecked(sys.effects()), sys.states().body());
    return r;
}

bool admits_gtt(const GptSystem &sys) {
    GttRoutes r = gtt_routes(sys);
    if (r.via_classification != r.via_state_space) {
        throw Error(ErrorCode::InternalInconsistency, "classification and W(E) = S disagree for " + sys.name());
    }
    return r.via_classification;
}

GptSystem transform(const GptSystem &sys, const Matrix &m) {
    if (m.rows() != sys.ambient_dim() || m.cols() != sys.ambient_dim()) {
        throw Error(ErrorCode::DimensionMismatch, "transform matrix has the wrong shape");
    }
    Matrix inv_t = m.inverse().transpose();
    StateSpace s(linear_image(m, sys.states().body()), inv_t.apply(sys.states().unit()));
    EffectSpace e(linear_image(inv_t, sys.effects().body()), inv_t.apply(sys.unit()));
    return validate_system(std::move(s), std::move(e), sys.name());
}

}  // namespace gpt
