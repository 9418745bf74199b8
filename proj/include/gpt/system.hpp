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

#include <optional>
#include <string>
#include <vector>

#include "gpt/error.hpp"
#include "gpt/geometry.hpp"

namespace gpt {

/// Convex compact set of normalized states, u.w = 1 on every vertex.
class StateSpace {
   public:
    StateSpace(Polyhedron body, QVec unit);
    /// Hull of the given states with the default unit (0, ..., 0, 1).
    static StateSpace from_vertices(std::span<const QVec> states);

    const Polyhedron &body() const noexcept { return body_; }
    const QVec &unit() const noexcept { return unit_; }
    std::size_t ambient_dim() const noexcept { return body_.dim(); }
    /// Fiducial dimension d.
    std::size_t d() const noexcept { return body_.dim() - 1; }
    const std::vector<QVec> &vertices() const { return body_.vertices(); }

   private:
    Polyhedron body_;
    QVec unit_;
};

class EffectSpace {
   public:
    EffectSpace(Polyhedron body, QVec unit);
    static EffectSpace from_vertices(std::span<const QVec> effects);

    const Polyhedron &body() const noexcept { return body_; }
    const QVec &unit() const noexcept { return unit_; }
    std::size_t ambient_dim() const noexcept { return body_.dim(); }
    const std::vector<QVec> &vertices() const { return body_.vertices(); }

   private:
    Polyhedron body_;
    QVec unit_;
};

enum class Axiom {
    MissingZeroOrUnit,
    NotComplementClosed,
    DoesNotSpan,
    StateNormalizationViolated,
    EffectOutOfRange,
};

std::string_view to_string(Axiom a);

struct Violation {
    Axiom axiom;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const noexcept { return violations.empty(); }
    std::string str() const;
};

/// Raised by validate_system; carries every violated axiom.
class ValidationError : public Error {
   public:
    explicit ValidationError(ValidationReport report)
        : Error(ErrorCode::ValidationFailed, report.str()), report_(std::move(report)) {}
    const ValidationReport &report() const noexcept { return report_; }

   private:
    ValidationReport report_;
};

class GptSystem {
   public:
    const StateSpace &states() const noexcept { return states_; }
    const EffectSpace &effects() const noexcept { return effects_; }
    const std::string &name() const noexcept { return name_; }
    const QVec &unit() const noexcept { return effects_.unit(); }
    std::size_t ambient_dim() const noexcept { return states_.ambient_dim(); }

   private:
    friend GptSystem validate_system(StateSpace, EffectSpace, std::string);
    GptSystem(StateSpace s, EffectSpace e, std::string name)
        : states_(std::move(s)), effects_(std::move(e)), name_(std::move(name)) {}

    StateSpace states_;
    EffectSpace effects_;
    std::string name_;
};

/// Checks the state and effect axioms without throwing.
ValidationReport check_system(const StateSpace &states, const EffectSpace &effects);
/// Throws ValidationError listing every violated axiom.
GptSystem validate_system(StateSpace states, EffectSpace effects, std::string name = "");

/// E(S) = S^* n (u - S^*). Unbounded when S is not full-dimensional.
Polyhedron unrestricted_effects(const StateSpace &s);
/// W(E) = E^* n {u.w = 1}. Throws Unbounded.
Polyhedron states_from_effects(const EffectSpace &e);
/// Same set without the boundedness requirement.
Polyhedron states_from_effects_unchecked(const EffectSpace &e);

/// Conv{0, u, p v, u - p v : v a vertex of e other than 0 and u}.
/// Throws ProbabilityOutOfRange unless 0 < p <= 1.
Polyhedron noisy_effects(const Polyhedron &e, const QVec &unit, const Rational &p);

enum class Tag { Unrestricted, NoisyUnrestricted, AlmostNuOnly, NotAlmostNu };

std::string_view to_string(Tag t);
/// Inverse of to_string. Throws ParseError.
Tag parse_tag(std::string_view text);
/// True for every tag except NotAlmostNu.
bool admits_gtt(Tag t);

struct Classification {
    Tag tag;
    /// Element of E(S) with no positive multiple in E (NotAlmostNu only).
    std::optional<QVec> witness;
};

Classification classify(const GptSystem &sys);

struct GttRoutes {
    bool via_classification;
    bool via_state_space;  // W(E) == S
};

/// Both decision routes, computed independently.
GttRoutes gtt_routes(const GptSystem &sys);
/// Throws InternalInconsistency if the two routes disagree.
bool admits_gtt(const GptSystem &sys);

/// States mapped by m, effects and unit by m^{-T}. Throws SingularMatrix.
GptSystem transform(const GptSystem &sys, const Matrix &m);

}  // namespace gpt
