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

#include "gpt/system.hpp"

namespace gpt {

/// Non-polytopic example systems with exact quadratic membership tests.
///   Rebit          states {(a,b,1) : a^2+b^2 <= 1}, effects Conv{0, u, e_t}
///                  with e_t on the ring (cos t, sin t, 1)/2.
///   NoisyRebit(p)  same states, effects Conv{0, u, p e_t, u - p e_t}.
///   AnuBit         states Conv{(-1,1),(1,1)}, effects the lens D+ n D-,
///                  D+- the discs of radius^2 1/2 centred at (+-1,1)/2.
class SmoothFamily {
   public:
    enum class Kind { Rebit, NoisyRebit, AnuBit };

    static SmoothFamily rebit() { return SmoothFamily(Kind::Rebit, 1); }
    /// Throws ProbabilityOutOfRange unless 0 < p < 1.
    static SmoothFamily noisy_rebit(const Rational &p);
    static SmoothFamily anu_bit() { return SmoothFamily(Kind::AnuBit, 1); }

    Kind kind() const noexcept { return kind_; }
    const Rational &p() const noexcept { return p_; }
    std::size_t ambient_dim() const noexcept { return kind_ == Kind::AnuBit ? 2 : 3; }
    QVec unit() const { return QVec::unit(ambient_dim()); }
    std::string name() const;

    bool state_member(const QVec &x) const;
    bool effect_member(const QVec &x) const;

   private:
    SmoothFamily(Kind k, Rational p) : kind_(k), p_(std::move(p)) {}
    Kind kind_;
    Rational p_;
};

enum class Which { States, Effects };

/// Throws DimensionMismatch.
bool membership(const SmoothFamily &f, const QVec &x, Which which);

/// Rational point on the unit circle, ((1-t^2)/(1+t^2), 2t/(1+t^2)).
std::pair<Rational, Rational> circle_point(const Rational &t);
/// Ring effect (cos, sin, 1)/2 at the circle point of parameter t.
QVec ring_effect(const Rational &t);

/// An extremal effect of the aNU bit close to 0 together with a ray outside
/// E^+ whose direction is close to the effect's direction.
struct AnuCertificate {
    Rational delta;
    QVec effect;
    QVec outside_ray;
    bool effect_extremal = false;  // on the boundary of the lens
    bool norm_below_delta = false;  // |effect| < delta
    bool ray_outside_cone = false;  // outside_ray not in E^+
    bool rays_close = false;        // angle between the rays below ~delta
    bool ok() const { return effect_extremal && norm_below_delta && ray_outside_cone && rays_close; }
};

AnuCertificate anu_certificate(const Rational &delta);

/// E^+ of the aNU bit: {w : w.c+ > 0 and w.c- > 0} together with 0, with
/// c+- = (+-1,1)/2. Its closure is E_B^+.
bool anu_positive_cone_contains(const QVec &w);

struct SmoothClassification {
    Classification classification;
    /// Checked facts backing the tag, one line each.
    std::vector<std::string> certificate;
    /// Ring points checked for NoisyRebit: p e_t and p (u - e_t) are effects,
    /// e_t is not.
    std::vector<QVec> scaled_ring;
    std::vector<AnuCertificate> anu;
};

/// Tag from the analytic certificates; throws InternalInconsistency if any
/// certificate check fails. `deltas` selects the aNU certificate scales.
SmoothClassification smooth_classify(const SmoothFamily &f, std::span<const Rational> deltas = {});

struct DiscretizedSystem {
    SmoothFamily base;
    std::size_t n;
    GptSystem system;
    /// Maximum coordinate error of the approximant vertices against the
    /// nominal equiangular points.
    double eps;
};

/// Polygonal approximant with n extremal states (rebit families) or n arc
/// points per disc (aNU bit). Every vertex lies exactly on the smooth
/// boundary. Throws DimensionMismatch for n < 3.
DiscretizedSystem discretize(const SmoothFamily &f, std::size_t n);

/// Exact point on the unit circle near angle 2 pi k / n.
QVec polygon_vertex(std::size_t k, std::size_t n);

}  // namespace gpt
