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

#include "gpt/smooth.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace gpt {
namespace {

Rational min3(const Rational &a, const Rational &b, const Rational &c) {
    return std::min(a, std::min(b, c));
}

void require(bool ok, const std::string &what, std::vector<std::string> &log) {
    if (!ok) throw Error(ErrorCode::InternalInconsistency, "certificate check failed: " + what);
    log.push_back(what);
}

const std::vector<Rational> &ring_parameters() {
    static const std::vector<Rational> ts{Rational(0),     Rational(1, 2), Rational(1),    Rational(2),
                                          Rational(-1, 3), Rational(3),    Rational(-5, 7), Rational(-4)};
    return ts;
}

}  // namespace

SmoothFamily SmoothFamily::noisy_rebit(const Rational &p) {
    if (p <= 0 || p >= 1) throw Error(ErrorCode::ProbabilityOutOfRange, "noisy rebit needs 0 < p < 1, got " + to_string(p));
    return SmoothFamily(Kind::NoisyRebit, p);
}

std::string SmoothFamily::name() const {
    switch (kind_) {
        case Kind::Rebit: return "rebit";
        case Kind::NoisyRebit: return "noisy-rebit(" + to_string(p_) + ")";
        case Kind::AnuBit: return "anu-bit";
    }
    return "?";
}

bool SmoothFamily::state_member(const QVec &x) const {
    if (x.size() != ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "smooth state query");
    if (kind_ == Kind::AnuBit) return x[1] == 1 && x[0] >= -1 && x[0] <= 1;
    return x[2] == 1 && x[0] * x[0] + x[1] * x[1] <= 1;
}

bool SmoothFamily::effect_member(const QVec &x) const {
    if (x.size() != ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "smooth effect query");
    if (kind_ == Kind::AnuBit) {
        Rational r2 = x[0] * x[0] + x[1] * x[1];
        return r2 - x[0] - x[1] <= 0 && r2 + x[0] - x[1] <= 0;
    }
    const Rational &c = x[2];
    if (c < 0 || c > 1) return false;
    Rational half = kind_ == Kind::NoisyRebit ? p_ / 2 : Rational(1, 2);
    Rational rad = min3(c, half, 1 - c);
    return x[0] * x[0] + x[1] * x[1] <= rad * rad;
}

bool membership(const SmoothFamily &f, const QVec &x, Which which) {
    return which == Which::States ? f.state_member(x) : f.effect_member(x);
}

std::pair<Rational, Rational> circle_point(const Rational &t) {
    Rational den = 1 + t * t;
    return {(1 - t * t) / den, 2 * t / den};
}

QVec ring_effect(const Rational &t) {
    auto [c, s] = circle_point(t);
    return QVec{c / 2, s / 2, Rational(1, 2)};
}

bool anu_positive_cone_contains(const QVec &w) {
    if (w.size() != 2) throw Error(ErrorCode::DimensionMismatch, "aNU cone query");
    if (w.is_zero()) return true;
    Rational plus = (w[0] + w[1]) / 2, minus = (w[1] - w[0]) / 2;
    return plus > 0 && minus > 0;
}

AnuCertificate anu_certificate(const Rational &delta) {
    // Line y = m x through the origin meets the boundary of D- again at
    // x = (m-1)/(1+m^2); for m = 1 + delta that point is extremal and close
    // to 0, and its ray is close to the tangent direction (1,1).
    AnuCertificate c;
    c.delta = delta;
    Rational m = 1 + delta;
    Rational x = (m - 1) / (1 + m * m);
    c.effect = QVec{x, m * x};
    c.outside_ray = QVec{1, 1};
    const QVec &e = c.effect;
    Rational r2 = e.norm2();
    SmoothFamily f = SmoothFamily::anu_bit();
    c.effect_extremal = f.effect_member(e) && (r2 + e[0] - e[1] == 0 || r2 - e[0] - e[1] == 0);
    c.norm_below_delta = !e.is_zero() && r2 < delta * delta;
    c.ray_outside_cone = !anu_positive_cone_contains(c.outside_ray);
    Rational cosine_bound = 1 - delta * delta / 2;
    Rational dot = e.dot(c.outside_ray);
    c.rays_close = dot > 0 && dot * dot > cosine_bound * cosine_bound * r2 * c.outside_ray.norm2();
    return c;
}

SmoothClassification smooth_classify(const SmoothFamily &f, std::span<const Rational> deltas) {
    SmoothClassification out;
    auto &log = out.certificate;
    const QVec u = f.unit();
    switch (f.kind()) {
        case SmoothFamily::Kind::Rebit: {
            // E(S) is {|(a,b)| <= min(c, 1-c)}; the ring effects reach it.
            for (const auto &t : ring_parameters()) {
                QVec e = ring_effect(t);
                auto [cs, sn] = circle_point(t);
                QVec w{cs, sn, 1}, opposite{-cs, -sn, 1};
                require(f.effect_member(e) && f.effect_member(u - e), "e_t and u - e_t are effects at t = " + to_string(t), log);
                require(f.state_member(w) && f.state_member(opposite), "w_t and its antipode are states at t = " + to_string(t), log);
                require(e.dot(w) == 1 && e.dot(opposite) == 0, "e_t takes the extreme values 1 and 0 at t = " + to_string(t), log);
            }
            out.classification = {Tag::Unrestricted, std::nullopt};
            break;
        }
        case SmoothFamily::Kind::NoisyRebit: {
            const Rational &p = f.p();
            SmoothFamily rebit = SmoothFamily::rebit();
            for (const auto &t : ring_parameters()) {
                QVec e = ring_effect(t);
                require(f.effect_member(e * p) && f.effect_member((u - e) * p),
                        "p e_t and p (u - e_t) are effects at t = " + to_string(t), log);
                require(!f.effect_member(e) && rebit.effect_member(e), "e_t is unrestricted but not an effect at t = " + to_string(t),
                        log);
                out.scaled_ring.push_back(e * p);
            }
            out.classification = {Tag::NoisyUnrestricted, std::nullopt};
            break;
        }
        case SmoothFamily::Kind::AnuBit: {
            // (1,1)/2 is in E(S_B) but no positive multiple lies in the lens:
            // for s > 0, s(1,1)/2 gives s^2/2 > 0 in the D- inequality.
            QVec corner{Rational(1, 2), Rational(1, 2)};
            for (const Rational &s : {Rational(1), Rational(1, 2), Rational(1, 1000), Rational(1, 1000000)})
                require(!f.effect_member(corner * s), "s (1,1)/2 is not an effect for s = " + to_string(s), log);
            require(!anu_positive_cone_contains(corner), "(1,1)/2 is outside E^+", log);
            static const std::vector<Rational> default_deltas{Rational(1, 100), Rational(1, 10000), Rational(1, 1000000)};
            std::span<const Rational> ds = deltas.empty() ? std::span<const Rational>(default_deltas) : deltas;
            for (const auto &d : ds) {
                AnuCertificate c = anu_certificate(d);
                require(c.ok(), "extremal effect within delta = " + to_string(d) + " of 0 with a nearby ray outside E^+", log);
                out.anu.push_back(std::move(c));
            }
            out.classification = {Tag::AlmostNuOnly, corner};
            break;
        }
    }
    return out;
}

QVec polygon_vertex(std::size_t k, std::size_t n) {
    std::size_t g = std::gcd(k % n, n);
    std::size_t kk = (k % n) / g, q = n / g;
    if (kk == 0) return QVec{1, 0};
    if (2 * kk == q) return QVec{-1, 0};
    const long scale = 64 * static_cast<long>(q * q);
    Rational t = round_to_denominator(std::tan(std::numbers::pi * double(kk) / double(q)), scale);
    auto [c, s] = circle_point(t);
    return QVec{c, s};
}

DiscretizedSystem discretize(const SmoothFamily &f, std::size_t n) {
    if (n < 3) throw Error(ErrorCode::DimensionMismatch, "discretization needs n >= 3");
    const QVec u = f.unit();
    double eps = 0;
    if (f.kind() == SmoothFamily::Kind::AnuBit) {
        std::vector<QVec> pts{QVec{0, 0}, u};
        const long scale = 64 * static_cast<long>(n * n);
        for (std::size_t j = 1; j < n; ++j) {
            double phi = std::numbers::pi / 4 * (1 + double(j) / double(n));
            Rational m = round_to_denominator(std::tan(phi), scale);
            Rational x = (m - 1) / (1 + m * m);
            pts.push_back(QVec{x, m * x});
            pts.push_back(u - pts.back());
            double mt = std::tan(phi), xt = (mt - 1) / (1 + mt * mt);
            eps = std::max({eps, std::abs(to_double(x) - xt), std::abs(to_double(m * x) - mt * xt)});
        }
        std::vector<QVec> states{QVec{-1, 1}, QVec{1, 1}};
        GptSystem sys = validate_system(StateSpace::from_vertices(states), EffectSpace::from_vertices(pts),
                                        f.name() + "/" + std::to_string(n));
        return {f, n, std::move(sys), eps};
    }
    std::vector<QVec> states;
    for (std::size_t k = 0; k < n; ++k) {
        QVec v = polygon_vertex(k, n);
        double theta = 2 * std::numbers::pi * double(k) / double(n);
        eps = std::max({eps, std::abs(to_double(v[0]) - std::cos(theta)), std::abs(to_double(v[1]) - std::sin(theta))});
        states.push_back(QVec{v[0], v[1], 1});
    }
    StateSpace s = StateSpace::from_vertices(states);
    Polyhedron es = unrestricted_effects(s);
    Polyhedron e = f.kind() == SmoothFamily::Kind::NoisyRebit ? noisy_effects(es, u, f.p()) : es;
    GptSystem sys = validate_system(std::move(s), EffectSpace(std::move(e), u), f.name() + "/" + std::to_string(n));
    return {f, n, std::move(sys), eps};
}

}  // namespace gpt
