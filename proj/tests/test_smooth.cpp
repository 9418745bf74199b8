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

#include <gtest/gtest.h>

#include "gpt/observable.hpp"
#include "gpt/smooth.hpp"
#include "test_util.hpp"

using namespace gpt;
using gpt::testing::q;

namespace {

// Rebit effects: 0 <= c <= 1 and a^2 + b^2 <= min(c, 1-c, p/2)^2, checked by
// brute force over the generating set {0, u, p e_t, u - p e_t} instead: x is
// a member iff its slice at height c is the disc of the stated radius.
bool ring_effect_oracle(const QVec &x, const Rational &p) {
    const Rational &c = x[2];
    if (c < 0 || c > 1) return false;
    Rational r = std::min<Rational>({c, Rational(1 - c), Rational(p / 2)});
    return x[0] * x[0] + x[1] * x[1] <= r * r;
}

std::vector<Rational> some_t() {
    return {0, q(1, 2), q(1, 3), q(2, 7), q(-3, 5), q(7, 4), q(-11, 3), q(1, 100), 5};
}

}  // namespace

TEST(Membership, RebitExamples) {
    SmoothFamily r = SmoothFamily::rebit();
    EXPECT_TRUE(membership(r, QVec{0, 0, 0}, Which::Effects));
    EXPECT_TRUE(membership(r, QVec{q(1, 2), 0, q(1, 2)}, Which::Effects));
    EXPECT_FALSE(membership(r, QVec{q(3, 5), 0, q(1, 2)}, Which::Effects));
    EXPECT_TRUE(membership(r, QVec{0, 0, 1}, Which::Effects));
    EXPECT_FALSE(membership(r, QVec{0, 0, q(-1, 10)}, Which::Effects));
    EXPECT_TRUE(membership(r, QVec{q(3, 5), q(4, 5), 1}, Which::States));
    EXPECT_FALSE(membership(r, QVec{q(3, 5), q(4, 5), q(1, 2)}, Which::States));
    EXPECT_FALSE(membership(r, QVec{q(3, 5), q(5, 6), 1}, Which::States));
}

TEST(Membership, DimensionMismatch) {
    try {
        membership(SmoothFamily::rebit(), QVec{0, 1}, Which::States);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
    }
    EXPECT_THROW(membership(SmoothFamily::anu_bit(), QVec{0, 0, 1}, Which::Effects), Error);
}

TEST(Membership, AnuLens) {
    SmoothFamily a = SmoothFamily::anu_bit();
    EXPECT_TRUE(a.effect_member(QVec{0, 0}));
    EXPECT_TRUE(a.effect_member(QVec{0, 1}));
    EXPECT_TRUE(a.effect_member(QVec{0, q(1, 2)}));
    // (1/2,1/2) is on D+ only; the lens excludes it.
    EXPECT_FALSE(a.effect_member(QVec{q(1, 2), q(1, 2)}));
    EXPECT_TRUE(a.state_member(QVec{q(1, 3), 1}));
    EXPECT_FALSE(a.state_member(QVec{q(4, 3), 1}));
    // The lens is complement closed.
    for (const auto &x : {QVec{q(1, 10), q(1, 5)}, QVec{q(-1, 5), q(1, 2)}, QVec{q(1, 3), q(1, 3)}})
        EXPECT_EQ(a.effect_member(x), a.effect_member(QVec{0, 1} - x));
}

TEST(Membership, RebitGridAgainstOracle) {
    SmoothFamily r = SmoothFamily::rebit();
    SmoothFamily n = SmoothFamily::noisy_rebit(q(1, 2));
    for (int i = -6; i <= 6; ++i)
        for (int j = -6; j <= 6; ++j)
            for (int k = -1; k <= 9; ++k) {
                QVec x{q(i, 10), q(j, 10), q(k, 8)};
                EXPECT_EQ(r.effect_member(x), ring_effect_oracle(x, 1)) << x;
                EXPECT_EQ(n.effect_member(x), ring_effect_oracle(x, q(1, 2))) << x;
            }
}

TEST(RingEffect, OnTheRing) {
    for (const auto &t : some_t()) {
        auto [c, s] = circle_point(t);
        EXPECT_EQ(c * c + s * s, 1);
        QVec e = ring_effect(t);
        EXPECT_EQ(e[2], q(1, 2));
        EXPECT_TRUE(SmoothFamily::rebit().effect_member(e));
        EXPECT_FALSE(SmoothFamily::rebit().effect_member(e * q(101, 100)));
    }
}

TEST(NoisyRebit, ScalingLaw) {
    for (const auto &p : {q(1, 2), q(1, 3), q(9, 10)}) {
        SmoothFamily f = SmoothFamily::noisy_rebit(p);
        QVec u = f.unit();
        for (const auto &t : some_t()) {
            QVec e = ring_effect(t);
            EXPECT_TRUE(f.effect_member(e * p));
            EXPECT_TRUE(f.effect_member((u - e) * p));
            EXPECT_FALSE(f.effect_member(e));
        }
    }
    EXPECT_THROW(SmoothFamily::noisy_rebit(1), Error);
    EXPECT_THROW(SmoothFamily::noisy_rebit(0), Error);
}

TEST(NoisyRebit, NoisyObservableOutcomesAreEffects) {
    for (const auto &p : {q(1, 2), q(1, 4)}) {
        SmoothFamily f = SmoothFamily::noisy_rebit(p);
        QVec u = f.unit();
        for (const auto &t : some_t()) {
            QVec e = ring_effect(t);
            Observable d{{e, u - e}};
            for (const auto &o : noisy_observable(d, p).outcomes) EXPECT_TRUE(f.effect_member(o)) << o;
        }
    }
}

TEST(SmoothClassify, Tags) {
    EXPECT_EQ(smooth_classify(SmoothFamily::rebit()).classification.tag, Tag::Unrestricted);
    auto n = smooth_classify(SmoothFamily::noisy_rebit(q(1, 2)));
    EXPECT_EQ(n.classification.tag, Tag::NoisyUnrestricted);
    EXPECT_FALSE(n.scaled_ring.empty());
    auto a = smooth_classify(SmoothFamily::anu_bit());
    EXPECT_EQ(a.classification.tag, Tag::AlmostNuOnly);
    EXPECT_TRUE(admits_gtt(a.classification.tag));
    EXPECT_FALSE(a.certificate.empty());
}

TEST(AnuCertificate, ShrinkingDeltas) {
    for (const auto &d : {q(1, 100), q(1, 10000), q(1, 1000000), q(1, 1000000000)}) {
        AnuCertificate c = anu_certificate(d);
        EXPECT_TRUE(c.ok()) << d;
        // Independent re-checks.
        EXPECT_TRUE(SmoothFamily::anu_bit().effect_member(c.effect));
        EXPECT_LT(c.effect.norm2(), d * d);
        EXPECT_FALSE(anu_positive_cone_contains(c.outside_ray));
        EXPECT_TRUE(anu_positive_cone_contains(c.effect));
    }
}

TEST(AnuCone, ClosureIsBitCone) {
    EXPECT_TRUE(anu_positive_cone_contains(QVec{0, 0}));
    EXPECT_TRUE(anu_positive_cone_contains(QVec{0, 1}));
    EXPECT_FALSE(anu_positive_cone_contains(QVec{1, 1}));
    EXPECT_FALSE(anu_positive_cone_contains(QVec{-1, 1}));
    EXPECT_TRUE(anu_positive_cone_contains(QVec{1, q(1000001, 1000000)}));
    EXPECT_FALSE(anu_positive_cone_contains(QVec{1, q(999999, 1000000)}));
}

TEST(Discretize, SquareForFour) {
    DiscretizedSystem d = discretize(SmoothFamily::rebit(), 4);
    auto vs = d.system.states().vertices();
    std::vector<QVec> expected{QVec{1, 0, 1}, QVec{0, 1, 1}, QVec{0, -1, 1}, QVec{-1, 0, 1}};
    std::sort(expected.begin(), expected.end(), std::greater<>());
    EXPECT_EQ(vs, expected);
    EXPECT_LT(d.eps, 1e-12);  // only float noise in the nominal cos/sin
    EXPECT_EQ(classify(d.system).tag, Tag::Unrestricted);
}

TEST(Discretize, VerticesOnTheCircleAndNested) {
    SmoothFamily r = SmoothFamily::rebit();
    std::optional<DiscretizedSystem> prev;
    // n = 4 is exact; from n = 8 on the shared vertices carry their error.
    double prev_eps = 1;
    for (std::size_t n : {4u, 8u, 16u, 32u, 64u}) {
        DiscretizedSystem d = discretize(r, n);
        EXPECT_EQ(d.system.states().vertices().size(), n);
        for (const auto &v : d.system.states().vertices()) EXPECT_TRUE(r.state_member(v));
        if (n > 4) {
            EXPECT_LE(d.eps, prev_eps);
            prev_eps = d.eps;
        }
        if (prev) {
            for (const auto &v : prev->system.states().vertices())
                EXPECT_TRUE(d.system.states().body().contains(v)) << n << " " << v;
        }
        prev = d;
    }
}

TEST(Discretize, Classifications) {
    for (std::size_t n : {4u, 8u, 16u}) {
        EXPECT_EQ(classify(discretize(SmoothFamily::rebit(), n).system).tag, Tag::Unrestricted);
        DiscretizedSystem d = discretize(SmoothFamily::noisy_rebit(q(1, 2)), n);
        EXPECT_EQ(classify(d.system).tag, Tag::NoisyUnrestricted);
    }
    DiscretizedSystem a = discretize(SmoothFamily::anu_bit(), 8);
    for (const auto &e : a.system.effects().vertices()) EXPECT_TRUE(a.base.effect_member(e)) << e;
    EXPECT_THROW(discretize(SmoothFamily::rebit(), 2), Error);
}

TEST(Discretize, PolygonVertex) {
    EXPECT_EQ(polygon_vertex(0, 7), (QVec{1, 0}));
    EXPECT_EQ(polygon_vertex(3, 6), (QVec{-1, 0}));
    EXPECT_EQ(polygon_vertex(1, 4), (QVec{0, 1}));
    EXPECT_EQ(polygon_vertex(2, 8), polygon_vertex(4, 16));
    EXPECT_EQ(polygon_vertex(5, 12), polygon_vertex(10, 24));
    for (std::size_t k = 0; k < 10; ++k) EXPECT_EQ(polygon_vertex(k, 10).norm2(), 1);
}
