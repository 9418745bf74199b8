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

#include "gpt/frame.hpp"
#include "gpt/gallery.hpp"
#include "gpt/random_system.hpp"
#include "test_util.hpp"

using namespace gpt;
using gpt::testing::q;
using gpt::testing::v;

namespace {

ErrorCode recover_error(const FrameSamples &s, const GptSystem &sys) {
    try {
        recover_state(s, sys);
    } catch (const Error &e) {
        return e.code();
    }
    return ErrorCode::ValidationFailed;  // stands for "accepted"
}

std::vector<GptSystem> gallery_systems() {
    std::vector<GptSystem> out;
    for (const auto &n : gallery_names()) {
        GalleryEntry e = load(n);
        if (e.is_polytopic()) out.push_back(e.polytopic());
    }
    return out;
}

}  // namespace

TEST(SolveExact, AgreesWithInverse) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 30; ++i) {
        Matrix m = random_invertible(rng, 4);
        QVec x(4);
        for (std::size_t j = 0; j < 4; ++j) x[j] = random_rational(rng);
        QVec b = m.apply(x);
        std::vector<Rational> rhs(b.begin(), b.end());
        LinearSolution s = solve_exact(m.row_list(), rhs, 4);
        ASSERT_EQ(s.status, LinearSolution::Status::Unique);
        EXPECT_EQ(s.x, x);
        EXPECT_EQ(m.inverse().apply(b), x);
    }
}

TEST(SolveExact, OverdeterminedAndDegenerate) {
    std::vector<QVec> rows{v({1, 0}), v({0, 1}), v({1, 1})};
    std::vector<Rational> ok{q(1, 3), q(1, 2), q(5, 6)};
    EXPECT_EQ(solve_exact(rows, ok, 2).x, (QVec{q(1, 3), q(1, 2)}));
    std::vector<Rational> bad{q(1, 3), q(1, 2), q(1)};
    EXPECT_EQ(solve_exact(rows, bad, 2).status, LinearSolution::Status::Inconsistent);
    std::vector<QVec> flat{v({1, 1}), v({2, 2})};
    std::vector<Rational> r{1, 2};
    EXPECT_EQ(solve_exact(flat, r, 2).status, LinearSolution::Status::Underdetermined);
}

TEST(RecoverState, TransformedBit) {
    GptSystem sys = load("bit-transformed").polytopic();
    QVec w{0, 1};
    FrameSamples s;
    s.pairs = {{v({0, 1}), 1}, {QVec{q(-1, 2), q(1, 2)}, q(1, 2)}, {QVec{q(1, 2), q(1, 2)}, q(1, 2)}};
    EXPECT_EQ(recover_state(s, sys), w);

    s.pairs[0].value = q(1, 7);
    ErrorCode c = recover_error(s, sys);
    EXPECT_TRUE(c == ErrorCode::InconsistentSamples || c == ErrorCode::NotAState);
}

TEST(RecoverState, ErrorKinds) {
    GptSystem sys = load("bit-transformed").polytopic();
    FrameSamples under;
    under.pairs = {{v({0, 1}), 1}};
    EXPECT_EQ(recover_error(under, sys), ErrorCode::UnderDetermined);
    FrameSamples out_of_range;
    out_of_range.pairs = {{v({0, 1}), q(3, 2)}};
    EXPECT_EQ(recover_error(out_of_range, sys), ErrorCode::InvalidSample);
    FrameSamples not_effect;
    not_effect.pairs = {{v({1, 0}), 0}};
    EXPECT_EQ(recover_error(not_effect, sys), ErrorCode::InvalidSample);
}

TEST(RecoverState, SpekkensCubeVertex) {
    GptSystem sys = load("spekkens").polytopic();
    QVec corner{1, 1, 1, 1};
    QVec got = recover_state(FrameSamples::induced(corner, sys.effects().vertices()), sys);
    EXPECT_EQ(got, corner);
    EXPECT_TRUE(in_states_from_effects(sys.effects(), got));
    EXPECT_FALSE(sys.states().body().contains(got));
}

TEST(RecoverState, NotAStateOnNotchBit) {
    // Notch bit: W(E) = [-3,1] x {1}. Sampling u and a half-scaled effect
    // pins down (2,1), which fails on the vertex (1/4,3/4).
    GptSystem sys = load("notch-bit").polytopic();
    QVec w{2, 1};
    std::vector<QVec> effects{v({0, 1}), QVec{q(1, 8), q(3, 8)}};
    FrameSamples s = FrameSamples::induced(w, effects);
    for (const auto &p : s.pairs) ASSERT_TRUE(p.value >= 0 && p.value <= 1) << p.value;
    EXPECT_EQ(recover_error(s, sys), ErrorCode::NotAState);
}

TEST(RecoverState, RoundtripOnRandomSystems) {
    std::mt19937_64 rng(47);
    for (int i = 0; i < 25; ++i) {
        GptSystem sys = random_valid_system(rng);
        QVec w = random_convex_combination(rng, states_from_effects(sys.effects()));
        EXPECT_EQ(recover_state(FrameSamples::induced(w, sys.effects().vertices()), sys), w);
    }
}

TEST(FrameCheck, InducedSamplesPass) {
    std::mt19937_64 rng(53);
    GptSystem sys = load("squit").polytopic();
    const QVec u = sys.unit();
    QVec w = random_convex_combination(rng, sys.states().body());
    std::vector<Observable> obs;
    std::vector<QVec> effects;
    for (int i = 0; i < 20; ++i) {
        QVec e = random_convex_combination(rng, sys.effects().body()) / 2;
        QVec f = random_convex_combination(rng, sys.effects().body()) / 2;
        obs.push_back({{e, f, u - e - f}});
        effects.insert(effects.end(), {e, f, u - e - f});
    }
    EXPECT_TRUE(frame_check(FrameSamples::induced(w, effects), obs));
}

TEST(FrameCheck, ViolationsAndMissing) {
    QVec u{0, 1}, zero{0, 0};
    std::vector<Observable> obs{{{u}}, {{u, zero}}};
    FrameSamples good;
    good.pairs = {{u, 1}, {zero, 0}};
    EXPECT_TRUE(frame_check(good, obs));
    FrameSamples bad_unit;
    bad_unit.pairs = {{u, q(1, 2)}, {zero, 0}};
    EXPECT_FALSE(frame_check(bad_unit, obs));
    FrameSamples bad_zero;
    bad_zero.pairs = {{u, 1}, {zero, q(1, 3)}};
    EXPECT_FALSE(frame_check(bad_zero, obs));
    FrameSamples missing;
    missing.pairs = {{u, 1}};
    try {
        frame_check(missing, obs);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::MissingSample);
    }
}

TEST(FrameCheck, HalvingIdentity) {
    std::mt19937_64 rng(59);
    for (const auto &sys : gallery_systems()) {
        QVec w = random_convex_combination(rng, states_from_effects(sys.effects()));
        QVec got = recover_state(FrameSamples::induced(w, sys.effects().vertices()), sys);
        for (int i = 0; i < 10; ++i) {
            QVec e = random_convex_combination(rng, sys.effects().body());
            EXPECT_EQ(got.dot(e / 2), got.dot(e) / 2);
        }
    }
}

TEST(DecomposeInCone, Examples) {
    GptSystem bit = load("bit").polytopic();
    Cone bit_plus = positive_cone(bit.effects().body());
    auto [a0, b0] = decompose_in_cone(QVec(2), bit.effects());
    EXPECT_EQ(a0, b0);
    EXPECT_EQ(a0, bit.effects().body().centroid());

    auto [a, b] = decompose_in_cone(v({0, 1}), bit.effects());
    EXPECT_EQ(a - b, v({0, 1}));
    EXPECT_TRUE(bit_plus.contains(a) && bit_plus.contains(b));

    GptSystem tb = load("bit-transformed").polytopic();
    Cone tb_plus = positive_cone(tb.effects().body());
    auto [a2, b2] = decompose_in_cone(v({-5, 3}), tb.effects());
    EXPECT_EQ(a2 - b2, v({-5, 3}));
    EXPECT_TRUE(tb_plus.contains(a2) && tb_plus.contains(b2));
}

TEST(DecomposeInCone, RandomVectorsOnGallery) {
    std::mt19937_64 rng(61);
    for (const auto &sys : gallery_systems()) {
        Cone plus = positive_cone(sys.effects().body());
        for (int i = 0; i < 100; ++i) {
            QVec c(sys.ambient_dim());
            for (std::size_t j = 0; j < c.size(); ++j) c[j] = random_rational(rng, 9);
            auto [a, b] = decompose_in_cone(c, sys.effects());
            EXPECT_EQ(a - b, c);
            EXPECT_TRUE(plus.contains(a));
            EXPECT_TRUE(plus.contains(b));
        }
    }
}
