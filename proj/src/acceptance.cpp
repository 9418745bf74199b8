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

#include "gpt/acceptance.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "gpt/frame.hpp"
#include "gpt/gallery.hpp"
#include "gpt/observable.hpp"
#include "gpt/random_system.hpp"
#include "gpt/smooth.hpp"

namespace gpt {
namespace {

using Rng = std::mt19937_64;

struct Checker {
    std::size_t checks = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string &what) {
        ++checks;
        if (!ok && failures.size() < 5) failures.push_back(what);
        if (!ok && failures.size() == 5) failures.push_back("...");
    }
};

std::vector<GptSystem> polytopic_gallery() {
    std::vector<GptSystem> out;
    for (const auto &name : gallery_names()) {
        GalleryEntry e = load(name);
        if (e.is_polytopic()) out.push_back(e.polytopic());
    }
    return out;
}

// Gallery polytopes, the n = 16 approximants of the rebit families and 50
// random systems.
std::vector<GptSystem> benchmark_systems(std::uint64_t seed) {
    Rng rng(seed);
    std::vector<GptSystem> out = polytopic_gallery();
    out.push_back(discretize(SmoothFamily::rebit(), 16).system);
    out.push_back(discretize(SmoothFamily::noisy_rebit(Rational(1, 2)), 16).system);
    for (int i = 0; i < 50; ++i) out.push_back(random_valid_system(rng));
    return out;
}

// e1, e2 in E with e1 + e2 in E: halves of two random effects.
QVec random_effect(Rng &rng, const GptSystem &sys) {
    return random_convex_combination(rng, sys.effects().body());
}

void wes(Checker &c, Rng &, std::uint64_t seed) {
    for (const auto &sys : benchmark_systems(seed)) {
        Polyhedron es = unrestricted_effects(sys.states());
        Polyhedron w = states_from_effects(EffectSpace(es, sys.unit()));
        c.expect(set_equal(w, sys.states().body()) && w == sys.states().body(), "W(E(S)) != S for " + sys.name());
    }
}

void iff(Checker &c, Rng &, std::uint64_t seed) {
    for (const auto &sys : benchmark_systems(seed)) {
        GttRoutes r = gtt_routes(sys);
        c.expect(r.via_classification == r.via_state_space, "routes disagree for " + sys.name());
    }
}

void spekkens(Checker &c, Rng &, std::uint64_t) {
    GalleryEntry g = load("spekkens");
    const GptSystem &sys = g.polytopic();
    std::vector<QVec> cube;
    for (int a : {1, -1})
        for (int b : {1, -1})
            for (int d : {1, -1}) cube.push_back(QVec{a, b, d, 1});
    Polyhedron w = states_from_effects(sys.effects());
    c.expect(w == hull_reduce(cube), "W(E_S) is not the cube");
    const Polyhedron &s = sys.states().body();
    c.expect(s.subset_of(w), "S_S not inside W(E_S)");
    bool outside = false;
    for (const auto &v : w.vertices()) outside = outside || !s.contains(v);
    c.expect(outside, "no cube vertex outside the octahedron");
    c.expect(classify(sys).tag == Tag::NotAlmostNu, "Spekkens not classified NotAlmostNu");
    QVec corner{1, 1, 1, 1};
    FrameSamples v = FrameSamples::induced(corner, sys.effects().vertices());
    QVec got = recover_state(v, sys);
    c.expect(got == corner && !s.contains(got), "cube vertex frame function not recovered");
}

void transform_check(Checker &c, Rng &rng, std::uint64_t) {
    GptSystem bit = load("bit").polytopic();
    Matrix m(std::vector<QVec>{QVec{2, -1}, QVec{0, 1}});
    GptSystem t = transform(bit, m);
    GalleryEntry b = load("bit-transformed");
    c.expect(t.states().body() == b.polytopic().states().body(), "M S_b != S_B");
    c.expect(t.effects().body() == b.polytopic().effects().body(), "M^-T E_b != E_B");
    c.expect(t.unit() == QVec({0, 1}), "unit moved");
    for (const auto &sys : polytopic_gallery()) {
        for (int i = 0; i < 20; ++i) {
            Matrix r = random_invertible(rng, sys.ambient_dim());
            Matrix inv_t = r.inverse().transpose();
            bool ok = true;
            for (const auto &e : sys.effects().vertices())
                for (const auto &w : sys.states().vertices()) ok = ok && inv_t.apply(e).dot(r.apply(w)) == e.dot(w);
            c.expect(ok, "dot products changed for " + sys.name());
            GptSystem moved = transform(sys, r);
            c.expect(moved.states().vertices().size() == sys.states().vertices().size(), "vertex count changed");
        }
    }
}

void simulation(Checker &c, Rng &rng, std::uint64_t) {
    auto systems = polytopic_gallery();
    std::uniform_int_distribution<std::size_t> pick(0, systems.size() - 1);
    for (int i = 0; i < 100; ++i) {
        const GptSystem &sys = systems[pick(rng)];
        const QVec &u = sys.unit();
        QVec e1 = random_effect(rng, sys) / 2, e2 = random_effect(rng, sys) / 2, f = random_effect(rng, sys);
        QVec zero(sys.ambient_dim());
        Observable big_e{{e1, e2, u - e1 - e2}, "E"}, big_f{{f, zero, u - f}, "F"};
        std::vector<std::pair<Observable, Rational>> parts{{big_e, Rational(1, 3)}, {big_f, Rational(2, 3)}};
        std::vector<std::vector<std::size_t>> blocks{{0, 1}, {2}};
        Observable g = coarse_grain(mix_observables(parts), blocks);
        QVec first = (e1 + e2 + f * 2) / 3;
        c.expect(g == Observable{{first, u - first}, "G"}, "coarse-grained mixture differs from G");
        c.expect(is_observable(big_e, sys) && is_observable(big_f, sys) && is_observable(g, sys), "invalid observable");
    }
}

void recovery(Checker &c, Rng &rng, std::uint64_t) {
    auto systems = polytopic_gallery();
    for (int i = 0; i < 200; ++i) {
        const GptSystem &sys = systems[i % systems.size()];
        QVec w = random_convex_combination(rng, states_from_effects(sys.effects()));
        FrameSamples v = FrameSamples::induced(w, sys.effects().vertices());
        c.expect(recover_state(v, sys) == w, "roundtrip failed on " + sys.name());

        std::uniform_int_distribution<std::size_t> which(0, v.pairs.size() - 1);
        std::uniform_int_distribution<long> num(0, 12);
        FrameSample &s = v.pairs[which(rng)];
        Rational old = s.value;
        while (s.value == old) s.value = Rational(num(rng), 12);
        try {
            recover_state(v, sys);
            c.expect(false, "perturbed samples accepted on " + sys.name());
        } catch (const Error &e) {
            c.expect(e.code() == ErrorCode::InconsistentSamples || e.code() == ErrorCode::NotAState,
                     std::string("unexpected rejection ") + e.what());
        }
    }
}

void additivity(Checker &c, Rng &rng, std::uint64_t) {
    for (const auto &sys : polytopic_gallery()) {
        const QVec &u = sys.unit();
        QVec w = random_convex_combination(rng, states_from_effects(sys.effects()));
        QVec recovered = recover_state(FrameSamples::induced(w, sys.effects().vertices()), sys);
        for (int i = 0; i < 100; ++i) {
            QVec e = random_effect(rng, sys) / 2, f = random_effect(rng, sys) / 2;
            c.expect(sys.effects().body().contains(e + f), "pair sum left E");
            std::vector<QVec> effects{e, f, e + f, e / 2, u - e, u - e - f, u - e / 2, u};
            FrameSamples v = FrameSamples::induced(recovered, effects);
            std::vector<Observable> obs{{{e, u - e}, ""}, {{e / 2, e / 2, u - e}, ""}, {{e / 2, u - e / 2}, ""},
                                        {{e, f, u - e - f}, ""}, {{e + f, u - e - f}, ""}};
            c.expect(frame_check(v, obs), "frame check failed");
            c.expect(recovered.dot(e / 2) == recovered.dot(e) / 2, "v(e/2) != v(e)/2");
            c.expect(recovered.dot(e) + recovered.dot(f) == recovered.dot(e + f), "v(e)+v(f) != v(e+f)");
        }
    }
}

void smooth(Checker &c, Rng &, std::uint64_t) {
    c.expect(smooth_classify(SmoothFamily::rebit()).classification.tag == Tag::Unrestricted, "rebit");
    c.expect(smooth_classify(SmoothFamily::noisy_rebit(Rational(1, 2))).classification.tag == Tag::NoisyUnrestricted,
             "noisy rebit");
    std::vector<Rational> deltas{Rational(1, 100), Rational(1, 10000), Rational(1, 1000000)};
    SmoothClassification a = smooth_classify(SmoothFamily::anu_bit(), deltas);
    c.expect(a.classification.tag == Tag::AlmostNuOnly, "anu bit");
    c.expect(a.anu.size() == 3, "certificate count");
    for (const auto &cert : a.anu) c.expect(cert.ok(), "certificate at delta " + to_string(cert.delta));
}

void discretization(Checker &c, Rng &, std::uint64_t) {
    for (std::size_t n : {4, 8, 16, 32, 64}) {
        c.expect(classify(discretize(SmoothFamily::rebit(), n).system).tag == Tag::Unrestricted,
                 "rebit n = " + std::to_string(n));
        c.expect(classify(discretize(SmoothFamily::noisy_rebit(Rational(1, 2)), n).system).tag ==
                     Tag::NoisyUnrestricted,
                 "noisy rebit n = " + std::to_string(n));
    }
}

Polyhedron random_polytope(Rng &rng, std::size_t dim) {
    std::uniform_int_distribution<int> count(1, 8);
    std::vector<QVec> pts;
    int n = count(rng);
    for (int i = 0; i < n; ++i) {
        QVec x(dim);
        for (std::size_t j = 0; j < dim; ++j) x[j] = random_rational(rng, 3);
        pts.push_back(x);
    }
    return hull_reduce(pts);
}

void cone_lemmas(Checker &c, Rng &rng, std::uint64_t) {
    std::uniform_int_distribution<std::size_t> dims(2, 4);
    for (int i = 0; i < 100; ++i) {
        std::size_t dim = dims(rng);
        Polyhedron a = random_polytope(rng, dim);
        Cone plus = positive_cone(a);
        c.expect(dual_cone(dual_cone(plus)) == plus, "double dual differs");
        c.expect(set_equal(dual_cone(cone_of(dim, a.points())), dual_cone(plus)), "dual of hull cone differs");

        // Nested cones reverse under duality.
        Polyhedron b = random_polytope(rng, dim);
        std::vector<QVec> both = a.points();
        both.insert(both.end(), b.points().begin(), b.points().end());
        Cone big = cone_of(dim, both);
        c.expect(plus.subset_of(big) && dual_cone(big).subset_of(dual_cone(plus)), "duality did not reverse inclusion");

        GptSystem sys = random_valid_system(rng, dim, RandomKind::Unrestricted);
        c.expect(!sys.states().body().contains(QVec(dim)), "state space contains 0");
    }
    for (const auto &sys : polytopic_gallery()) {
        Cone e_plus = positive_cone(sys.effects().body());
        for (int i = 0; i < 100; ++i) {
            QVec x(sys.ambient_dim());
            for (std::size_t j = 0; j < x.size(); ++j) x[j] = random_rational(rng, 6);
            auto [a, b] = decompose_in_cone(x, sys.effects());
            c.expect(a - b == x && e_plus.contains(a) && e_plus.contains(b), "decomposition failed on " + sys.name());
        }
    }
}

struct CriterionDef {
    const char *title;
    double limit;
    void (*run)(Checker &, Rng &, std::uint64_t);
};

const CriterionDef kCriterionDefs[kCriteria] = {
    {"W(E(S)) = S on gallery, approximant and random systems", 10, wes},
    {"GTT verdict by classification equals the W(E) = S test", 10, iff},
    {"Spekkens: W(E) is the cube, strictly larger than S, no GTT", 1, spekkens},
    {"transform reproduces (S_B, E_B) and preserves probabilities", 1, transform_check},
    {"mixing then coarse-graining reproduces G", 1, simulation},
    {"frame functions recovered exactly, perturbed samples rejected", 5, recovery},
    {"recovered functionals are additive and halve", 2, additivity},
    {"smooth families classified with certificates", 2, smooth},
    {"polygonal approximants keep their classification", 20, discretization},
    {"cone duality properties and cone decomposition", 10, cone_lemmas},
};

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
    if (id < 1 || id > kCriteria) throw Error(ErrorCode::UnknownName, "no criterion " + std::to_string(id));
    const CriterionDef &def = kCriterionDefs[id - 1];
    CriterionResult r;
    r.id = id;
    r.title = def.title;
    r.limit_seconds = def.limit;
    Checker c;
    Rng rng(seed + static_cast<std::uint64_t>(id));
    auto t0 = std::chrono::steady_clock::now();
    try {
        def.run(c, rng, seed);
    } catch (const std::exception &e) {
        c.failures.push_back(std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream detail;
    detail << c.checks << " checks";
    for (const auto &f : c.failures) detail << "; " << f;
    if (r.seconds > r.limit_seconds) detail << "; over time limit";
    r.detail = detail.str();
    r.passed = c.failures.empty() && r.seconds <= r.limit_seconds;
    return r;
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriteria; ++id) out.push_back(run_criterion(id, seed));
    return out;
}

std::string format(const CriterionResult &r) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << "criterion " << r.id << " " << (r.passed ? "PASS" : "FAIL") << " " << r.seconds << "s/" << r.limit_seconds
       << "s  " << r.title << ": " << r.detail;
    return os.str();
}

}  // namespace gpt
