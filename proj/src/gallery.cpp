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

#include "gpt/gallery.hpp"

#include <regex>

namespace gpt {
namespace {

QVec q2(Rational a, Rational b) {
    return QVec{std::move(a), std::move(b)};
}

Polyhedron hull(std::vector<QVec> pts) {
    return hull_reduce(pts);
}

GptSystem make(std::vector<QVec> states, std::vector<QVec> effects, const std::string &name) {
    return validate_system(StateSpace::from_vertices(states), EffectSpace::from_vertices(effects), name);
}

std::vector<QVec> sb_states() {
    return {q2(-1, 1), q2(1, 1)};
}

std::vector<QVec> eb_effects() {
    return {q2(0, 0), q2(0, 1), q2(Rational(-1, 2), Rational(1, 2)), q2(Rational(1, 2), Rational(1, 2))};
}

GalleryEntry bit() {
    std::vector<QVec> s{q2(0, 1), q2(1, 1)};
    std::vector<QVec> e{q2(0, 0), q2(0, 1), q2(1, 0), q2(-1, 1)};
    GalleryEntry g{"bit", make(s, e, "bit"), {Tag::Unrestricted, std::nullopt}, hull(s), hull(e),
                   "classical bit, probability coordinates", false};
    return g;
}

GalleryEntry bit_transformed() {
    auto s = sb_states();
    auto e = eb_effects();
    return {"bit-transformed", make(s, e, "bit-transformed"), {Tag::Unrestricted, std::nullopt}, hull(s), hull(e),
            "classical bit after the change of coordinates M = [[2,-1],[0,1]]", false};
}

GalleryEntry noisy_bit(const Rational &p) {
    if (p <= 0 || p >= 1) throw Error(ErrorCode::ProbabilityOutOfRange, "noisy-bit needs 0 < p < 1");
    auto s = sb_states();
    Polyhedron eb = hull(eb_effects());
    QVec u{0, 1};
    std::string name = "noisy-bit(" + to_string(p) + ")";
    GptSystem sys = validate_system(StateSpace::from_vertices(s), EffectSpace(noisy_effects(eb, u, p), u), name);
    return {name, std::move(sys), {Tag::NoisyUnrestricted, std::nullopt}, hull(s), eb,
            "restricted bit with noisy extremal effects; declared coordinates", true};
}

GalleryEntry notch_bit() {
    auto s = sb_states();
    std::vector<QVec> e{q2(0, 0), q2(0, 1), q2(Rational(-1, 4), Rational(1, 4)), q2(Rational(1, 4), Rational(3, 4))};
    std::vector<QVec> we{q2(-3, 1), q2(1, 1)};
    return {"notch-bit", make(s, e, "notch-bit"), {Tag::NotAlmostNu, q2(Rational(1, 2), Rational(1, 2))}, hull(we),
            hull(eb_effects()), "restricted bit missing the (1,1) direction; declared coordinates", true};
}

GalleryEntry squit() {
    std::vector<QVec> s{QVec{1, 1, 1}, QVec{1, -1, 1}, QVec{-1, 1, 1}, QVec{-1, -1, 1}};
    Rational h(1, 2);
    std::vector<QVec> e{QVec{0, 0, 0}, QVec{0, 0, 1}, QVec{h, 0, h}, QVec{-h, 0, h}, QVec{0, h, h}, QVec{0, -h, h}};
    return {"squit", make(s, e, "squit"), {Tag::Unrestricted, std::nullopt}, hull(s), hull(e),
            "square state space with octahedral effect space", false};
}

GalleryEntry spekkens() {
    std::vector<QVec> s;
    std::vector<QVec> e{QVec(4), QVec::unit(4)};
    for (std::size_t i = 0; i < 3; ++i)
        for (int sign : {1, -1}) {
            QVec w(4);
            w[i] = sign;
            w[3] = 1;
            s.push_back(w);
            e.push_back(w / 2);
        }
    std::vector<QVec> cube, es{QVec(4), QVec::unit(4)};
    for (int a : {1, -1})
        for (int b : {1, -1})
            for (int c : {1, -1}) {
                QVec w{a, b, c, 1};
                cube.push_back(w);
                es.push_back(w / 2);
            }
    QVec witness{Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)};
    return {"spekkens", make(s, e, "spekkens"), {Tag::NotAlmostNu, witness}, hull(cube), hull(es),
            "toy model: octahedral states, effects at the half-vertices", false};
}

GalleryEntry smooth(const SmoothFamily &f, Tag tag, const std::string &source) {
    return {f.name(), f, {tag, std::nullopt}, std::nullopt, std::nullopt, source, false};
}

}  // namespace

const std::vector<std::string> &gallery_names() {
    static const std::vector<std::string> names{"bit",   "bit-transformed", "noisy-bit", "notch-bit", "squit",
                                                "spekkens", "rebit",        "noisy-rebit", "anu-bit"};
    return names;
}

GalleryEntry load(const std::string &name, const std::optional<Rational> &p) {
    static const std::regex with_param(R"(([a-z-]+)\(([^()]*)\))");
    std::string base = name;
    Rational noise = p.value_or(Rational(1, 2));
    std::smatch m;
    if (std::regex_match(name, m, with_param)) {
        base = m[1];
        if (!p) noise = parse_rational(m[2].str());
    }
    if (base == "bit") return bit();
    if (base == "bit-transformed") return bit_transformed();
    if (base == "noisy-bit") return noisy_bit(noise);
    if (base == "notch-bit") return notch_bit();
    if (base == "squit") return squit();
    if (base == "spekkens") return spekkens();
    if (base == "rebit") return smooth(SmoothFamily::rebit(), Tag::Unrestricted, "disc state space with ring of extremal effects");
    if (base == "noisy-rebit") {
        return smooth(SmoothFamily::noisy_rebit(noise), Tag::NoisyUnrestricted, "rebit with noisy ring effects");
    }
    if (base == "anu-bit") {
        GalleryEntry g = smooth(SmoothFamily::anu_bit(), Tag::AlmostNuOnly, "bit whose effect space is a lens of two discs");
        g.expected.witness = q2(Rational(1, 2), Rational(1, 2));
        return g;
    }
    throw Error(ErrorCode::UnknownName, "no gallery entry named '" + name + "'");
}

std::size_t GalleryReport::failures() const {
    std::size_t n = 0;
    for (const auto &e : entries) n += !e.passed();
    return n;
}

EntryResult run_entry(const GalleryEntry &entry) {
    EntryResult r{entry.name, Tag::NotAlmostNu, {}};
    auto fail = [&](const std::string &what) { r.failures.push_back(what); };
    try {
        if (!entry.is_polytopic()) {
            SmoothClassification c = smooth_classify(std::get<SmoothFamily>(entry.system));
            r.computed = c.classification.tag;
            if (r.computed != entry.expected.tag) fail("tag " + std::string(to_string(r.computed)));
            if (entry.expected.witness && c.classification.witness != entry.expected.witness) fail("witness differs");
            return r;
        }
        const GptSystem &sys = entry.polytopic();
        Classification c = classify(sys);
        r.computed = c.tag;
        if (c.tag != entry.expected.tag) fail("tag " + std::string(to_string(c.tag)));
        if (entry.expected.witness && c.witness != entry.expected.witness) {
            fail("witness " + (c.witness ? c.witness->str() : std::string("none")));
        }
        Polyhedron es = unrestricted_effects(sys.states());
        if (!set_equal(states_from_effects_unchecked(EffectSpace(es, sys.unit())), sys.states().body())) {
            fail("W(E(S)) != S");
        }
        if (entry.expected_ES && !set_equal(es, *entry.expected_ES)) fail("E(S) differs from expected");
        Polyhedron we = states_from_effects_unchecked(sys.effects());
        if (entry.expected_WE && !set_equal(we, *entry.expected_WE)) fail("W(E) differs from expected");
        bool gtt = admits_gtt(sys);
        if (gtt != admits_gtt(entry.expected.tag)) fail("GTT verdict");
        if (admits_gtt(entry.expected.tag) && !set_equal(we, sys.states().body())) fail("W(E) != S");
    } catch (const Error &e) {
        fail(e.what());
    }
    return r;
}

GalleryReport run_all(const std::optional<std::vector<std::string>> &filter) {
    GalleryReport report;
    const std::vector<std::string> &names = filter ? *filter : gallery_names();
    for (const auto &n : names) {
        try {
            report.entries.push_back(run_entry(load(n)));
        } catch (const Error &e) {
            report.entries.push_back({n, Tag::NotAlmostNu, {e.what()}});
        }
    }
    return report;
}

}  // namespace gpt
