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

#include "gpt/io.hpp"

#include <fstream>
#include <sstream>

namespace gpt {
namespace {

[[noreturn]] void bad(const std::string &what) {
    throw Error(ErrorCode::ParseError, what);
}

const Json &field(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing key '") + key + "'");
    return j.at(key);
}

std::vector<QVec> vectors_from_json(const Json &j, std::size_t dim, const char *what) {
    if (!j.is_array()) bad(std::string(what) + " must be an array of vectors");
    std::vector<QVec> out;
    for (const auto &x : j) out.push_back(qvec_from_json(x));
    if (dim) require_dim(out, dim, what);
    return out;
}

Json vectors_to_json(std::span<const QVec> vs) {
    Json a = Json::array();
    for (const auto &v : vs) a.push_back(qvec_to_json(v));
    return a;
}

Json decimals(std::span<const QVec> vs) {
    Json a = Json::array();
    for (const auto &v : vs) a.push_back(v.to_doubles());
    return a;
}

std::size_t index_from_json(const Json &j) {
    if (!j.is_number_unsigned()) bad("outcome indices must be nonnegative integers");
    return j.get<std::size_t>();
}

}  // namespace

Rational rational_from_json(const Json &j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_number_float()) bad("floating point value " + j.dump() + "; write rationals as \"p/q\" strings");
    bad("expected a rational, got " + j.dump());
}

Json rational_to_json(const Rational &r) {
    return to_string(r);
}

QVec qvec_from_json(const Json &j) {
    if (!j.is_array()) bad("expected a vector, got " + j.dump());
    std::vector<Rational> c;
    for (const auto &x : j) c.push_back(rational_from_json(x));
    return QVec(std::move(c));
}

Json qvec_to_json(const QVec &v) {
    Json a = Json::array();
    for (const auto &x : v) a.push_back(rational_to_json(x));
    return a;
}

RawSystem raw_system_from_json(const Json &j) {
    RawSystem r;
    if (j.contains("name")) {
        if (!j.at("name").is_string()) bad("'name' must be a string");
        r.name = j.at("name").get<std::string>();
    }
    const Json &dim = field(j, "dimension");
    if (!dim.is_number_unsigned() || dim.get<std::size_t>() < 1) bad("'dimension' must be a positive integer");
    r.dimension = dim.get<std::size_t>();
    r.states = vectors_from_json(field(field(j, "states"), "vertices"), r.dimension, "state");
    r.effects = vectors_from_json(field(field(j, "effects"), "vertices"), r.dimension, "effect");
    if (r.states.empty()) throw Error(ErrorCode::EmptyInput, "no states");
    if (r.effects.empty()) throw Error(ErrorCode::EmptyInput, "no effects");
    if (j.contains("unit")) {
        r.unit = qvec_from_json(j.at("unit"));
        if (r.unit->size() != r.dimension) throw Error(ErrorCode::DimensionMismatch, "unit length");
    }
    if (j.contains("observables")) {
        for (const auto &o : j.at("observables")) {
            Observable obs;
            if (o.contains("label")) obs.label = o.at("label").get<std::string>();
            obs.outcomes = vectors_from_json(field(o, "outcomes"), r.dimension, "outcome");
            r.observables.push_back(std::move(obs));
        }
    }
    return r;
}

namespace {

std::pair<StateSpace, EffectSpace> spaces(const RawSystem &raw) {
    QVec u = raw.unit.value_or(QVec::unit(raw.dimension));
    return {StateSpace(hull_reduce(raw.states), u), EffectSpace(hull_reduce(raw.effects), u)};
}

}  // namespace

GptSystem build_system(const RawSystem &raw) {
    auto [s, e] = spaces(raw);
    return validate_system(std::move(s), std::move(e), raw.name);
}

ValidationReport check_raw(const RawSystem &raw) {
    auto [s, e] = spaces(raw);
    return check_system(s, e);
}

Json system_to_json(const GptSystem &sys, std::span<const Observable> observables) {
    Json j;
    j["name"] = sys.name();
    j["dimension"] = sys.ambient_dim();
    if (sys.unit() != QVec::unit(sys.ambient_dim())) j["unit"] = qvec_to_json(sys.unit());
    j["states"]["vertices"] = vectors_to_json(sys.states().vertices());
    j["effects"]["vertices"] = vectors_to_json(sys.effects().vertices());
    if (!observables.empty()) {
        Json a = Json::array();
        for (const auto &o : observables) a.push_back(observable_to_json(o));
        j["observables"] = a;
    }
    return j;
}

Json polyhedron_to_json(const Polyhedron &p, bool with_decimals) {
    Json j;
    j["dimension"] = p.dim();
    j["vertices"] = vectors_to_json(p.points());
    if (!p.rays().empty()) j["rays"] = vectors_to_json(p.rays());
    if (!p.lines().empty()) j["lines"] = vectors_to_json(p.lines());
    Json facets = Json::array();
    for (const auto &f : p.facets()) {
        Json h;
        h["normal"] = qvec_to_json(f.normal);
        h["offset"] = rational_to_json(f.offset);
        facets.push_back(h);
    }
    j["facets"] = facets;
    Json eqs = Json::array();
    for (const auto &e : p.equalities()) {
        Json h;
        h["normal"] = qvec_to_json(e.normal);
        h["offset"] = rational_to_json(e.offset);
        eqs.push_back(h);
    }
    j["equalities"] = eqs;
    if (with_decimals) j["decimal"] = decimals(p.points());
    return j;
}

std::optional<SmoothFamily> family_from_json(const Json &j) {
    if (!j.is_object() || !j.contains("family")) return std::nullopt;
    const std::string kind = j.at("family").get<std::string>();
    if (kind == "rebit") return SmoothFamily::rebit();
    if (kind == "anu-bit") return SmoothFamily::anu_bit();
    if (kind == "noisy-rebit") {
        Rational p = j.contains("p") ? rational_from_json(j.at("p")) : Rational(1, 2);
        return SmoothFamily::noisy_rebit(p);
    }
    throw Error(ErrorCode::UnknownName, "unknown family '" + kind + "'");
}

Json family_to_json(const SmoothFamily &f) {
    Json j;
    j["name"] = f.name();
    switch (f.kind()) {
        case SmoothFamily::Kind::Rebit: j["family"] = "rebit"; break;
        case SmoothFamily::Kind::NoisyRebit:
            j["family"] = "noisy-rebit";
            j["p"] = rational_to_json(f.p());
            break;
        case SmoothFamily::Kind::AnuBit: j["family"] = "anu-bit"; break;
    }
    j["dimension"] = f.ambient_dim();
    return j;
}

Json entry_to_json(const GalleryEntry &e) {
    if (e.is_polytopic()) return system_to_json(e.polytopic());
    return family_to_json(std::get<SmoothFamily>(e.system));
}

FrameSamples samples_from_json(const Json &j) {
    FrameSamples s;
    const Json &arr = field(j, "samples");
    if (!arr.is_array()) bad("'samples' must be an array");
    for (const auto &x : arr) s.pairs.push_back({qvec_from_json(field(x, "effect")), rational_from_json(field(x, "value"))});
    return s;
}

Json samples_to_json(const FrameSamples &s) {
    Json arr = Json::array();
    for (const auto &[e, v] : s.pairs) {
        Json x;
        x["effect"] = qvec_to_json(e);
        x["value"] = rational_to_json(v);
        arr.push_back(x);
    }
    Json j;
    j["samples"] = arr;
    return j;
}

Pipeline pipeline_from_json(const Json &j) {
    Pipeline p;
    if (j.contains("observables")) {
        const Json &obs = j.at("observables");
        if (!obs.is_object()) bad("'observables' must map names to outcome lists");
        for (const auto &[name, outcomes] : obs.items()) {
            Observable o;
            o.label = name;
            o.outcomes = vectors_from_json(outcomes, 0, "outcome");
            p.observables.emplace(name, std::move(o));
        }
    }
    if (j.contains("start")) p.start = j.at("start").get<std::string>();
    const Json &steps = field(j, "steps");
    if (!steps.is_array()) bad("'steps' must be an array");
    for (const auto &s : steps) {
        if (!s.is_object() || s.size() != 1) bad("each step must have exactly one key");
        const auto &[key, body] = *s.items().begin();
        if (key == "mix") {
            Pipeline::Mix m;
            for (const auto &part : body)
                m.parts.emplace_back(field(part, "observable").get<std::string>(), rational_from_json(field(part, "weight")));
            p.steps.emplace_back(std::move(m));
        } else if (key == "coarse") {
            Pipeline::Coarse c;
            for (const auto &block : body) {
                std::vector<std::size_t> b;
                for (const auto &i : block) b.push_back(index_from_json(i));
                c.blocks.push_back(std::move(b));
            }
            p.steps.emplace_back(std::move(c));
        } else if (key == "noisy") {
            p.steps.emplace_back(Pipeline::Noisy{rational_from_json(body)});
        } else if (key == "kernel") {
            Pipeline::Kernel k;
            for (const auto &row : body) {
                std::vector<Rational> r;
                for (const auto &x : row) r.push_back(rational_from_json(x));
                k.q.push_back(std::move(r));
            }
            p.steps.emplace_back(std::move(k));
        } else {
            bad("unknown step '" + key + "'");
        }
    }
    return p;
}

Observable run_pipeline(const Pipeline &p, std::span<const Observable> extra) {
    std::optional<Observable> current;
    auto lookup = [&](const std::string &name) -> Observable {
        if (name == "current") {
            if (!current) throw Error(ErrorCode::UnknownName, "no current observable yet");
            return *current;
        }
        if (auto it = p.observables.find(name); it != p.observables.end()) return it->second;
        for (const auto &o : extra)
            if (o.label == name) return o;
        throw Error(ErrorCode::UnknownName, "no observable named '" + name + "'");
    };
    if (p.start) current = lookup(*p.start);
    for (const auto &step : p.steps) {
        if (const auto *m = std::get_if<Pipeline::Mix>(&step)) {
            std::vector<std::pair<Observable, Rational>> parts;
            for (const auto &[name, w] : m->parts) parts.emplace_back(lookup(name), w);
            current = mix_observables(parts);
            continue;
        }
        if (!current) throw Error(ErrorCode::UnknownName, "step needs a current observable; add 'start' or a mix");
        if (const auto *c = std::get_if<Pipeline::Coarse>(&step)) {
            current = coarse_grain(*current, c->blocks);
        } else if (const auto *n = std::get_if<Pipeline::Noisy>(&step)) {
            current = noisy_observable(*current, n->p);
        } else if (const auto *k = std::get_if<Pipeline::Kernel>(&step)) {
            current = post_process(*current, k->q);
        }
    }
    if (!current) throw Error(ErrorCode::EmptyInput, "pipeline produced no observable");
    return *current;
}

Json observable_to_json(const Observable &o) {
    Json j;
    if (!o.label.empty()) j["label"] = o.label;
    j["outcomes"] = vectors_to_json(o.outcomes);
    return j;
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json read_json_file(const std::string &path) {
    std::string text = read_text_file(path);
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorCode::ParseError, path + ": " + e.what());
    }
}

void write_text_file(const std::string &path, const std::string &text) {
    std::ofstream out(path);
    if (!out || !(out << text)) throw Error(ErrorCode::IoError, "cannot write " + path);
}

}  // namespace gpt
