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

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "gpt/frame.hpp"
#include "gpt/gallery.hpp"
#include "gpt/observable.hpp"

namespace gpt {

using Json = nlohmann::ordered_json;

/// Rationals are written as "p/q" strings. On input, strings and JSON
/// integers are accepted; floats raise ParseError.
Rational rational_from_json(const Json &j);
Json rational_to_json(const Rational &r);
QVec qvec_from_json(const Json &j);
Json qvec_to_json(const QVec &v);

/// GPT system file before validation.
struct RawSystem {
    std::string name;
    std::size_t dimension = 0;  // ambient length d + 1
    std::vector<QVec> states;
    std::vector<QVec> effects;
    std::optional<QVec> unit;
    std::vector<Observable> observables;
};

/// Throws ParseError, DimensionMismatch.
RawSystem raw_system_from_json(const Json &j);
/// Hulls and validates. Throws ValidationError.
GptSystem build_system(const RawSystem &raw);
/// Axiom report for a raw system without throwing on violations.
ValidationReport check_raw(const RawSystem &raw);

Json system_to_json(const GptSystem &sys, std::span<const Observable> observables = {});
/// {"dimension", "vertices", ["rays", "lines"], "facets", "equalities"}.
/// `decimals` adds a "decimal" view of the vertices.
Json polyhedron_to_json(const Polyhedron &p, bool decimals = false);

/// A smooth family file: {"name", "family": "rebit" | "noisy-rebit" | "anu-bit", "p"?}.
std::optional<SmoothFamily> family_from_json(const Json &j);
Json family_to_json(const SmoothFamily &f);

/// Gallery entry in the system schema (polytopic) or the family schema.
Json entry_to_json(const GalleryEntry &e);

/// {"samples": [{"effect": [...], "value": "p/q"}]}
FrameSamples samples_from_json(const Json &j);
Json samples_to_json(const FrameSamples &s);

/// Observable-processing pipeline:
/// {"observables": {name: [[...], ...]}, "start"?: name,
///  "steps": [{"mix": [{"observable": name, "weight": "p/q"}]},
///            {"coarse": [[0, 1], [2]]}, {"noisy": "p/q"},
///            {"kernel": [[...], ...]}]}
/// The name "current" refers to the result of the previous step.
struct Pipeline {
    struct Mix {
        std::vector<std::pair<std::string, Rational>> parts;
    };
    struct Coarse {
        std::vector<std::vector<std::size_t>> blocks;
    };
    struct Noisy {
        Rational p;
    };
    struct Kernel {
        std::vector<std::vector<Rational>> q;
    };
    using Step = std::variant<Mix, Coarse, Noisy, Kernel>;

    std::map<std::string, Observable> observables;
    std::optional<std::string> start;
    std::vector<Step> steps;
};

Pipeline pipeline_from_json(const Json &j);
/// Runs the steps. `extra` supplies observables declared in the system file.
/// Throws UnknownName for undeclared observables.
Observable run_pipeline(const Pipeline &p, std::span<const Observable> extra = {});

Json observable_to_json(const Observable &o);

/// Throws ParseError on malformed JSON and IoError on unreadable files.
Json read_json_file(const std::string &path);
std::string read_text_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &text);

}  // namespace gpt
