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
#include <variant>
#include <vector>

#include "gpt/smooth.hpp"
#include "gpt/system.hpp"

namespace gpt {

struct GalleryEntry {
    std::string name;
    std::variant<GptSystem, SmoothFamily> system;
    Classification expected;
    std::optional<Polyhedron> expected_WE;
    std::optional<Polyhedron> expected_ES;
    std::string source;
    /// Coordinates chosen here because none are given for the shape.
    bool declared_substitute = false;

    bool is_polytopic() const noexcept { return std::holds_alternative<GptSystem>(system); }
    const GptSystem &polytopic() const { return std::get<GptSystem>(system); }
};

/// Base names accepted by load; parametrized ones also take "name(p)".
const std::vector<std::string> &gallery_names();

/// Loads "bit", "bit-transformed", "noisy-bit", "noisy-bit(p)", "notch-bit",
/// "squit", "spekkens", "rebit", "noisy-rebit", "noisy-rebit(p)", "anu-bit".
/// The default noise is 1/2; `p` overrides it. Throws UnknownName.
GalleryEntry load(const std::string &name, const std::optional<Rational> &p = std::nullopt);

struct EntryResult {
    std::string name;
    Tag computed;
    std::vector<std::string> failures;
    bool passed() const noexcept { return failures.empty(); }
};

struct GalleryReport {
    std::vector<EntryResult> entries;
    std::size_t failures() const;
};

/// Checks one entry against its expected fields.
EntryResult run_entry(const GalleryEntry &entry);

/// Runs every gallery entry, or only the named ones when a filter is given.
/// An empty filter yields an empty report.
GalleryReport run_all(const std::optional<std::vector<std::string>> &filter = std::nullopt);

}  // namespace gpt
