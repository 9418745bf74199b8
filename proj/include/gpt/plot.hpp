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

#include <string>

#include "gpt/system.hpp"

namespace gpt {

struct PlotOptions {
    /// Value of the last effect coordinate at which 3- and 4-dimensional
    /// effect spaces are cut.
    Rational slice = Rational(1, 2);
    /// Draw the rays of S^* (2-dimensional systems).
    bool dual_cone = true;
    /// Label vertices with decimal coordinates.
    bool float_view = false;
};

/// Two panels: the state space and the effect space. 2-dimensional systems
/// are drawn as they are; in dimension 3 the states lie in the plane
/// x3 = 1 and the effects are cut at x3 = slice; in dimension 4 the same
/// cuts leave 3-dimensional bodies, drawn as isometric edge diagrams.
/// Throws DimensionMismatch for other dimensions.
std::string render_svg(const GptSystem &sys, const PlotOptions &opt = {});

/// p intersected with {x : x[k] = value}.
Polyhedron cut(const Polyhedron &p, std::size_t k, const Rational &value);

}  // namespace gpt
