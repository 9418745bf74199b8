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

#include <initializer_list>

#include "gpt/qvec.hpp"

namespace gpt::testing {

inline QVec v(std::initializer_list<long> xs) {
    std::vector<Rational> c;
    for (long x : xs) c.emplace_back(x);
    return QVec(std::move(c));
}

inline Rational q(long p, long r = 1) {
    return Rational(p, r);
}

}  // namespace gpt::testing
