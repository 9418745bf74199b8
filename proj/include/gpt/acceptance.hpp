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

#include <cstdint>
#include <string>
#include <vector>

namespace gpt {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0;
    double limit_seconds = 0;
};

inline constexpr int kCriteria = 10;

/// Runs one acceptance criterion (1..kCriteria). A criterion fails if any
/// check fails or if it exceeds its time limit.
CriterionResult run_criterion(int id, std::uint64_t seed = 2026);
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 2026);

/// "criterion 3 PASS 0.12s/1s  Spekkens ...: detail"
std::string format(const CriterionResult &r);

}  // namespace gpt
