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

#include "gpt/rational.hpp"

#include <cmath>
#include <regex>

#include "gpt/error.hpp"

namespace gpt {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::Unbounded: return "Unbounded";
        case ErrorCode::EmptyIntersection: return "EmptyIntersection";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::SingularMatrix: return "SingularMatrix";
        case ErrorCode::TooManyOutcomes: return "TooManyOutcomes";
        case ErrorCode::ProbabilityOutOfRange: return "ProbabilityOutOfRange";
        case ErrorCode::WeightsNotNormalized: return "WeightsNotNormalized";
        case ErrorCode::InvalidPartition: return "InvalidPartition";
        case ErrorCode::InvalidKernel: return "InvalidKernel";
        case ErrorCode::InconsistentSamples: return "InconsistentSamples";
        case ErrorCode::NotAState: return "NotAState";
        case ErrorCode::UnderDetermined: return "UnderDetermined";
        case ErrorCode::MissingSample: return "MissingSample";
        case ErrorCode::InvalidSample: return "InvalidSample";
        case ErrorCode::UnknownName: return "UnknownName";
        case ErrorCode::ValidationFailed: return "ValidationFailed";
        case ErrorCode::InternalInconsistency: return "InternalInconsistency";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

Rational parse_rational(std::string_view text) {
    static const std::regex pattern(R"(\s*([+-]?[0-9]+)(?:\s*/\s*([0-9]+))?\s*)");
    std::match_results<std::string_view::const_iterator> m;
    if (!std::regex_match(text.begin(), text.end(), m, pattern)) {
        throw Error(ErrorCode::ParseError, "not a rational literal: '" + std::string(text) + "'");
    }
    Integer num(m[1].str());
    Integer den(1);
    if (m[2].matched) {
        den = Integer(m[2].str());
        if (den == 0) {
            throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
        }
    }
    return Rational(num, den);
}

std::string to_string(const Rational &value) {
    return value.str();
}

double to_double(const Rational &value) {
    return value.convert_to<double>();
}

Rational round_to_denominator(double value, long denominator) {
    double scaled = std::round(value * static_cast<double>(denominator));
    return Rational(Integer(static_cast<long long>(scaled)), Integer(denominator));
}

}  // namespace gpt
