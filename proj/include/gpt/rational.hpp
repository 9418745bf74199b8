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

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>

namespace gpt {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Parses "p/q" or "p" (optional sign). Decimal and exponent notation are
/// rejected so that no binary floating point value can leak into the exact
/// backend. Throws Error(ParseError).
Rational parse_rational(std::string_view text);

/// Lowest-terms "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational &value);

double to_double(const Rational &value);

/// Nearest rational with denominator `denominator` (round half away from zero).
Rational round_to_denominator(double value, long denominator);

}  // namespace gpt
