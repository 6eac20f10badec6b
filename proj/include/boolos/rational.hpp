// Copyright 2026 The Boolos Engine Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace boolos {

/// Exact arbitrary-precision fraction. Every probability in the engine is one
/// of these; nothing is ever rounded to floating point.
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws std::invalid_argument if den == 0.
Rational make_rational(long num, long den = 1);

/// Renders as "num/den", always with an explicit denominator ("1/1", "0/1").
std::string format_rational(const Rational& r);

/// Accepts "num/den" or a bare integer. Throws std::invalid_argument on
/// malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace boolos
