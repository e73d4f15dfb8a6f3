// Copyright 2026 The triqubit Authors
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
#include <string_view>
#include <variant>

#include "triqubit/montecarlo.h"
#include "triqubit/states.h"

namespace triqubit {

using LoadedState = std::variant<PureState3, Density3>;

/// {"kind": "pure" | "density", "data": [[re, im], ...]} with 8 entries for a
/// pure state or 64 row-major entries for a density matrix. Malformed input
/// throws ParseError; a well-formed but invalid state throws InvalidState or
/// NotNormalized.
LoadedState parse_state_json(std::string_view text);
/// As parse_state_json; an unreadable file throws SinkFailure.
LoadedState read_state_file(const std::string &path);

std::string state_to_json(const PureState3 &psi);
std::string state_to_json(const Density3 &rho);

/// Reals in output tables: 12 significant digits.
std::string format_real(double x);

std::string csv_header();
/// One line, no trailing newline. Not-applicable values print as NA.
std::string format_csv_row(const SweepRow &row);

std::string summary_to_json(const SweepSummary &summary);

}  // namespace triqubit
